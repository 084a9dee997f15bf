#include "partlab/acceptance.hpp"
#include "partlab/bijections.hpp"
#include "partlab/errors.hpp"
#include "partlab/families.hpp"
#include "partlab/gf.hpp"
#include "partlab/identities.hpp"
#include "partlab/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace partlab;

enum exit_code : int { ok = 0, verify_failed = 1, usage = 2, resource = 3, domain = 4 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s, const char* what)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw usage_error(std::string("invalid ") + what + " '" + s + "'");
    return v;
}

struct int_flags {
    std::map<std::string, std::optional<int>> values;

    void attach(CLI::App* app, std::initializer_list<const char*> names)
    {
        for (const char* name : names)
            app->add_option(std::string("--") + name, values[name], std::string("parameter ") + name);
    }

    param_map given() const
    {
        param_map out;
        for (const auto& [name, v] : values)
            if (v)
                out[name] = *v;
        return out;
    }
};

struct config {
    std::optional<int> max_n_flag;
    std::optional<int> order_flag;

    limits resolve() const
    {
        limits lim;
        if (const char* env = std::getenv("PARTLAB_MAX_N"); env && *env)
            lim.max_n = parse_int(env, "PARTLAB_MAX_N");
        if (max_n_flag)
            lim.max_n = *max_n_flag;
        if (order_flag)
            lim.series_order = *order_flag;
        if (lim.max_n < 0 || lim.series_order < 0)
            throw usage_error("limits must be non-negative");
        return lim;
    }
};

std::pair<int, int> parse_range(const std::vector<std::string>& args)
{
    if (args.size() == 1) {
        const std::string& s = args[0];
        auto dots = s.find("..");
        if (dots == std::string::npos) {
            int n = parse_int(s, "range");
            return {n, n};
        }
        return {parse_int(s.substr(0, dots), "range start"), parse_int(s.substr(dots + 2), "range end")};
    }
    if (args.size() == 2)
        return {parse_int(args[0], "range start"), parse_int(args[1], "range end")};
    throw usage_error("expected a range A..B or A B");
}

void write_rows(const std::vector<std::pair<int, integer>>& rows, const std::string& format, std::ostream& out,
                const std::string& name)
{
    if (format == "csv") {
        for (const auto& [n, v] : rows)
            out << n << ',' << to_string(v) << '\n';
    } else if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [n, v] : rows) {
            nlohmann::ordered_json row;
            row["n"] = n;
            if (v.fits_slong_p())
                row["value"] = static_cast<long>(v.get_si());
            else
                row["value"] = to_string(v);
            arr.push_back(row);
        }
        out << arr.dump(2) << '\n';
    } else {
        out << name << '\n';
        for (const auto& [n, v] : rows)
            out << "  n=" << n << "  " << to_string(v) << '\n';
    }
}

int cmd_table(const std::string& key, const param_map& params, const std::vector<std::string>& range,
              const std::string& eng_text, const std::string& format, const limits& lim)
{
    auto [from, to] = parse_range(range);
    if (from < 0 || to < from)
        throw usage_error("empty or negative range");
    family_id f = make_family(key, params);
    engine e = parse_engine(eng_text);
    if (e != engine::series && to > lim.max_n)
        throw resource_limit("n=" + std::to_string(to) + " exceeds the enumeration cap " + std::to_string(lim.max_n));
    if (e != engine::enumeration && to > lim.series_order)
        throw resource_limit("n=" + std::to_string(to) + " exceeds the series order limit " +
                             std::to_string(lim.series_order));
    if (e == engine::series && !has_closed_form(f))
        throw usage_error(describe(f) + " has no closed form; use --engine enum");

    std::optional<series> s;
    if (e != engine::enumeration && has_closed_form(f))
        s = gf_family(f, to);
    std::vector<std::pair<int, integer>> rows;
    for (int n = from; n <= to; ++n) {
        if (e == engine::series) {
            rows.emplace_back(n, (*s)[n]);
            continue;
        }
        integer v = count_enum(f, n, lim.max_n);
        if (s && (*s)[n] != v) {
            std::cerr << "error: " << describe(f) << " at n=" << n << ": enumeration " << to_string(v)
                      << " but series " << to_string((*s)[n]) << '\n';
            write_rows(rows, format, std::cout, describe(f));
            return verify_failed;
        }
        rows.emplace_back(n, v);
    }
    write_rows(rows, format, std::cout, describe(f));
    return ok;
}

int cmd_series(const std::string& key, const param_map& params, int order, const limits& lim)
{
    if (order < 0)
        throw usage_error("order must be non-negative");
    if (order > lim.series_order)
        throw resource_limit("order " + std::to_string(order) + " exceeds the series order limit " +
                             std::to_string(lim.series_order));
    family_id f = make_family(key, params);
    if (!has_closed_form(f))
        throw usage_error(describe(f) + " has no closed form");
    series s = gf_family(f, order);
    std::cout << "n,coefficient\n";
    for (int n = 0; n <= order; ++n)
        std::cout << n << ',' << to_string(s[n]) << '\n';
    return ok;
}

param_map restrict_to(const identity_spec& spec, const param_map& overrides)
{
    param_map out;
    for (const auto& [name, v] : overrides)
        if (std::find(spec.params.begin(), spec.params.end(), name) != spec.params.end())
            out[name] = v;
    return out;
}

int cmd_verify(const std::string& target, const param_map& overrides, int n_max, const std::string& eng_text,
               const std::string& format, int jobs, bool timing, const limits& lim)
{
    if (n_max < 1)
        throw usage_error("empty range: --n-max must be >= 1");
    if (jobs < 1)
        throw usage_error("--jobs must be >= 1");
    engine e = parse_engine(eng_text);
    std::vector<verify_cell> cells;
    if (target == "all") {
        for (const auto& spec : list_identities()) {
            if (e == engine::series && !spec.series_allowed) {
                std::cerr << "note: " << spec.id << " skipped, not supported by the series engine\n";
                continue;
            }
            for (auto& c : grid_cells(spec, restrict_to(spec, overrides)))
                cells.push_back(std::move(c));
        }
    } else {
        cells = grid_cells(find_identity(target), overrides);
    }

    auto reports = run_cells(cells, n_max, e, lim, jobs);
    if (format == "json")
        std::cout << reports_json(reports, timing);
    else if (format == "csv")
        std::cout << reports_csv(reports, timing);
    else
        std::cout << reports_pretty(reports, timing);
    return batch_ok(reports) ? ok : verify_failed;
}

void print_trace(const bijection_trace& tr)
{
    for (const auto& s : tr.steps) {
        std::cout << s.label << ": " << (s.value ? s.value->str() : std::string("-"));
        if (!s.note.empty())
            std::cout << "  (" << s.note << ")";
        std::cout << '\n';
    }
    std::cout << tr.output.str() << '\n';
}

int need(const param_map& p, const char* name, const std::string& map)
{
    auto it = p.find(name);
    if (it == p.end())
        throw usage_error("map " + map + " needs --" + name);
    return it->second;
}

int cmd_map(const std::string& which, const param_map& params, const std::string& text, bool inverse)
{
    partition lambda = parse_partition(text);
    bijection_trace tr;
    if (which == "glaisher") {
        int t = need(params, "t", which);
        partition out = inverse ? glaisher_inv(t, lambda) : glaisher(t, lambda);
        tr = {lambda, out, {{"input", lambda, {}}, {"output", out, {}}}};
    } else if (which == "genr") {
        int p = need(params, "p", which), k = need(params, "k", which), r = need(params, "r", which);
        tr = inverse ? genr_d_to_f(p, k, r, lambda) : genr_f_to_d(p, k, r, lambda);
    } else if (which == "dpk") {
        int p = need(params, "p", which), k = need(params, "k", which);
        tr = inverse ? dp_to_dpk(p, k, lambda) : dpk_to_dp(p, k, lambda);
    } else if (which == "var0") {
        int residue = need(params, "residue", which);
        tr = var0_map(inverse ? direction::inverse : direction::forward, residue, lambda);
    } else {
        throw usage_error("unknown bijection '" + which + "' (glaisher, genr, dpk, var0)");
    }
    print_trace(tr);
    return ok;
}

int cmd_selftest(const std::vector<std::string>& only, int jobs)
{
    auto results = run_acceptance(only, jobs, [](const criterion_result& r) {
        std::cout << format_result(r) << '\n';
        for (const auto& n : r.notes)
            std::cout << "     " << n << '\n';
        std::cout.flush();
    });
    return all_passed(results) ? ok : verify_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"partlab: partition identities, generating functions and bijections"};
    app.require_subcommand(1);
    config cfg;
    app.add_option("--max-n", cfg.max_n_flag, "enumeration cap (overrides PARTLAB_MAX_N)");
    app.add_option("--max-order", cfg.order_flag, "largest series order accepted");

    std::string family, engine_text = "enum", format = "csv", target, bijection, text;
    std::vector<std::string> range, only;
    int series_order = 20, n_max = 30, jobs = 1;
    bool timing = false, inverse = false;

    auto* table = app.add_subcommand("table", "counts of a family over a range of n");
    table->add_option("family", family, "family key")->required();
    table->add_option("range", range, "A..B or A B")->required()->expected(1, 2);
    table->add_option("--engine", engine_text, "enum, series or both");
    table->add_option("--format", format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
    int_flags table_params;
    table_params.attach(table, {"p", "k", "r", "t", "alpha", "i"});

    auto* ser = app.add_subcommand("series", "coefficients of a family's generating function");
    ser->add_option("family", family, "family key")->required();
    ser->add_option("--order", series_order, "highest coefficient printed");
    int_flags series_params;
    series_params.attach(ser, {"p", "k", "r", "t", "alpha", "i"});

    auto* ver = app.add_subcommand("verify", "check an identity, or all of them, on a grid");
    ver->add_option("id", target, "identity id or 'all'")->required();
    ver->add_option("--n-max", n_max, "largest n checked");
    ver->add_option("--engine", engine_text, "enum, series or both");
    std::string verify_format = "pretty";
    ver->add_option("--format", verify_format, "csv, json or pretty")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    ver->add_option("--jobs", jobs, "worker threads");
    ver->add_flag("--timing", timing, "record wall time per cell");
    int_flags verify_params;
    verify_params.attach(ver, {"p", "k", "r", "t", "alpha", "m", "swapped"});

    auto* map = app.add_subcommand("map", "apply a bijection and print its trace");
    map->add_option("bijection", bijection, "glaisher, genr, dpk or var0")->required();
    map->add_option("partition", text, "e.g. 13^10,7^30,1^2")->required();
    map->add_flag("--inverse", inverse, "apply the inverse map");
    int_flags map_params;
    map_params.attach(map, {"p", "k", "r", "t", "residue"});

    auto* self = app.add_subcommand("selftest", "run the acceptance suite");
    self->add_option("--only", only, "criterion ids, e.g. AC1");
    self->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    bool in_map = map->parsed();
    try {
        limits lim = cfg.resolve();
        if (table->parsed())
            return cmd_table(family, table_params.given(), range, engine_text, format, lim);
        if (ser->parsed())
            return cmd_series(family, series_params.given(), series_order, lim);
        if (ver->parsed())
            return cmd_verify(target, verify_params.given(), n_max, engine_text, verify_format, jobs, timing, lim);
        if (in_map)
            return cmd_map(bijection, map_params.given(), text, inverse);
        if (self->parsed())
            return cmd_selftest(only, jobs);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const resource_limit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return resource;
    } catch (const error& e) {
        // domain violations are exit 4 for map inputs and bad arguments elsewhere
        std::cerr << "error: " << e.what() << '\n';
        return in_map ? domain : usage;
    }
    return usage;
}
