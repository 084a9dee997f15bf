#include "partlab/identities.hpp"

#include "partlab/errors.hpp"
#include "partlab/families.hpp"
#include "partlab/gf.hpp"
#include "partlab/series.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace partlab {

namespace {

param_map pm(std::initializer_list<std::pair<const std::string, int>> v) { return param_map(v); }

std::vector<identity_spec> build_identities()
{
    using ck = claim_kind;
    std::vector<identity_spec> out;

    out.push_back({"I1", "a(n) = c(n)", ck::equality, {}, true, 1, {{}}});
    out.push_back({"I2", "c(n) = (-1)^n b(n)", ck::equality, {}, false, 1, {{}}});
    out.push_back({"I3", "2 | a(n) - b'(n)", ck::divisibility, {}, true, 1, {{}}});

    std::vector<param_map> g4;
    for (int p = 2; p <= 5; ++p)
        for (int r = 0; r <= p - 2; ++r)
            g4.push_back(pm({{"p", p}, {"r", r}}));
    out.push_back({"I4", "a_r(n,p) = g_r(n,p) = g_{r,o}(n,p) - g_{r,e}(n,p)", ck::equality, {"p", "r"}, true, 1,
                   g4});

    out.push_back({"I5", "p | a(n,p) - o_p(n)", ck::divisibility, {"p"}, true, 0,
                   {pm({{"p", 2}}), pm({{"p", 3}}), pm({{"p", 5}})}});
    out.push_back({"I6", "a(5n+4,5) = 0 (mod 5), a(7n+5,7) = 0 (mod 7), a(11n+6,11) = 0 (mod 11)",
                   ck::congruence, {"m"}, true, 0, {pm({{"m", 5}}), pm({{"m", 7}}), pm({{"m", 11}})}});
    out.push_back({"I7", "o_{p,o}(n) = h_p(n,p) and o_{p,e}(n) = h_0(n,p)", ck::equality, {"p"}, true, 1,
                   {pm({{"p", 2}}), pm({{"p", 3}}), pm({{"p", 4}})}});
    out.push_back({"I8", "d_e(n) = f_0(n) and d_o(n) = f_2(n)", ck::equality, {}, true, 1, {{}}});
    out.push_back({"I9", "d_e(n) = pentagonal recurrence + gamma(n) at multiples of 4", ck::equality, {}, true, 1,
                   {{}}});
    out.push_back({"I10", "sum_j d_o(n - j(j+1)/2) = [n even] sigma_0(n / 2^v2(n)) (mod 2)", ck::parity, {}, true,
                   1, {{}}});

    std::vector<param_map> g11;
    for (int p = 2; p <= 3; ++p)
        for (int k = 2; k <= 4; ++k)
            for (int r = 0; r < p; ++r)
                g11.push_back(pm({{"p", p}, {"k", k}, {"r", r}}));
    out.push_back({"I11", "f_p(n,k,r) = d_p(n,k,r)", ck::equality, {"p", "k", "r"}, true, 1, g11});

    out.push_back({"I12", "o_k(n) = d_k(n), and d_4(n) = d_e(n)", ck::equality, {"k"}, false, 1,
                   {pm({{"k", 2}}), pm({{"k", 3}}), pm({{"k", 4}}), pm({{"k", 5}})}});
    out.push_back({"I13", "d_{pk}(n) = d_p(n,k,0)", ck::equality, {"p", "k"}, false, 0,
                   {pm({{"p", 2}, {"k", 2}}), pm({{"p", 2}, {"k", 3}}), pm({{"p", 3}, {"k", 2}}),
                    pm({{"p", 3}, {"k", 4}})}});

    std::vector<param_map> g14;
    for (int p = 2; p <= 3; ++p)
        for (int k = 2; k <= p; ++k)
            for (int alpha = k; alpha <= k + 1; ++alpha)
                g14.push_back(pm({{"alpha", alpha}, {"k", k}, {"p", p}}));
    out.push_back({"I14",
                   "sum (g_o - g_e)(n,alpha,k,p) q^n = (q^k;q^k)/(q;q) sum_m q^(pm+alpha)/(1+q^(pm+alpha))",
                   ck::series_equality, {"alpha", "k", "p"}, true, 0, g14});

    std::vector<param_map> g15;
    for (int p = 2; p <= 3; ++p)
        for (int sw = 0; sw <= 1; ++sw)
            g15.push_back(pm({{"p", p}, {"swapped", sw}}));
    out.push_back({"I15",
                   "swapped=0: g_o(n,p,p,p) = h_0(n,p), g_e(n,p,p,p) = h_p(n,p); swapped=1: g_o = h_p, g_e = h_0",
                   ck::equality, {"p", "swapped"}, true, 0, g15});

    out.push_back({"I16", "multiplicities <= t-1 equinumerous with no part divisible by t", ck::equality, {"t"},
                   true, 0, {pm({{"t", 2}}), pm({{"t", 3}}), pm({{"t", 4}}), pm({{"t", 5}})}});
    return out;
}

// Evaluates family values through the selected engine, memoised.
class evaluator {
public:
    evaluator(engine e, int n_max, const limits& lim)
        : eng_(e)
        , n_max_(n_max)
        , lim_(lim)
    {
    }

    integer family(const family_id& f, int n)
    {
        std::string key = describe(f);
        auto memo_key = std::make_pair(key, n);
        if (auto it = memo_.find(memo_key); it != memo_.end())
            return it->second;

        integer value;
        if (eng_ == engine::series) {
            value = series_of(f, key).coefficient(n);
        } else {
            value = count_enum(f, n, lim_.max_n);
            if (eng_ == engine::both && has_closed_form(f)) {
                integer from_series = series_of(f, key).coefficient(n);
                if (from_series != value && !mismatch)
                    mismatch = counterexample{n, value, from_series,
                                              "enumeration and series disagree for " + key};
            }
        }
        memo_.emplace(memo_key, value);
        return value;
    }

    integer closed(const std::string& key, const std::function<series(int)>& build, int n)
    {
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, build(n_max_)).first;
        return it->second.coefficient(n);
    }

    engine eng() const { return eng_; }

    std::optional<counterexample> mismatch;

private:
    const series& series_of(const family_id& f, const std::string& key)
    {
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, gf_family(f, n_max_)).first;
        return it->second;
    }

    engine eng_;
    int n_max_;
    limits lim_;
    std::map<std::string, series> cache_;
    std::map<std::pair<std::string, int>, integer> memo_;
};

using term = std::function<integer(evaluator&, int)>;

struct claim {
    std::string label;
    term lhs;
    term rhs;
    long modulus = 0; // 0: equality; m: m divides lhs - rhs
    std::function<bool(int)> applies = {};
};

term fam(std::string_view key, const param_map& params = {})
{
    family_id f = make_family(key, params);
    return [f](evaluator& ev, int n) { return ev.family(f, n); };
}

term zero()
{
    return [](evaluator&, int) { return integer(0); };
}

int get(const param_map& p, const char* name) { return p.at(name); }

std::vector<claim> build_claims(const identity_spec& spec, const param_map& q)
{
    const std::string& id = spec.id;
    if (id == "I1")
        return {{"a = c", fam("a"), fam("c")}};
    if (id == "I2") {
        term b = fam("b");
        term signed_b = [b](evaluator& ev, int n) { return n % 2 ? integer(-b(ev, n)) : b(ev, n); };
        return {{"c = (-1)^n b", fam("c"), signed_b}};
    }
    if (id == "I3")
        return {{"2 | a - b'", fam("a"), fam("b_prime"), 2}};
    if (id == "I4") {
        param_map pr{{"p", get(q, "p")}, {"r", get(q, "r")}};
        term odd = fam("g_r_odd", pr), even = fam("g_r_even", pr);
        term diff = [odd, even](evaluator& ev, int n) { return integer(odd(ev, n) - even(ev, n)); };
        return {{"a_r = g_r", fam("a_r", pr), fam("g_r", pr)}, {"g_r = g_r,o - g_r,e", fam("g_r", pr), diff}};
    }
    if (id == "I5") {
        int p = get(q, "p");
        return {{"p | a(n,p) - o_p", fam("a_np", {{"p", p}}), fam("o_p", {{"p", p}}), p}};
    }
    if (id == "I6") {
        int m = get(q, "m");
        int shift;
        switch (m) {
        case 5:
            shift = 4;
            break;
        case 7:
            shift = 5;
            break;
        case 11:
            shift = 6;
            break;
        default:
            throw domain_error("I6 needs m in {5, 7, 11}");
        }
        return {{"a(" + std::to_string(m) + "n+" + std::to_string(shift) + "," + std::to_string(m) + ") = 0 mod " +
                     std::to_string(m),
                 fam("a_np", {{"p", m}}), zero(), m, [m, shift](int n) { return n % m == shift; }}};
    }
    if (id == "I7") {
        int p = get(q, "p");
        return {{"o_p,o = h_p", fam("o_p_odd", {{"p", p}}), fam("h", {{"p", p}, {"i", p}})},
                {"o_p,e = h_0", fam("o_p_even", {{"p", p}}), fam("h", {{"p", p}, {"i", 0}})}};
    }
    if (id == "I8")
        return {{"d_e = f0", fam("d_e"), fam("f0")}, {"d_o = f2", fam("d_o"), fam("f2")}};
    if (id == "I9") {
        auto table = std::make_shared<std::vector<std::int64_t>>();
        term rec = [table](evaluator&, int n) {
            if (int(table->size()) <= n)
                *table = recurrence_d_e_table(std::max(n, 2 * int(table->size())));
            return make_integer((*table)[std::size_t(n)]);
        };
        return {{"recurrence = d_e", rec, fam("d_e")}};
    }
    if (id == "I10") {
        term d_o = fam("d_o");
        term lhs = [d_o](evaluator& ev, int n) {
            return integer(d_o_parity_lhs(n, [&](int m) { return d_o(ev, m); }));
        };
        term rhs = [](evaluator&, int n) { return integer(d_o_parity_rhs(n)); };
        return {{"triangular d_o sum parity", lhs, rhs}};
    }
    if (id == "I11") {
        param_map pkr{{"p", get(q, "p")}, {"k", get(q, "k")}, {"r", get(q, "r")}};
        return {{"f_p = d_p", fam("f_pkr", pkr), fam("d_pkr", pkr)}};
    }
    if (id == "I12") {
        int k = get(q, "k");
        std::vector<claim> c{{"o_k = d_k", fam("o_p", {{"p", k}}), fam("d_k", {{"k", k}})}};
        if (k == 4)
            c.push_back({"d_4 = d_e", fam("d_k", {{"k", 4}}), fam("d_e")});
        return c;
    }
    if (id == "I13") {
        int p = get(q, "p"), k = get(q, "k");
        return {{"d_pk = d_p(k,0)", fam("d_k", {{"k", p * k}}), fam("d_pkr", {{"p", p}, {"k", k}, {"r", 0}})}};
    }
    if (id == "I14") {
        int alpha = get(q, "alpha"), k = get(q, "k"), p = get(q, "p");
        param_map g{{"alpha", alpha}, {"k", k}, {"p", p}};
        std::string key = "g_lambert{" + describe_params(g) + "}";
        term rhs = [=](evaluator& ev, int n) {
            return ev.closed(key, [=](int order) { return g_signed_lambert_form(alpha, k, p, order); }, n);
        };
        term odd = fam("g_alpha_odd", g), even = fam("g_alpha_even", g);
        term diff = [odd, even](evaluator& ev, int n) { return integer(odd(ev, n) - even(ev, n)); };
        return {{"g_o - g_e = closed form", fam("g_alpha", g), rhs}, {"g_alpha = g_o - g_e", fam("g_alpha", g), diff}};
    }
    if (id == "I15") {
        int p = get(q, "p"), sw = get(q, "swapped");
        if (sw != 0 && sw != 1)
            throw domain_error("I15 needs swapped in {0, 1}");
        param_map g{{"alpha", p}, {"k", p}, {"p", p}};
        term h0 = fam("h", {{"p", p}, {"i", 0}});
        term hp = fam("h", {{"p", p}, {"i", p}});
        if (sw == 0)
            return {{"g_o = h_0", fam("g_alpha_odd", g), h0}, {"g_e = h_p", fam("g_alpha_even", g), hp}};
        return {{"g_o = h_p", fam("g_alpha_odd", g), hp}, {"g_e = h_0", fam("g_alpha_even", g), h0}};
    }
    if (id == "I16") {
        int t = get(q, "t");
        return {{"glaisher", fam("glaisher_left", {{"t", t}}), fam("glaisher_right", {{"t", t}})}};
    }
    throw domain_error("no claims registered for " + id);
}

void check_params(const identity_spec& spec, const param_map& params)
{
    for (const auto& name : spec.params)
        if (!params.contains(name))
            throw domain_error(spec.id + " needs parameter " + name);
    for (const auto& [name, value] : params)
        if (std::find(spec.params.begin(), spec.params.end(), name) == spec.params.end())
            throw domain_error(spec.id + " takes no parameter " + name);
}

std::size_t registry_index(std::string_view id)
{
    const auto& ids = list_identities();
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i].id == id)
            return i;
    return ids.size();
}

param_map without_swapped(param_map p)
{
    p.erase("swapped");
    return p;
}

} // namespace

std::string_view engine_name(engine e)
{
    switch (e) {
    case engine::enumeration:
        return "enum";
    case engine::series:
        return "series";
    case engine::both:
        return "both";
    }
    return "?";
}

engine parse_engine(std::string_view s)
{
    if (s == "enum" || s == "enumeration")
        return engine::enumeration;
    if (s == "series")
        return engine::series;
    if (s == "both")
        return engine::both;
    throw domain_error("unknown engine '" + std::string(s) + "' (expected enum, series or both)");
}

std::string_view claim_kind_name(claim_kind k)
{
    switch (k) {
    case claim_kind::equality:
        return "equality";
    case claim_kind::divisibility:
        return "divisibility";
    case claim_kind::congruence:
        return "congruence";
    case claim_kind::parity:
        return "parity";
    case claim_kind::series_equality:
        return "series-equality";
    }
    return "?";
}

std::string describe_params(const param_map& params)
{
    std::string s;
    for (const auto& [name, value] : params) {
        if (!s.empty())
            s += ',';
        s += name + "=" + std::to_string(value);
    }
    return s;
}

const std::vector<identity_spec>& list_identities()
{
    static const std::vector<identity_spec> ids = build_identities();
    return ids;
}

const identity_spec& find_identity(std::string_view id)
{
    for (const auto& spec : list_identities())
        if (spec.id == id)
            return spec;
    throw domain_error("unknown identity '" + std::string(id) + "'");
}

identity_report verify(std::string_view id, const param_map& params, int n_max, engine e, const limits& lim)
{
    const auto start = std::chrono::steady_clock::now();
    const identity_spec& spec = find_identity(id);
    check_params(spec, params);
    if (n_max < 1)
        throw domain_error("empty range: n_max must be >= 1");
    if (e == engine::series && !spec.series_allowed)
        throw domain_error(spec.id + " has a side without a closed form; use the enum or both engine");
    if (e != engine::series && n_max > lim.max_n)
        throw resource_limit("n_max " + std::to_string(n_max) + " exceeds the enumeration cap " +
                             std::to_string(lim.max_n));
    if (e != engine::enumeration && n_max > lim.series_order)
        throw resource_limit("n_max " + std::to_string(n_max) + " exceeds the series order limit " +
                             std::to_string(lim.series_order));

    auto claims = build_claims(spec, params);
    evaluator ev(e, n_max, lim);

    identity_report rep;
    rep.id = spec.id;
    rep.params = params;
    rep.n_max = n_max;
    rep.eng = e;
    rep.holds = true;

    for (int n = spec.n_min; n <= n_max && rep.holds; ++n) {
        for (const auto& c : claims) {
            if (c.applies && !c.applies(n))
                continue;
            integer lhs = c.lhs(ev, n);
            integer rhs = c.rhs(ev, n);
            if (ev.mismatch) {
                rep.holds = false;
                rep.cx = ev.mismatch;
                break;
            }
            bool ok = c.modulus == 0 ? lhs == rhs : sgn(integer((lhs - rhs) % c.modulus)) == 0;
            if (!ok) {
                rep.holds = false;
                rep.cx = counterexample{n, lhs, rhs, c.label};
                break;
            }
        }
    }
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<verify_cell> grid_cells(const identity_spec& spec, const param_map& overrides)
{
    std::vector<verify_cell> cells;
    for (const auto& cell : spec.default_grid) {
        bool agrees = true;
        for (const auto& [name, value] : overrides) {
            auto it = cell.find(name);
            if (it == cell.end() || it->second != value)
                agrees = false;
        }
        if (agrees)
            cells.push_back({spec.id, cell});
    }
    if (cells.empty())
        cells.push_back({spec.id, overrides});
    return cells;
}

std::vector<identity_report> run_cells(const std::vector<verify_cell>& cells, int n_max, engine e,
                                       const limits& lim, int jobs)
{
    std::vector<identity_report> out(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
            try {
                out[i] = verify(cells[i].id, cells[i].params, n_max, e, lim);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    jobs = std::max(1, std::min<int>(jobs, int(cells.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);

    std::stable_sort(out.begin(), out.end(), [](const identity_report& a, const identity_report& b) {
        auto ia = registry_index(a.id), ib = registry_index(b.id);
        if (ia != ib)
            return ia < ib;
        return a.params < b.params;
    });

    // adjudication verdict per parameter group
    std::map<param_map, std::vector<identity_report*>> groups;
    for (auto& r : out)
        if (r.id == adjudicated_identity)
            groups[without_swapped(r.params)].push_back(&r);
    for (auto& [key, members] : groups) {
        if (members.size() != 2)
            continue;
        int holding = 0;
        const identity_report* winner = nullptr;
        for (auto* r : members)
            if (r->holds) {
                ++holding;
                winner = r;
            }
        std::string verdict;
        if (holding == 1)
            verdict = std::string("verdict ") + describe_params(key) + ": " +
                      (winner->params.at("swapped") ? "swapped=1 holds, swapped=0 fails"
                                                    : "swapped=0 holds, swapped=1 fails");
        else
            verdict = "verdict " + describe_params(key) + ": unresolved, " + std::to_string(holding) +
                      " orientations hold";
        for (auto* r : members)
            r->note = verdict;
    }
    return out;
}

bool batch_ok(const std::vector<identity_report>& reports)
{
    std::map<param_map, std::pair<int, int>> orientation; // (present, holding)
    for (const auto& r : reports) {
        if (r.id == adjudicated_identity) {
            auto& slot = orientation[without_swapped(r.params)];
            ++slot.first;
            slot.second += r.holds ? 1 : 0;
        } else if (!r.holds) {
            return false;
        }
    }
    for (const auto& [key, counts] : orientation) {
        if (counts.first >= 2 ? counts.second != 1 : counts.second != counts.first)
            return false;
    }
    return true;
}

} // namespace partlab
