#include "partlab/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace partlab {

namespace {

// Exact integers go out as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that.
nlohmann::ordered_json integer_json(const integer& v)
{
    if (v.fits_slong_p())
        return static_cast<long>(v.get_si());
    return to_string(v);
}

nlohmann::ordered_json report_object(const identity_report& r, bool timing)
{
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.params)
        params[name] = value;

    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["params"] = params;
    o["n_max"] = r.n_max;
    o["engine"] = std::string(engine_name(r.eng));
    o["status"] = status_name(r);
    if (r.cx)
        o["counterexample"] = {{"n", r.cx->n},
                               {"lhs", integer_json(r.cx->lhs)},
                               {"rhs", integer_json(r.cx->rhs)},
                               {"detail", r.cx->detail}};
    else
        o["counterexample"] = nullptr;
    if (timing)
        o["ms"] = std::round(r.ms * 1000) / 1000;
    else
        o["ms"] = nullptr;
    if (!r.note.empty())
        o["note"] = r.note;
    return o;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string params_text(const param_map& p)
{
    std::string s;
    for (const auto& [name, value] : p) {
        if (!s.empty())
            s += ';';
        s += name + "=" + std::to_string(value);
    }
    return s;
}

std::string ms_text(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

} // namespace

std::string status_name(const identity_report& r) { return r.holds ? "holds" : "fails"; }

std::string reports_json(const std::vector<identity_report>& reports, bool timing)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports)
        arr.push_back(report_object(r, timing));
    return arr.dump(2) + "\n";
}

std::string reports_csv(const std::vector<identity_report>& reports, bool timing)
{
    std::ostringstream out;
    out << "id,params,n_max,engine,status,cx_n,cx_lhs,cx_rhs,ms,note\n";
    for (const auto& r : reports) {
        out << r.id << ',' << csv_field(params_text(r.params)) << ',' << r.n_max << ',' << engine_name(r.eng) << ','
            << status_name(r) << ',';
        if (r.cx)
            out << r.cx->n << ',' << to_string(r.cx->lhs) << ',' << to_string(r.cx->rhs);
        else
            out << ",,";
        out << ',' << (timing ? ms_text(r.ms) : "") << ',' << csv_field(r.note) << '\n';
    }
    return out.str();
}

std::string reports_pretty(const std::vector<identity_report>& reports, bool timing)
{
    std::ostringstream out;
    for (const auto& r : reports) {
        std::string head = r.id;
        if (!r.params.empty())
            head += " [" + describe_params(r.params) + "]";
        out << (r.holds ? "holds  " : "FAILS  ") << head << "  n<=" << r.n_max << " (" << engine_name(r.eng) << ")";
        if (timing)
            out << "  " << ms_text(r.ms) << " ms";
        out << '\n';
        if (r.cx)
            out << "       first counterexample n=" << r.cx->n << ": " << to_string(r.cx->lhs)
                << " != " << to_string(r.cx->rhs) << "  (" << r.cx->detail << ")\n";
        if (!r.note.empty())
            out << "       " << r.note << '\n';
    }
    return out.str();
}

} // namespace partlab
