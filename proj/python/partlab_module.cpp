#include "partlab/bijections.hpp"
#include "partlab/errors.hpp"
#include "partlab/families.hpp"
#include "partlab/gf.hpp"
#include "partlab/identities.hpp"
#include "partlab/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace partlab;

namespace {

py::object to_py(const integer& v)
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

param_map params_of(const py::kwargs& kw)
{
    param_map out;
    for (auto item : kw)
        out[py::cast<std::string>(item.first)] = py::cast<int>(item.second);
    return out;
}

py::list trace_steps(const bijection_trace& tr)
{
    py::list steps;
    for (const auto& s : tr.steps)
        steps.append(py::make_tuple(s.label, s.value ? py::cast(s.value->str()) : py::none(), s.note));
    return steps;
}

py::dict report_dict(const identity_report& r)
{
    py::dict d;
    d["id"] = r.id;
    d["params"] = r.params;
    d["n_max"] = r.n_max;
    d["engine"] = std::string(engine_name(r.eng));
    d["status"] = status_name(r);
    if (r.cx) {
        py::dict cx;
        cx["n"] = r.cx->n;
        cx["lhs"] = to_py(r.cx->lhs);
        cx["rhs"] = to_py(r.cx->rhs);
        cx["detail"] = r.cx->detail;
        d["counterexample"] = cx;
    } else {
        d["counterexample"] = py::none();
    }
    d["note"] = r.note;
    return d;
}

} // namespace

PYBIND11_MODULE(partlab, m)
{
    m.doc() = "Partition identities, generating functions and bijections";

    static py::exception<error> base(m, "Error");
    py::register_exception<resource_limit>(m, "ResourceLimit", base.ptr());
    py::register_exception<domain_error>(m, "DomainError", base.ptr());
    py::register_exception<parse_error>(m, "ParseError", base.ptr());
    py::register_exception<invalid_partition>(m, "InvalidPartition", base.ptr());
    py::register_exception<unsupported_family>(m, "UnsupportedFamily", base.ptr());

    py::class_<partition>(m, "Partition")
        .def(py::init([](const std::string& text) { return parse_partition(text); }), py::arg("text"))
        .def_property_readonly("weight", &partition::weight)
        .def_property_readonly("blocks",
                               [](const partition& p) {
                                   std::vector<std::pair<part_t, part_t>> out;
                                   for (auto b : p.blocks())
                                       out.emplace_back(b.part, b.mult);
                                   return out;
                               })
        .def("__len__", &partition::length)
        .def("__str__", &partition::str)
        .def("__repr__", [](const partition& p) { return "Partition('" + p.str() + "')"; })
        .def("__eq__", [](const partition& a, const partition& b) { return a == b; })
        .def("__hash__", [](const partition& p) { return py::hash(py::str(p.str())); })
        .def("__or__", &multiset_union);

    m.def(
        "count",
        [](const std::string& family, int n, const std::string& eng, const py::kwargs& kw) {
            family_id f = make_family(family, params_of(kw));
            return to_py(parse_engine(eng) == engine::series ? count_series(f, n) : count_enum(f, n));
        },
        py::arg("family"), py::arg("n"), py::arg("engine") = "enum",
        "Value of a family at n, e.g. count('d_pkr', 9, p=3, k=4, r=1).");

    m.def(
        "series",
        [](const std::string& family, int order, const py::kwargs& kw) {
            series s = gf_family(make_family(family, params_of(kw)), order);
            py::list out;
            for (int n = 0; n <= order; ++n)
                out.append(to_py(s[n]));
            return out;
        },
        py::arg("family"), py::arg("order"), "Coefficients 0..order of the family's generating function.");

    m.def(
        "families", [] {
            std::vector<std::string> keys;
            for (const auto& f : family_registry())
                keys.emplace_back(f.key);
            return keys;
        });

    m.def("identities", [] {
        std::vector<std::string> ids;
        for (const auto& s : list_identities())
            ids.push_back(s.id);
        return ids;
    });

    m.def(
        "verify",
        [](const std::string& id, int n_max, const std::string& eng, const py::kwargs& kw) {
            py::gil_scoped_release unlock;
            auto rep = verify(id, params_of(kw), n_max, parse_engine(eng));
            py::gil_scoped_acquire lock;
            return report_dict(rep);
        },
        py::arg("id"), py::arg("n_max"), py::arg("engine") = "enum");

    m.def(
        "verify_grid",
        [](const std::string& id, int n_max, const std::string& eng, int jobs) {
            std::vector<identity_report> reps;
            {
                py::gil_scoped_release unlock;
                reps = run_cells(grid_cells(find_identity(id)), n_max, parse_engine(eng), {}, jobs);
            }
            py::list out;
            for (const auto& r : reps)
                out.append(report_dict(r));
            return out;
        },
        py::arg("id"), py::arg("n_max"), py::arg("engine") = "enum", py::arg("jobs") = 1);

    m.def("glaisher", [](int t, const partition& p) { return glaisher(t, p); });
    m.def("glaisher_inv", [](int t, const partition& p) { return glaisher_inv(t, p); });

    auto traced = [&m](const char* name, auto fn) {
        m.def(name, [fn](py::args args) {
            bijection_trace tr = fn(args);
            return py::make_tuple(tr.output, trace_steps(tr));
        });
    };
    traced("genr_f_to_d", [](py::args a) {
        return genr_f_to_d(a[0].cast<int>(), a[1].cast<int>(), a[2].cast<int>(), a[3].cast<partition>());
    });
    traced("genr_d_to_f", [](py::args a) {
        return genr_d_to_f(a[0].cast<int>(), a[1].cast<int>(), a[2].cast<int>(), a[3].cast<partition>());
    });
    traced("dpk_to_dp",
           [](py::args a) { return dpk_to_dp(a[0].cast<int>(), a[1].cast<int>(), a[2].cast<partition>()); });
    traced("dp_to_dpk",
           [](py::args a) { return dp_to_dpk(a[0].cast<int>(), a[1].cast<int>(), a[2].cast<partition>()); });
}
