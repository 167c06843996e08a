#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resheight/asymptotics.hpp"
#include "resheight/cubic.hpp"
#include "resheight/errors.hpp"
#include "resheight/quad.hpp"
#include "resheight/sylvester.hpp"
#include "resheight/verify.hpp"

namespace py = pybind11;
using namespace resheight;

namespace {

// exact bigint -> native Python int
py::object big(const bigint& v) {
    PyObject* p = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!p) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(p);
}

py::list argmax_list(const std::vector<findex>& v) {
    py::list out;
    for (const auto& idx : v) out.append(py::make_tuple(idx.m, idx.k, idx.kp, idx.mp));
    return out;
}

py::dict hl_dict(const hl_max_result& r) {
    py::dict d;
    d["l"] = r.l;
    d["n"] = r.n;
    d["value"] = big(r.value);
    d["argmax"] = argmax_list(r.argmax);
    return d;
}

} // namespace

PYBIND11_MODULE(_resheight, m) {
    m.doc() = "exact coefficient heights of generic Sylvester resultants";

    py::register_exception<feasibility_error>(m, "FeasibilityError", PyExc_ValueError);

    m.def(
        "expand_summary",
        [](int deg_f, int deg_g) {
            auto p = expand_resultant_cached(sylvester_spec{deg_f, deg_g});
            py::dict d;
            d["m"] = deg_f;
            d["n"] = deg_g;
            d["height"] = big(p->height());
            d["num_terms"] = p->num_terms();
            return d;
        },
        py::arg("m"), py::arg("n"),
        "height and term count of the fully expanded resultant (m <= 4, n <= 30)");

    m.def(
        "quad_height",
        [](long long n) {
            auto q = ::resheight::quad_height(n);
            py::dict d;
            d["n"] = q.n;
            d["A"] = q.A;
            d["height"] = big(q.height);
            d["extremal_exps"] = q.extremal_exps;
            return d;
        },
        py::arg("n"), "closed-form height for deg f = 2, with the attaining monomial (n >= 3)");

    m.def("compute_A", &compute_A, py::arg("n"), "pivot index A_n of the quadratic height");

    m.def(
        "hl_max", [](int l, int n) { return hl_dict(Hl_max(l, n)); }, py::arg("l"), py::arg("n"),
        "max |H_l| over the degree-n support, with attaining indices");

    m.def(
        "argmax_layers",
        [](int n, bool canonical) {
            auto s = hl_argmax_table(n);
            if (canonical) s = canonical_argmax(s, n);
            return std::vector<int>(s.begin(), s.end());
        },
        py::arg("n"), py::arg("canonical") = true,
        "layers attaining max_l H_l(n); canonical folds l to min(l, n-l)");

    m.def(
        "constants",
        [] {
            py::dict d;
            for (const auto* ac : ::resheight::constants().all())
                d[ac->name.c_str()] = static_cast<double>(ac->value);
            return d;
        },
        "all algebraic constants as floats");

    m.def(
        "identity_checks",
        [] {
            auto r = ::resheight::identity_checks();
            py::dict d;
            d["ratio_cubed"] = static_cast<double>(r.ratio_cubed);
            d["ratio_squared"] = static_cast<double>(r.ratio_squared);
            d["constraint"] = static_cast<double>(r.constraint);
            d["sum_vs_c"] = static_cast<double>(r.sum_vs_c);
            d["perturbed_ratio"] = static_cast<double>(r.perturbed_ratio);
            d["an_ratio_error"] = static_cast<double>(r.an_ratio_error);
            d["pass"] = r.pass;
            return d;
        },
        "numeric identities among the critical-point constants");

    m.def(
        "measure_convergence",
        [](const std::string& which, int n_max) {
            auto s = ::resheight::measure_convergence(which, n_max);
            py::dict d;
            d["case"] = s.which;
            d["slope"] = static_cast<double>(s.slope);
            d["rho_small"] = static_cast<double>(s.rho_small);
            d["rho_end"] = static_cast<double>(s.rho_end);
            py::list grid;
            for (const auto& row : s.grid)
                grid.append(py::make_tuple(row.n, big(row.exact), static_cast<double>(row.ratio)));
            d["grid"] = grid;
            return d;
        },
        py::arg("which"), py::arg("n_max") = 2000,
        "exact heights against the leading asymptotic term on a geometric grid");

    m.def("suite_names", [] { return ::resheight::suite_names(); },
          "names accepted by run_suite");

    m.def(
        "run_suite",
        [](const std::string& name, int n_max) {
            auto rep = ::resheight::run_suite(name, n_max);
            py::dict d;
            d["suite"] = rep.suite;
            d["cases_run"] = rep.cases_run;
            py::list fails;
            for (const auto& f : rep.failures) {
                py::dict fd;
                fd["case"] = f.case_key;
                fd["inputs"] = f.inputs;
                fd["expected"] = f.expected;
                fd["actual"] = f.actual;
                fd["provenance"] = f.provenance;
                fails.append(fd);
            }
            d["failures"] = fails;
            d["passed"] = rep.passed();
            return d;
        },
        py::arg("name"), py::arg("n_max") = 0, "run one verification suite");

    m.def(
        "conjecture_probe",
        [](int deg_f, int deg_g) {
            auto r = ::resheight::conjecture_probe(deg_f, deg_g);
            py::dict d;
            d["m"] = r.m;
            d["n"] = r.n;
            d["full_height"] = big(r.full_height);
            d["binomial_height"] = big(r.binomial_height);
            d["equal"] = r.equal;
            return d;
        },
        py::arg("m"), py::arg("n"),
        "full height vs the height after dropping the interior g coefficients");

    m.def(
        "monotonic_probe",
        [](const std::string& which, int n_max) {
            auto r = ::resheight::monotonic_probe(which, n_max);
            py::dict d;
            d["case"] = r.which;
            d["n_lo"] = r.n_lo;
            d["n_max"] = r.n_max;
            d["first_violation"] = r.first_violation;
            py::list hs;
            for (const auto& h : r.heights) hs.append(big(h));
            d["heights"] = hs;
            return d;
        },
        py::arg("which"), py::arg("n_max"),
        "strict-increase probe of the exact height series from n = 3");
}
