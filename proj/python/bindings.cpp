#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gpoly/asymptotics.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/gpoly.hpp"
#include "gpoly/recurrence.hpp"
#include "gpoly/rootline.hpp"

namespace py = pybind11;
using namespace gpoly;

namespace {

py::object fraction(const Rational& x) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::int_(py::str(x.get_num().get_str())), py::int_(py::str(x.get_den().get_str())));
}

UniPoly poly_from_py(const py::sequence& coeffs) {
    std::vector<Rational> c;
    for (const auto& item : coeffs) c.push_back(parse_rational(py::str(item).cast<std::string>()));
    return UniPoly(std::move(c));
}

py::list poly_to_py(const UniPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) {
        if (is_integer(c))
            out.append(py::int_(py::str(c.get_num().get_str())));
        else
            out.append(fraction(c));
    }
    return out;
}

py::dict interval_dict(const IsolatingInterval& iv) {
    py::dict d;
    d["lo"] = fraction(iv.lo);
    d["hi"] = fraction(iv.hi);
    d["exact"] = iv.is_exact();
    return d;
}

py::dict verdict_dict(const InterlacingVerdict& v) {
    py::dict d;
    d["relation"] = std::string(relation_name(v.relation));
    d["reason"] = v.reason;
    py::list shared;
    for (const auto& iv : v.shared_roots) shared.append(interval_dict(iv));
    d["shared_roots"] = shared;
    return d;
}

py::dict stats_dict(const StatsRecord& r) {
    py::dict d;
    d["n"] = r.n;
    d["d"] = r.d;
    d["mu"] = fraction(r.mu);
    d["sigma2"] = fraction(r.sigma2);
    d["r"] = fraction(r.r);
    d["clt_distance"] = r.clt_distance;
    d["llt_distance"] = r.llt_distance;
    return d;
}

py::dict lemma_dict(const LemmaReport& rep) {
    py::dict d;
    d["lemma"] = rep.lemma;
    d["m_max"] = rep.m_max;
    d["pass"] = rep.pass();
    py::list failing;
    for (const auto& row : rep.rows)
        if (!row.ok()) failing.append(row.m);
    d["failing_m"] = failing;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "g-polynomials of uniform matroids with exact rational arithmetic";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SingularCoefficientError>(m, "SingularCoefficientError", PyExc_ArithmeticError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    m.def("g_poly", [](int n, int d) { return poly_to_py(closed_form(n, d).poly); }, py::arg("n"), py::arg("d"),
          "Coefficients of g_{n,d}, lowest degree first.");
    m.def("via_recurrence", [](int n, int d, const std::string& scheme) {
              return poly_to_py(via_recurrence(n, d, parse_scheme(scheme)).poly);
          },
          py::arg("n"), py::arg("d"), py::arg("scheme"));
    m.def("schemes", [] {
        std::vector<std::string> out;
        for (auto s : all_schemes()) out.emplace_back(scheme_name(s));
        return out;
    });

    m.def("recurrence_ids", [] {
        std::vector<std::string> out;
        for (const auto& s : registry()) out.push_back(s.id);
        return out;
    });
    m.def("verify", [](const std::string& id, int n_max, int threads) {
              const RecurrenceSpec* spec = find_spec(id);
              if (!spec) throw DomainError("unknown recurrence id '" + id + "'");
              VerificationReport rep;
              {
                  py::gil_scoped_release release;
                  rep = verify(*spec, n_max, threads);
              }
              py::dict d;
              d["id"] = rep.id;
              d["domain"] = rep.domain;
              d["checked"] = rep.checked;
              d["skipped"] = rep.skipped.size();
              d["failures"] = rep.failures.size();
              d["pass"] = rep.passed();
              return d;
          },
          py::arg("id"), py::arg("n_max") = 40, py::arg("threads") = 1);

    m.def("is_real_rooted", [](const py::sequence& p) { return is_real_rooted(poly_from_py(p)); });
    m.def("real_roots", [](const py::sequence& p) {
        py::list out;
        for (const auto& r : real_roots(poly_from_py(p))) {
            py::dict d = interval_dict(r.value.iv);
            d["multiplicity"] = r.multiplicity;
            out.append(d);
        }
        return out;
    });
    m.def("interlaces", [](const py::sequence& g, const py::sequence& f) { return verdict_dict(interlaces(poly_from_py(g), poly_from_py(f))); },
          py::arg("g"), py::arg("f"), "Whether g interlaces f (g precedes f).");
    m.def("verify_family", [](const std::string& family, int param, int limit, int threads) {
              FamilyReport rep;
              {
                  py::gil_scoped_release release;
                  rep = verify_sturm_family(parse_family(family), param, limit, threads);
              }
              py::dict d;
              d["family"] = family;
              d["pass"] = rep.pass;
              py::list rel;
              for (const auto& p : rep.pairs) rel.append(std::string(relation_name(p.verdict.relation)));
              d["relations"] = rel;
              return d;
          },
          py::arg("family"), py::arg("param") = 0, py::arg("limit") = 40, py::arg("threads") = 1);
    m.def("liu_wang", [](const std::string& family, int n_max, bool negate_psi) {
              py::list out;
              for (const auto& inst : liu_wang_grid(parse_family(family), n_max)) {
                  const auto checked = negate_psi ? with_negated_psi(inst, 0) : inst;
                  const auto v = liu_wang_check(checked);
                  py::dict d;
                  d["label"] = checked.label;
                  d["satisfied"] = v.satisfied;
                  d["strict"] = v.strict;
                  py::list conds;
                  for (const auto& x : v.violations) conds.append(x.condition);
                  d["violations"] = conds;
                  out.append(d);
              }
              return out;
          },
          py::arg("family"), py::arg("n_max") = 25, py::arg("negate_psi") = false);

    m.def("stats", [](int n) { return stats_dict(stats(n)); }, py::arg("n"));
    m.def("r_sequence", [](int n_max) {
        py::list out;
        for (const auto& e : r_sequence(n_max)) out.append(py::make_tuple(e.n, fraction(e.r)));
        return out;
    });
    m.def("limit_gap", [](const py::object& r) { return limit_gap(parse_rational(py::str(r).cast<std::string>())); });
    m.def("check_lemmas", [](int m_max) {
        py::list out;
        out.append(lemma_dict(check_lemma44(m_max)));
        out.append(lemma_dict(check_lemma45(m_max)));
        out.append(lemma_dict(check_variance_bounds(m_max)));
        return out;
    });
    m.def("normality_report", [](const std::vector<int>& ns, int grid, int threads) {
              std::vector<StatsRecord> rows;
              {
                  py::gil_scoped_release release;
                  rows = normality_report(ns, grid, threads);
              }
              py::list out;
              for (const auto& r : rows) out.append(stats_dict(r));
              return out;
          },
          py::arg("n_list"), py::arg("grid") = 201, py::arg("threads") = 1);
    m.def("conjecture_probe", [](const std::string& schedule, double param, int n_min, int n_max) {
              const Schedule s = parse_schedule(schedule);
              const auto probe = conjecture_probe(s, param, n_min > 0 ? n_min : first_valid_n(s, param), n_max);
              py::list out;
              for (const auto& r : probe.rows) {
                  py::dict d;
                  d["n"] = r.n;
                  d["d"] = r.d;
                  d["sigma2"] = fraction(r.sigma2);
                  d["clt_distance"] = r.clt_distance;
                  d["llt_distance"] = r.llt_distance;
                  out.append(d);
              }
              return out;
          },
          py::arg("schedule"), py::arg("param") = 0.0, py::arg("n_min") = 0, py::arg("n_max") = 100);
}
