#include "gpoly/json_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "gpoly/errors.hpp"

namespace gpoly {

Json rational_json(const Rational& x) {
    return Json{{"num", to_string(Integer(x.get_num()))}, {"den", to_string(Integer(x.get_den()))}};
}

Rational rational_from_json(const Json& j) {
    try {
        return make_rational(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
    } catch (const std::invalid_argument& e) {
        throw DomainError(std::string("bad rational in JSON: ") + e.what());
    } catch (const Json::exception& e) {
        throw DomainError(std::string("bad rational in JSON: ") + e.what());
    }
}

Json coefficients_json(const UniPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

UniPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
    UniPoly p;
    for (std::size_t i = 0; i < j.size(); ++i) p += UniPoly::monomial(parse_rational(j[i].get<std::string>()), static_cast<int>(i));
    return p;
}

Json to_json(const GPolyRecord& rec) {
    return Json{{"n", rec.n}, {"d", rec.d}, {"coefficients", coefficients_json(rec.poly)}, {"poly", to_string(rec.poly)}};
}

Json to_json(const IsolatingInterval& iv) {
    return Json{{"lo", rational_json(iv.lo)},
                {"hi", rational_json(iv.hi)},
                {"kind", iv.is_exact() ? "exact" : "open"},
                {"approx", Rational((iv.lo + iv.hi) / 2).get_d()}};
}

Json to_json(const RealRoot& root) {
    Json j = to_json(root.value.iv);
    j["multiplicity"] = root.multiplicity;
    return j;
}

Json to_json(const VerificationReport& rep) {
    Json skipped = Json::array();
    for (const auto& s : rep.skipped) skipped.push_back({{"n", s.n}, {"d", s.d}, {"reason", s.reason}});
    Json failures = Json::array();
    for (const auto& f : rep.failures)
        failures.push_back({{"n", f.n}, {"d", f.d}, {"lhs", coefficients_json(f.lhs)}, {"rhs", coefficients_json(f.rhs)}});
    return Json{{"id", rep.id},           {"domain", rep.domain},  {"n_max", rep.n_max},
                {"checked", rep.checked}, {"skipped", skipped},    {"failures", failures},
                {"pass", rep.passed()}};
}

Json to_json(const InterlacingVerdict& v) {
    Json shared = Json::array();
    for (const auto& iv : v.shared_roots) shared.push_back(to_json(iv));
    Json j{{"relation", std::string(relation_name(v.relation))},
           {"reason", v.reason},
           {"shared_roots", shared},
           {"strict_away_from_zero", v.strict_away_from_zero}};
    if (v.witness) j["witness"] = {{"g_root", to_json(v.witness->first)}, {"f_root", to_json(v.witness->second)}};
    return j;
}

Json to_json(const FamilyReport& rep) {
    Json pairs = Json::array();
    for (const auto& p : rep.pairs)
        pairs.push_back({{"index", p.index},
                         {"from", {{"n", p.n_from}, {"d", p.d_from}}},
                         {"to", {{"n", p.n_to}, {"d", p.d_to}}},
                         {"verdict", to_json(p.verdict)}});
    return Json{{"family", std::string(family_name(rep.family))},
                {"params", {{"param", rep.param}, {"limit", rep.limit}}},
                {"pairs", pairs},
                {"pass", rep.pass}};
}

Json to_json(const LiuWangInstance& inst, const LiuWangVerdict& v) {
    Json violations = Json::array();
    for (const auto& x : v.violations) {
        Json j{{"condition", x.condition}, {"reason", x.reason}};
        if (x.root) j["root"] = to_json(*x.root);
        violations.push_back(j);
    }
    Json psi = Json::array();
    for (const auto& p : inst.psi()) psi.push_back(coefficients_json(p));
    return Json{{"label", inst.label},
                {"phi", coefficients_json(inst.phi())},
                {"psi", psi},
                {"satisfied", v.satisfied},
                {"strict", v.strict},
                {"violations", violations}};
}

namespace {

Json distance_json(double x) { return std::isnan(x) ? Json(nullptr) : Json(x); }

}  // namespace

Json to_json(const StatsRecord& rec) {
    return Json{{"n", rec.n},
                {"d", rec.d},
                {"mu", rational_json(rec.mu)},
                {"sigma2", rational_json(rec.sigma2)},
                {"r", rational_json(rec.r)},
                {"clt_distance", distance_json(rec.clt_distance)},
                {"llt_distance", distance_json(rec.llt_distance)}};
}

Json to_json(const LemmaReport& rep) {
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
        Json checks = Json::object();
        for (const auto& c : row.checks) checks[c.name] = c.holds;
        rows.push_back({{"m", row.m}, {"r", rational_json(row.r)}, {"checks", checks}, {"ok", row.ok()}});
    }
    return Json{{"lemma", rep.lemma}, {"m_max", rep.m_max}, {"rows", rows}, {"pass", rep.pass()}};
}

Json to_json(const ProbeRow& row) {
    return Json{{"n", row.n},
                {"d", row.d},
                {"sigma2", rational_json(row.sigma2)},
                {"clt_distance", distance_json(row.clt_distance)},
                {"llt_distance", distance_json(row.llt_distance)}};
}

Json to_json(const ScheduleProbe& probe) {
    Json rows = Json::array();
    for (const auto& r : probe.rows) rows.push_back(to_json(r));
    return Json{{"schedule", std::string(schedule_name(probe.schedule))}, {"param", probe.param}, {"rows", rows}};
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string stats_csv(const std::vector<StatsRecord>& rows) {
    std::ostringstream out;
    out << "n,d,mu_num,mu_den,sigma2_num,sigma2_den,r_num,r_den,clt_distance,llt_distance\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.d << ',' << r.mu.get_num() << ',' << r.mu.get_den() << ',' << r.sigma2.get_num() << ','
            << r.sigma2.get_den() << ',' << r.r.get_num() << ',' << r.r.get_den() << ',' << format_double(r.clt_distance)
            << ',' << format_double(r.llt_distance) << '\n';
    return out.str();
}

std::string probe_csv(const ScheduleProbe& probe) {
    std::ostringstream out;
    out << "n,d,sigma2_num,sigma2_den,clt_distance,llt_distance\n";
    for (const auto& r : probe.rows)
        out << r.n << ',' << r.d << ',' << r.sigma2.get_num() << ',' << r.sigma2.get_den() << ','
            << format_double(r.clt_distance) << ',' << format_double(r.llt_distance) << '\n';
    return out.str();
}

}  // namespace gpoly
