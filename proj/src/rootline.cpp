#include "gpoly/rootline.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "gpoly/errors.hpp"
#include "gpoly/gpoly.hpp"
#include "parallel.hpp"

namespace gpoly {

namespace {

const Rational kWitnessWidth = make_rational(1, 1000000);

bool has_nonnegative_coeffs(const UniPoly& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c >= 0; });
}

// Roots repeated by multiplicity, largest first, as indices into `roots`.
std::vector<std::size_t> descending_with_multiplicity(const std::vector<RealRoot>& roots) {
    std::vector<std::size_t> out;
    for (std::size_t i = roots.size(); i-- > 0;)
        for (int k = 0; k < roots[i].multiplicity; ++k) out.push_back(i);
    return out;
}

bool is_zero_root(const AlgebraicReal& r) { return r.iv.is_exact() && r.iv.lo == 0; }

IsolatingInterval witness_interval(const AlgebraicReal& r) { return refine(r.poly, r.iv, kWitnessWidth); }

}  // namespace

bool is_real_rooted(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("is_real_rooted: zero polynomial");
    const UniPoly sq = gcd_squarefree(p).squarefree_part;
    if (sq.degree() < 1) return true;
    return sturm_count(sq, std::nullopt, std::nullopt) == sq.degree();
}

std::string_view relation_name(Relation r) {
    switch (r) {
        case Relation::Strict: return "strict";
        case Relation::Weak: return "weak";
        case Relation::Fails: return "fails";
    }
    return "?";
}

InterlacingVerdict interlaces(const UniPoly& g, const UniPoly& f) {
    if (!has_nonnegative_coeffs(g) || !has_nonnegative_coeffs(f))
        throw DomainError("interlaces: polynomials must have nonnegative coefficients");
    InterlacingVerdict v;
    if (g.is_zero() || f.is_zero()) {
        v.reason = "zero polynomial convention";
        return v;
    }
    if (!is_real_rooted(g) || !is_real_rooted(f)) throw DomainError("interlaces: input is not real-rooted");
    const int dg = g.degree();
    const int df = f.degree();
    if (dg == 0 && df <= 1) {
        v.reason = "constant convention";
        return v;
    }
    if (df != dg && df != dg + 1) {
        v.relation = Relation::Fails;
        v.reason = "degree gap";
        return v;
    }
    for (const auto& iv : isolate_roots(gcd(g, f))) v.shared_roots.push_back(iv);

    std::vector<RealRoot> groots = real_roots(g);
    std::vector<RealRoot> froots = real_roots(f);
    const auto beta = descending_with_multiplicity(groots);
    const auto alpha = descending_with_multiplicity(froots);

    bool all_strict = true;
    // lower must not exceed upper.
    auto check = [&](RealRoot& lower, RealRoot& upper, RealRoot& g_side, RealRoot& f_side) {
        const auto ord = compare(lower.value, upper.value);
        if (ord > 0) {
            v.relation = Relation::Fails;
            v.reason = "order violated";
            v.witness = std::make_pair(witness_interval(g_side.value), witness_interval(f_side.value));
            return false;
        }
        if (ord == 0) {
            all_strict = false;
            if (!is_zero_root(lower.value)) v.strict_away_from_zero = false;
        }
        return true;
    };
    for (std::size_t i = 0; i < beta.size(); ++i) {
        RealRoot& b = groots[beta[i]];
        RealRoot& a = froots[alpha[i]];
        if (!check(b, a, b, a)) return v;
        if (i + 1 < alpha.size()) {
            RealRoot& a_next = froots[alpha[i + 1]];
            if (!check(a_next, b, b, a_next)) return v;
        }
    }
    v.relation = all_strict ? Relation::Strict : Relation::Weak;
    return v;
}

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
};

constexpr std::array<FamilyInfo, 5> kFamilies{{
    {Family::FixedD, "fixed-d"},
    {Family::FixedN, "fixed-n"},
    {Family::Diag2d, "diag-2d"},
    {Family::Diag2dPlus1, "diag-2d+1"},
    {Family::DiagHalf, "diag-half"},
}};

std::vector<std::pair<int, int>> family_members(Family family, int param, int limit) {
    std::vector<std::pair<int, int>> m;
    switch (family) {
        case Family::FixedD:
            if (param < 1) throw DomainError("fixed-d family needs d >= 1");
            for (int n = param + 1; n <= limit; ++n) m.emplace_back(n, param);
            break;
        case Family::FixedN:
            if (param < 2) throw DomainError("fixed-n family needs n >= 2");
            for (int d = 1; d <= param / 2; ++d) m.emplace_back(param, d);
            break;
        case Family::Diag2d:
            for (int d = 1; 2 * d <= limit; ++d) m.emplace_back(2 * d, d);
            break;
        case Family::Diag2dPlus1:
            for (int d = 1; 2 * d + 1 <= limit; ++d) m.emplace_back(2 * d + 1, d);
            break;
        case Family::DiagHalf:
            for (int n = 2; n <= limit; ++n) m.emplace_back(n, n / 2);
            break;
    }
    return m;
}

}  // namespace

std::string_view family_name(Family f) {
    for (const auto& i : kFamilies)
        if (i.family == f) return i.name;
    return "?";
}

Family parse_family(std::string_view name) {
    for (const auto& i : kFamilies)
        if (i.name == name) return i.family;
    throw DomainError("unknown family '" + std::string(name) + "'");
}

FamilyReport verify_sturm_family(Family family, int param, int limit, int threads) {
    FamilyReport report;
    report.family = family;
    report.param = param;
    report.limit = limit;
    const auto members = family_members(family, param, limit);
    if (members.size() < 2) return report;

    std::vector<UniPoly> polys;
    polys.reserve(members.size());
    for (const auto& [n, d] : members) polys.push_back(closed_form(n, d).poly);

    auto pair_at = [&](std::size_t i) {
        return FamilyPair{static_cast<int>(i), members[i].first, members[i].second, members[i + 1].first,
                          members[i + 1].second, interlaces(polys[i], polys[i + 1])};
    };
    report.pairs = detail::parallel_map(members.size() - 1, threads, pair_at);
    report.pass = std::none_of(report.pairs.begin(), report.pairs.end(),
                               [](const FamilyPair& p) { return p.verdict.relation == Relation::Fails; });
    return report;
}

LiuWangInstance::LiuWangInstance(UniPoly F, UniPoly f, std::vector<UniPoly> h, UniPoly phi, std::vector<UniPoly> psi)
    : F_(std::move(F)), f_(std::move(f)), h_(std::move(h)), phi_(std::move(phi)), psi_(std::move(psi)) {
    if (h_.size() != psi_.size()) throw DomainError("Liu-Wang instance: h and psi lists differ in length");
    UniPoly rhs = phi_ * f_;
    for (std::size_t j = 0; j < h_.size(); ++j) rhs += psi_[j] * h_[j];
    if (!(rhs == F_)) throw DomainError("Liu-Wang instance: F != phi f + sum psi_j h_j");
}

LiuWangInstance LiuWangInstance::assemble(UniPoly f, std::vector<UniPoly> h, UniPoly phi, std::vector<UniPoly> psi) {
    if (h.size() != psi.size()) throw DomainError("Liu-Wang instance: h and psi lists differ in length");
    UniPoly F = phi * f;
    for (std::size_t j = 0; j < h.size(); ++j) F += psi[j] * h[j];
    return LiuWangInstance(std::move(F), std::move(f), std::move(h), std::move(phi), std::move(psi));
}

LiuWangVerdict liu_wang_check(const LiuWangInstance& inst) {
    LiuWangVerdict out;
    auto violate = [&](std::string condition, std::string reason, std::optional<IsolatingInterval> root = {}) {
        out.violations.push_back({std::move(condition), std::move(reason), std::move(root)});
    };
    const UniPoly& F = inst.F();
    const UniPoly& f = inst.f();

    if (F.is_zero() || f.is_zero() || (F.degree() != f.degree() && F.degree() != f.degree() + 1))
        violate("degree", "deg F = " + std::to_string(F.degree()) + " is neither deg f = " + std::to_string(f.degree()) +
                              " nor deg f + 1");

    const bool f_ok = !f.is_zero() && is_real_rooted(f);
    if (!f_ok) violate("interlacing", "f is not a nonzero real-rooted polynomial");
    std::vector<bool> h_strict(inst.h().size(), false);
    for (std::size_t j = 0; j < inst.h().size(); ++j) {
        const UniPoly& h = inst.h()[j];
        if (!h.is_zero() && !is_real_rooted(h)) {
            violate("interlacing", "h_" + std::to_string(j + 1) + " is not real-rooted");
            continue;
        }
        if (!f_ok) continue;
        try {
            const auto v = interlaces(h, f);
            if (v.relation == Relation::Fails)
                violate("interlacing", "h_" + std::to_string(j + 1) + " does not interlace f: " + v.reason);
            h_strict[j] = v.relation == Relation::Strict;
        } catch (const DomainError& e) {
            violate("interlacing", "h_" + std::to_string(j + 1) + ": " + e.what());
        }
    }

    if (!F.is_zero()) {
        const int s = sign(F.leading());
        for (std::size_t j = 0; j < inst.h().size(); ++j) {
            const UniPoly& h = inst.h()[j];
            if (!h.is_zero() && sign(h.leading()) != s)
                violate("leading-sign", "leading coefficients of F and h_" + std::to_string(j + 1) + " differ in sign");
        }
    }

    bool strict = f_ok;
    if (!f.is_zero()) {
        for (const auto& iv : isolate_roots(f)) {
            bool root_strict = false;
            for (std::size_t j = 0; j < inst.psi().size(); ++j) {
                const Sign s = sign_at_root(inst.psi()[j], f, iv);
                if (s == Sign::Positive)
                    violate("psi-sign", "psi_" + std::to_string(j + 1) + " > 0 at a root of f", refine(f, iv, kWitnessWidth));
                if (s == Sign::Negative && h_strict[j]) root_strict = true;
            }
            strict = strict && root_strict;
        }
    }
    out.satisfied = out.violations.empty();
    out.strict = out.satisfied && strict;
    return out;
}

LiuWangInstance with_negated_psi(const LiuWangInstance& inst, std::size_t j) {
    if (j >= inst.psi().size()) throw DomainError("with_negated_psi: no such psi");
    auto psi = inst.psi();
    psi[j] = -psi[j];
    auto out = LiuWangInstance::assemble(inst.f(), inst.h(), inst.phi(), std::move(psi));
    out.label = inst.label + " (psi_" + std::to_string(j + 1) + " negated)";
    return out;
}

namespace {

UniPoly g(int n, int d) { return closed_form(n, d).poly; }
UniPoly lin(long c0, long c1) { return UniPoly::from_ints({c0, c1}); }

std::string label(const char* family, int n, int d) {
    return std::string(family) + " (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
}

}  // namespace

LiuWangInstance liu_wang_fixed_d(int n, int d) {
    if (d < 1 || n < d + 1) throw DomainError("liu_wang_fixed_d needs d >= 1, n >= d + 1");
    const Rational inv = make_rational(1, n - d + 1);
    const UniPoly phi = lin(n, 2L * d - n - 1) * inv;
    const UniPoly psi = UniPoly::t() * (Rational(n - d) * inv);
    auto out = LiuWangInstance(g(n + 2, d), g(n + 1, d), {g(n, d)}, phi, {psi});
    out.label = label("fixed-d", n, d);
    return out;
}

LiuWangInstance liu_wang_fixed_n(int n, int d) {
    if (d < 1 || d > n / 2 - 2) throw DomainError("liu_wang_fixed_n needs 1 <= d <= floor(n/2) - 2");
    const long den = static_cast<long>(d + 1) * (n - 2 - d) * (n - 1 - 2 * d);
    const long sq = static_cast<long>(n - d - 2) * (n - d - 2) + static_cast<long>(d) * d + n - 2;
    const UniPoly c1 = lin(sq, static_cast<long>(n - 3 - 2 * d) * (n - 1 - 2 * d)) * make_rational(n - 2 - 2 * d, den);
    const UniPoly c2 = UniPoly::constant(make_rational(-static_cast<long>(d) * (n - 1 - d) * (n - 3 - 2 * d), den));
    auto out = LiuWangInstance(g(n, d + 2), g(n, d + 1), {g(n, d)}, c1, {c2});
    out.label = label("fixed-n", n, d);
    return out;
}

LiuWangInstance liu_wang_even_diagonal(int d) {
    if (d < 0) throw DomainError("liu_wang_even_diagonal needs d >= 0");
    const Rational inv = make_rational(1, d + 1);
    const UniPoly phi = lin(2, 1) * (Rational(2 * d + 1) * inv);
    const UniPoly psi = UniPoly::monomial(-Rational(d) * inv, 2);
    auto out = LiuWangInstance(g(2 * d + 4, d + 2), g(2 * d + 2, d + 1), {g(2 * d, d)}, phi, {psi});
    out.label = label("diag-2d", 2 * d + 4, d + 2);
    return out;
}

LiuWangInstance liu_wang_odd_diagonal(int d) {
    if (d < 1) throw DomainError("liu_wang_odd_diagonal needs d >= 1");
    const long den = static_cast<long>(d + 1) * (2 * d - 1);
    const long d2 = static_cast<long>(d) * d;
    const UniPoly phi = lin(2 * (4 * d2 - 1), 4 * d2) * make_rational(1, den);
    const UniPoly psi = UniPoly::monomial(make_rational(-static_cast<long>(2 * d + 1) * (d - 1), den), 2);
    auto out = LiuWangInstance(g(2 * d + 3, d + 1), g(2 * d + 1, d), {g(2 * d - 1, d - 1)}, phi, {psi});
    out.label = label("diag-2d+1", 2 * d + 3, d + 1);
    return out;
}

LiuWangInstance liu_wang_half_odd_step(int d) {
    if (d < 1) throw DomainError("liu_wang_half_odd_step needs d >= 1");
    const UniPoly phi = UniPoly::constant(make_rational(2 * d + 1, d + 1));
    const UniPoly psi = UniPoly::monomial(make_rational(d, d + 1), 1);
    auto out = LiuWangInstance(g(2 * d + 3, d + 1), g(2 * d + 2, d + 1), {g(2 * d + 1, d)}, phi, {psi});
    out.label = label("diag-half", 2 * d + 3, d + 1);
    return out;
}

LiuWangInstance liu_wang_half_even_step(int d) {
    if (d < 0) throw DomainError("liu_wang_half_even_step needs d >= 0");
    auto out = LiuWangInstance(g(2 * d + 4, d + 2), g(2 * d + 3, d + 1), {g(2 * d + 2, d + 1)}, UniPoly::constant(2),
                               {UniPoly::t()});
    out.label = label("diag-half", 2 * d + 4, d + 2);
    return out;
}

std::vector<LiuWangInstance> liu_wang_grid(Family family, int n_max) {
    std::vector<LiuWangInstance> out;
    switch (family) {
        case Family::FixedD:
            for (int d = 1; d + 3 <= n_max; ++d)
                for (int n = d + 1; n + 2 <= n_max; ++n) out.push_back(liu_wang_fixed_d(n, d));
            break;
        case Family::FixedN:
            for (int n = 6; n <= n_max; ++n)
                for (int d = 1; d <= n / 2 - 2; ++d) out.push_back(liu_wang_fixed_n(n, d));
            break;
        case Family::Diag2d:
            for (int d = 1; 2 * d + 4 <= n_max; ++d) out.push_back(liu_wang_even_diagonal(d));
            break;
        case Family::Diag2dPlus1:
            for (int d = 1; 2 * d + 3 <= n_max; ++d) out.push_back(liu_wang_odd_diagonal(d));
            break;
        case Family::DiagHalf:
            for (int d = 0; 2 * d + 4 <= n_max; ++d) {
                if (d >= 1) out.push_back(liu_wang_half_odd_step(d));
                out.push_back(liu_wang_half_even_step(d));
            }
            break;
    }
    return out;
}

}  // namespace gpoly
