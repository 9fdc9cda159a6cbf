#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "gpoly/poly.hpp"

namespace gpoly {

enum class IntervalKind { ExactRoot, Open };

/// Isolates one distinct real root of some polynomial p.
///
/// ExactRoot: lo == hi == the root. Open: the root lies strictly inside
/// (lo, hi), neither endpoint is a root of p, and no other root of p lies in
/// [lo, hi].
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    IntervalKind kind = IntervalKind::Open;

    static IsolatingInterval exact(const Rational& r) { return {r, r, IntervalKind::ExactRoot}; }
    Rational width() const { return hi - lo; }
    bool is_exact() const { return kind == IntervalKind::ExactRoot; }

    friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Endpoint of a counting interval; std::nullopt stands for -inf as a lower
/// bound and +inf as an upper bound.
using Bound = std::optional<Rational>;

/// Negative-remainder Sturm chain of (p, p'), each member divided by its
/// positive content. Sign structure is that of the classical chain.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& p);

    const std::vector<UniPoly>& members() const { return chain_; }
    /// Sign variations at x, zeros skipped.
    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;
    /// True when the last member is a nonzero constant, i.e. p is squarefree.
    bool squarefree() const { return chain_.back().degree() == 0; }

private:
    std::vector<UniPoly> chain_;
};

/// Distinct real roots of p in the open interval (lo, hi).
/// p must be nonzero and squarefree, lo < hi, and finite endpoints must not
/// be roots (EndpointRootError; shift them with nudge_off_root).
int sturm_count(const UniPoly& p, const Bound& lo, const Bound& hi);

/// Strict upper bound on |r| for every complex root r: 1 + max |a_i / a_n|.
Rational cauchy_bound(const UniPoly& p);

/// Point near x that is not a root of p and with no root of p strictly
/// between x and the result. direction is +1 or -1. The first step tried is
/// 1 / (1 + denominator of cauchy_bound(p)), halved until it qualifies.
Rational nudge_off_root(const UniPoly& p, const Rational& x, int direction);

/// Ascending isolating intervals, one per distinct real root of p.
/// Rational roots come back as ExactRoot. Throws DomainError on p == 0.
std::vector<IsolatingInterval> isolate_roots(const UniPoly& p);

/// Shrinks iv until its width is at most width. ExactRoot intervals are
/// returned unchanged; bisection that hits the root returns ExactRoot.
IsolatingInterval refine(const UniPoly& p, const IsolatingInterval& iv, const Rational& width);

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// Exact sign of q at the root of p isolated by iv.
Sign sign_at_root(const UniPoly& q, const UniPoly& p, const IsolatingInterval& iv);

/// A real algebraic number: the unique root of a squarefree primitive
/// polynomial inside an isolating interval. compare() may refine both sides.
struct AlgebraicReal {
    UniPoly poly;
    IsolatingInterval iv;

    /// Width-halving step; keeps isolation.
    void bisect();
};

std::strong_ordering compare(AlgebraicReal& a, AlgebraicReal& b);

struct RealRoot {
    AlgebraicReal value;
    int multiplicity = 1;
};

/// All real roots of p with multiplicities, ascending.
std::vector<RealRoot> real_roots(const UniPoly& p);

}  // namespace gpoly
