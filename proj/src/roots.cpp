#include "gpoly/roots.hpp"

#include <algorithm>
#include <utility>

#include "gpoly/errors.hpp"

namespace gpoly {

namespace {

UniPoly squarefree_of(const UniPoly& p) { return gcd_squarefree(p).squarefree_part; }

int sign_variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

SturmChain::SturmChain(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
    chain_.push_back(primitive_part(p));
    UniPoly dp = derivative(p);
    if (dp.is_zero()) return;
    chain_.push_back(primitive_part(dp));
    for (;;) {
        const auto n = chain_.size();
        UniPoly r = divmod(chain_[n - 2], chain_[n - 1]).remainder;
        if (r.is_zero()) break;
        chain_.push_back(primitive_part(-r));
    }
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& m : chain_) signs.push_back(sign_at(m, x));
    return sign_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& m : chain_) {
        int s = sign(m.leading());
        signs.push_back(m.degree() % 2 == 0 ? s : -s);
    }
    return sign_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& m : chain_) signs.push_back(sign(m.leading()));
    return sign_variations(signs);
}

int sturm_count(const UniPoly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw DomainError("sturm_count: zero polynomial");
    if (lo && hi && !(*lo < *hi)) throw DomainError("sturm_count: need lo < hi");
    SturmChain chain(p);
    if (!chain.squarefree())
        throw DomainError("sturm_count: polynomial is not squarefree; pass gcd_squarefree(p).squarefree_part");
    if (lo && sign_at(p, *lo) == 0)
        throw EndpointRootError("sturm_count: lower endpoint " + to_string(*lo) + " is a root; perturb it with nudge_off_root");
    if (hi && sign_at(p, *hi) == 0)
        throw EndpointRootError("sturm_count: upper endpoint " + to_string(*hi) + " is a root; perturb it with nudge_off_root");
    const int vlo = lo ? chain.variations_at(*lo) : chain.variations_at_neg_inf();
    const int vhi = hi ? chain.variations_at(*hi) : chain.variations_at_pos_inf();
    return vlo - vhi;
}

Rational cauchy_bound(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("cauchy_bound: zero polynomial");
    Rational worst = 0;
    const Rational& lead = p.leading();
    for (int i = 0; i < p.degree(); ++i) {
        Rational ratio = abs(p.coeffs()[static_cast<std::size_t>(i)] / lead);
        if (ratio > worst) worst = ratio;
    }
    return worst + 1;
}

Rational nudge_off_root(const UniPoly& p, const Rational& x, int direction) {
    if (direction != 1 && direction != -1) throw DomainError("nudge_off_root: direction must be +1 or -1");
    const UniPoly sq = squarefree_of(p);
    if (sq.degree() < 1) return x + direction;
    const SturmChain chain(sq);
    const Rational bound = cauchy_bound(sq);
    Rational step = make_rational(1, 1 + Integer(bound.get_den()));
    for (;;) {
        const Rational y = x + direction * step;
        if (sign_at(sq, y) != 0) {
            const Rational& a = direction > 0 ? x : y;
            const Rational& b = direction > 0 ? y : x;
            // V(a) - V(b) counts roots in (a, b]; discount b when it is a root.
            int between = chain.variations_at(a) - chain.variations_at(b);
            if (sign_at(sq, b) == 0) --between;
            if (between == 0) return y;
        }
        step /= 2;
    }
}

namespace {

// Roots of a squarefree primitive polynomial with positive leading term.
class Isolator {
public:
    explicit Isolator(UniPoly sq) : sq_(std::move(sq)), chain_(sq_) {}

    std::vector<IsolatingInterval> run() {
        const Rational b = cauchy_bound(sq_);
        split(-b, b, chain_.variations_at(-b), chain_.variations_at(b));
        std::sort(out_.begin(), out_.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
        return std::move(out_);
    }

private:
    bool is_root(const Rational& x) const { return sign_at(sq_, x) == 0; }

    // Open interval (lo, hi); either endpoint may be an already-recorded root.
    void split(const Rational& lo, const Rational& hi, int vlo, int vhi) {
        const int count = vlo - vhi - (is_root(hi) ? 1 : 0);
        if (count == 0) return;
        if (count == 1) {
            out_.push_back(single(lo, hi));
            return;
        }
        const Rational mid = (lo + hi) / 2;
        const int vmid = chain_.variations_at(mid);
        if (is_root(mid)) out_.push_back(IsolatingInterval::exact(mid));
        split(lo, mid, vlo, vmid);
        split(mid, hi, vmid, vhi);
    }

    // Exactly one root strictly inside (lo, hi). A rational root a/b of a
    // primitive integer polynomial has b | lc, so once hi - lo < 1/lc the
    // interval holds at most one candidate k/lc.
    IsolatingInterval single(Rational lo, Rational hi) const {
        const Rational grid = 1 / abs(sq_.leading());
        while (hi - lo >= grid || is_root(lo) || is_root(hi)) {
            const Rational mid = (lo + hi) / 2;
            if (is_root(mid)) return IsolatingInterval::exact(mid);
            if (chain_.variations_at(lo) - chain_.variations_at(mid) == 1) hi = mid;
            else lo = mid;
        }
        const Integer lc = abs(sq_.leading().get_num());
        Rational scaled = lo * lc;
        Integer k;
        mpz_cdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        const Rational candidate = make_rational(k, lc);
        if (candidate > lo && candidate < hi && is_root(candidate)) return IsolatingInterval::exact(candidate);
        return {lo, hi, IntervalKind::Open};
    }

    UniPoly sq_;
    SturmChain chain_;
    std::vector<IsolatingInterval> out_;
};

void check_isolates(const UniPoly& sq, const IsolatingInterval& iv) {
    if (iv.is_exact()) {
        if (iv.lo != iv.hi || sign_at(sq, iv.lo) != 0)
            throw DomainError("exact-root interval does not hold a root");
        return;
    }
    if (!(iv.lo < iv.hi)) throw DomainError("open isolating interval needs lo < hi");
    if (sign_at(sq, iv.lo) == 0 || sign_at(sq, iv.hi) == 0)
        throw DomainError("isolating interval endpoint is a root");
    if (sturm_count(sq, iv.lo, iv.hi) != 1) throw DomainError("interval does not isolate exactly one root");
}

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("isolate_roots: zero polynomial");
    UniPoly sq = squarefree_of(p);
    if (sq.degree() < 1) return {};
    return Isolator(std::move(sq)).run();
}

IsolatingInterval refine(const UniPoly& p, const IsolatingInterval& iv, const Rational& width) {
    if (width <= 0) throw DomainError("refine: width must be positive");
    if (iv.is_exact()) return iv;
    if (p.is_zero()) throw DomainError("refine: zero polynomial");
    const UniPoly sq = squarefree_of(p);
    const int slo = sign_at(sq, iv.lo);
    const int shi = sign_at(sq, iv.hi);
    if (slo == 0 || shi == 0 || slo == shi || !(iv.lo < iv.hi))
        throw DomainError("refine: interval does not bracket a sign change");
    IsolatingInterval out = iv;
    while (out.width() > width) {
        const Rational mid = (out.lo + out.hi) / 2;
        const int s = sign_at(sq, mid);
        if (s == 0) return IsolatingInterval::exact(mid);
        if (s == slo) out.lo = mid;
        else out.hi = mid;
    }
    return out;
}

Sign sign_at_root(const UniPoly& q, const UniPoly& p, const IsolatingInterval& iv) {
    if (p.is_zero()) throw DomainError("sign_at_root: zero polynomial");
    const UniPoly sq = squarefree_of(p);
    check_isolates(sq, iv);
    auto as_sign = [](int s) { return static_cast<Sign>(s); };
    if (iv.is_exact()) return as_sign(sign_at(q, iv.lo));
    if (q.is_zero()) return Sign::Zero;
    if (q.is_constant()) return as_sign(sign(q.leading()));

    const UniPoly common = gcd(sq, q);
    if (common.degree() >= 1 && sturm_count(common, iv.lo, iv.hi) >= 1) return Sign::Zero;

    const UniPoly qs = squarefree_of(q);
    AlgebraicReal root{sq, iv};
    for (;;) {
        const auto& cur = root.iv;
        if (cur.is_exact()) return as_sign(sign_at(q, cur.lo));
        if (sign_at(qs, cur.lo) != 0 && sign_at(qs, cur.hi) != 0 && sturm_count(qs, cur.lo, cur.hi) == 0)
            return as_sign(sign_at(q, cur.lo));
        root.bisect();
    }
}

void AlgebraicReal::bisect() {
    if (iv.is_exact()) return;
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int s = sign_at(poly, mid);
    if (s == 0) {
        iv = IsolatingInterval::exact(mid);
    } else if (s == sign_at(poly, iv.lo)) {
        iv.lo = mid;
    } else {
        iv.hi = mid;
    }
}

namespace {

// x against the open-interval root of b.
std::strong_ordering compare_point(const Rational& x, const AlgebraicReal& b) {
    if (x <= b.iv.lo) return std::strong_ordering::less;
    if (x >= b.iv.hi) return std::strong_ordering::greater;
    const int s = sign_at(b.poly, x);
    if (s == 0) return std::strong_ordering::equal;
    // Same sign as at lo means the root is still ahead of x.
    return s == sign_at(b.poly, b.iv.lo) ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace

std::strong_ordering compare(AlgebraicReal& a, AlgebraicReal& b) {
    UniPoly common;
    bool have_common = false;
    for (;;) {
        if (a.iv.is_exact() && b.iv.is_exact()) return cmp(a.iv.lo, b.iv.lo) <=> 0;
        if (a.iv.is_exact()) return compare_point(a.iv.lo, b);
        if (b.iv.is_exact()) return 0 <=> compare_point(b.iv.lo, a);
        if (a.iv.hi <= b.iv.lo) return std::strong_ordering::less;
        if (b.iv.hi <= a.iv.lo) return std::strong_ordering::greater;
        if (!have_common) {
            common = gcd(a.poly, b.poly);
            have_common = true;
        }
        if (common.degree() >= 1) {
            const Rational lo = std::max(a.iv.lo, b.iv.lo);
            const Rational hi = std::min(a.iv.hi, b.iv.hi);
            if (sturm_count(common, lo, hi) >= 1) return std::strong_ordering::equal;
        }
        a.bisect();
        b.bisect();
    }
}

std::vector<RealRoot> real_roots(const UniPoly& p) {
    std::vector<RealRoot> out;
    const auto factors = squarefree_factorization(p);
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].degree() < 1) continue;
        for (const auto& iv : isolate_roots(factors[k]))
            out.push_back({AlgebraicReal{factors[k], iv}, static_cast<int>(k + 1)});
    }
    // Insertion sort: compare refines its arguments, which std::sort does not allow.
    for (std::size_t i = 1; i < out.size(); ++i)
        for (std::size_t j = i; j > 0 && compare(out[j].value, out[j - 1].value) < 0; --j) std::swap(out[j], out[j - 1]);
    return out;
}

}  // namespace gpoly
