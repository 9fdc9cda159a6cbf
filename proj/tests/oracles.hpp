#pragma once

// Test-side reference computations. Nothing here calls into the library's
// closed form, root isolation or statistics code.

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <vector>

#include "gpoly/poly.hpp"

namespace oracle {

// Pascal triangle rows 0..n.
inline std::vector<std::vector<mpz_class>> pascal(int n) {
    std::vector<std::vector<mpz_class>> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[i].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int k = 1; k < i; ++k) c[i][k] = c[i - 1][k - 1] + c[i - 1][k];
    }
    return c;
}

inline mpz_class binom(const std::vector<std::vector<mpz_class>>& c, int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return c[n][k];
}

// [t^i] g_{n,d} = C(n-i-1, i-1) C(n-2i, d-i) for 1 <= i <= min(d, n-d).
inline std::vector<mpz_class> g_coeffs(int n, int d) {
    const auto c = pascal(std::max(n, 1));
    const int top = std::min(d, n - d);
    std::vector<mpz_class> out(static_cast<std::size_t>(std::max(top, 0)) + 1, 0);
    for (int i = 1; i <= top; ++i) out[i] = binom(c, n - i - 1, i - 1) * binom(c, n - 2 * i, d - i);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline gpoly::UniPoly g_poly(int n, int d) {
    std::vector<mpq_class> q;
    for (const auto& z : g_coeffs(n, d)) q.emplace_back(z);
    return gpoly::UniPoly(std::move(q));
}

inline mpz_class g_at_one(int n, int d) {
    mpz_class s = 0;
    for (const auto& z : g_coeffs(n, d)) s += z;
    return s;
}

// prod (t - r) over the given roots, scaled by lead.
inline gpoly::UniPoly from_roots(const std::vector<mpq_class>& roots, const mpq_class& lead = 1) {
    std::vector<mpq_class> c{lead};
    for (const auto& r : roots) {
        std::vector<mpq_class> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return gpoly::UniPoly(std::move(c));
}

// Hand-rolled generators. Fixed seeds keep failures reproducible.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    mpq_class rational(int span = 9, int max_den = 6) {
        mpq_class q(integer(-span, span), integer(1, max_den));
        q.canonicalize();
        return q;
    }

    gpoly::UniPoly poly(int max_degree, int span = 9) {
        std::vector<mpq_class> c;
        const int deg = integer(-1, max_degree);
        for (int i = 0; i <= deg; ++i) c.push_back(rational(span));
        return gpoly::UniPoly(std::move(c));
    }

    // Distinct rational roots, sorted ascending.
    std::vector<mpq_class> distinct_roots(int count, int span = 12, int max_den = 4) {
        std::vector<mpq_class> out;
        while (static_cast<int>(out.size()) < count) {
            mpq_class r = rational(span, max_den);
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace oracle
