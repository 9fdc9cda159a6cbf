#include "gpoly/gpoly.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "gpoly/errors.hpp"

namespace gpoly {

namespace {

// Incremental factorials 0!..max!, local to one call.
class FactorialTable {
public:
    explicit FactorialTable(int max) : table_(static_cast<std::size_t>(std::max(max, 0)) + 1) {
        table_[0] = 1;
        for (std::size_t k = 1; k < table_.size(); ++k) table_[k] = table_[k - 1] * static_cast<unsigned long>(k);
    }
    const Integer& operator()(int k) const { return table_.at(static_cast<std::size_t>(k)); }

private:
    std::vector<Integer> table_;
};

Integer coefficient_with(const FactorialTable& fact, int n, int d, int i) {
    if (i < 1 || i > std::min(d, n - d)) return 0;
    Integer den = fact(d - i) * fact(n - d - i) * fact(i - 1);
    Integer out;
    mpz_divexact(out.get_mpz_t(), fact(n - i - 1).get_mpz_t(), den.get_mpz_t());
    return out;
}

void check_nd(int n, int d) {
    if (n < 0) throw DomainError("n must be nonnegative, got n = " + std::to_string(n));
    if (d < 0 || d > n)
        throw DomainError("d must satisfy 0 <= d <= n, got n = " + std::to_string(n) + ", d = " + std::to_string(d));
}

UniPoly lin(long c0, long c1) { return UniPoly::from_ints({c0, c1}); }
const UniPoly& T() {
    static const UniPoly t = UniPoly::t();
    return t;
}

Rational frac(long num, long den) {
    if (den == 0) throw SingularCoefficientError("recurrence denominator vanishes");
    return make_rational(num, den);
}

void require(bool ok, const std::string& bound, int n, int d, RecurrenceScheme s) {
    if (!ok)
        throw DomainError("(n, d) = (" + std::to_string(n) + ", " + std::to_string(d) + ") violates " + bound +
                          " for scheme " + std::string(scheme_name(s)));
}

struct SchemeInfo {
    RecurrenceScheme scheme;
    std::string_view name;
    std::string_view domain;
};

constexpr std::array<SchemeInfo, 9> kSchemes{{
    {RecurrenceScheme::FixedDThreeTerm, "fixed-d-three-term", "d >= 1, n >= d + 2"},
    {RecurrenceScheme::FixedDDerivative, "fixed-d-derivative", "d >= 1, n >= d + 2"},
    {RecurrenceScheme::FixedNThreeTerm, "fixed-n-three-term", "n >= 3, 2 <= d <= floor(n/2) + 1, d <= n - 1"},
    {RecurrenceScheme::FixedNDerivative, "fixed-n-derivative", "n >= 3, 2 <= d <= n - 1"},
    {RecurrenceScheme::TriangularFirst, "triangular-first", "n >= 3, 2 <= d <= n - 1"},
    {RecurrenceScheme::TriangularSecond, "triangular-second", "n >= 3, 2 <= d <= n - 1"},
    {RecurrenceScheme::EvenDiagonal, "even-diagonal", "n = 2d, d >= 2"},
    {RecurrenceScheme::OddDiagonal, "odd-diagonal", "n = 2d + 1, d >= 2"},
    {RecurrenceScheme::HalfDiagonal, "half-diagonal", "d = floor(n/2), n >= 3"},
}};

const SchemeInfo& info(RecurrenceScheme s) {
    for (const auto& i : kSchemes)
        if (i.scheme == s) return i;
    throw DomainError("unknown recurrence scheme");
}

void check_domain(int n, int d, RecurrenceScheme s) {
    using RS = RecurrenceScheme;
    switch (s) {
        case RS::FixedDThreeTerm:
        case RS::FixedDDerivative:
            require(d >= 1, "d >= 1", n, d, s);
            require(n >= d + 2, "n >= d + 2", n, d, s);
            return;
        case RS::FixedNThreeTerm:
            require(n >= 3, "n >= 3", n, d, s);
            require(d >= 2, "d >= 2", n, d, s);
            require(d <= n / 2 + 1, "d <= floor(n/2) + 1", n, d, s);
            require(d <= n - 1, "d <= n - 1", n, d, s);
            return;
        case RS::FixedNDerivative:
        case RS::TriangularFirst:
        case RS::TriangularSecond:
            require(n >= 3, "n >= 3", n, d, s);
            require(d >= 2, "d >= 2", n, d, s);
            require(d <= n - 1, "d <= n - 1", n, d, s);
            return;
        case RS::EvenDiagonal:
            require(n == 2 * d, "n = 2d", n, d, s);
            require(d >= 2, "d >= 2", n, d, s);
            return;
        case RS::OddDiagonal:
            require(n == 2 * d + 1, "n = 2d + 1", n, d, s);
            require(d >= 2, "d >= 2", n, d, s);
            return;
        case RS::HalfDiagonal:
            require(n >= 3, "n >= 3", n, d, s);
            require(d == n / 2, "d = floor(n/2)", n, d, s);
            return;
    }
}

UniPoly fixed_d_three_term(int n, int d) {
    UniPoly before = {};      // g(d, d)
    UniPoly last = T();       // g(d+1, d)
    for (int m = d + 2; m <= n; ++m) {
        const long den = m - d - 1;
        UniPoly next = lin(m - 2, 2L * d - m + 1) * last * frac(1, den) + T() * before * frac(m - d - 2, den);
        before = std::move(last);
        last = std::move(next);
    }
    return last;
}

UniPoly fixed_d_derivative(int n, int d) {
    UniPoly last = T();
    const UniPoly t_t1 = UniPoly::from_ints({0, 1, 1});
    for (int m = d + 2; m <= n; ++m) {
        const Rational inv = frac(1, m - d - 1);
        last = (lin(m - 1, d) * last - t_t1 * derivative(last)) * inv;
    }
    return last;
}

UniPoly fixed_n_three_term(int n, int d) {
    auto c = [](int e, int m) { return static_cast<long>(m + 1 - 2 * e); };
    UniPoly before = {};   // g(n, 0)
    UniPoly last = T();    // g(n, 1)
    for (int e = 2; e <= d; ++e) {
        if (c(e, n + 2) == 0) throw SingularCoefficientError("c_d(n+2) = n + 3 - 2d vanishes at d = " + std::to_string(e));
        const long den = static_cast<long>(e - 1) * (n - e) * c(e, n + 2);
        const long sq = static_cast<long>(n - e) * (n - e) + static_cast<long>(e - 2) * (e - 2) + n - 2;
        const UniPoly first = lin(sq, c(e, n) * c(e, n + 2)) * frac(c(e, n + 1), den);
        const Rational second = frac(static_cast<long>(e - 2) * (n + 1 - e) * c(e, n), den);
        UniPoly next = first * last - before * second;
        before = std::move(last);
        last = std::move(next);
    }
    return last;
}

UniPoly fixed_n_derivative(int n, int d) {
    UniPoly last = T();
    const UniPoly t_t1 = UniPoly::from_ints({0, 1, 1});
    for (int e = 2; e <= d; ++e) {
        const long den = static_cast<long>(e - 1) * (n - e);
        const long k = n + 1 - 2 * e;
        const long c0 = static_cast<long>(n - e) * (n - e) + n - 2 * e + 1;
        last = (lin(c0, k * (n + 1 - e)) * last - t_t1 * derivative(last) * Rational(k)) * frac(1, den);
    }
    return last;
}

// Table over m <= n, e <= d with boundary g(m, 1) = t (m >= 2), g(m, m) = 0.
template <typename Step>
UniPoly triangular(int n, int d, Step step) {
    std::map<std::pair<int, int>, UniPoly> table;
    auto get = [&](int m, int e) -> const UniPoly& { return table.at({m, e}); };
    for (int m = 1; m <= n; ++m) {
        for (int e = 1; e <= std::min(d, m); ++e) {
            if (e == m) table[{m, e}] = UniPoly{};
            else if (e == 1) table[{m, e}] = T();
            else table[{m, e}] = step(m, e, get);
        }
    }
    return table.at({n, d});
}

UniPoly triangular_first(int n, int d) {
    return triangular(n, d, [](int m, int e, auto& get) {
        const long den = e - 1;
        return get(m, e - 1) * frac(m - e, den) + T() * get(m - 1, e - 1) * frac(m + 1 - 2 * e, den);
    });
}

UniPoly triangular_second(int n, int d) {
    return triangular(n, d, [](int m, int e, auto& get) {
        const long a = static_cast<long>(m - 2 * e) * (m + 1 - 2 * e);
        const long b = static_cast<long>(e - 1) * (e - 1);
        const UniPoly den = lin(b, a);
        if (den.is_zero()) throw SingularCoefficientError("linear denominator vanishes identically");
        const UniPoly num = get(m, e - 1) * Rational(static_cast<long>(e - 1) * (m - e)) +
                            T() * get(m - 1, e) * Rational(static_cast<long>(m + 1 - 2 * e) * (m - 1 - e));
        auto [q, r] = divmod(num, den);
        if (!r.is_zero()) throw InvariantViolation("triangular-second: linear denominator does not divide");
        return q;
    });
}

UniPoly even_diagonal(int k) {
    UniPoly before = {};   // g(0, 0)
    UniPoly last = T();    // g(2, 1)
    const UniPoly t2 = UniPoly::monomial(1, 2);
    for (int e = 1; e < k; ++e) {   // g(2e+2, e+1)
        UniPoly next = lin(2, 1) * last * frac(2L * e - 1, e) - t2 * before * frac(e - 1, e);
        before = std::move(last);
        last = std::move(next);
    }
    return last;
}

UniPoly odd_diagonal(int k) {
    UniPoly before = {};   // g(1, 0)
    UniPoly last = T();    // g(3, 1)
    const UniPoly t2 = UniPoly::monomial(1, 2);
    for (int e = 1; e < k; ++e) {   // g(2e+3, e+1)
        const long den = static_cast<long>(e + 1) * (2 * e - 1);
        const long e2 = static_cast<long>(e) * e;
        UniPoly next = lin(2 * (4 * e2 - 1), 4 * e2) * last * frac(1, den) -
                       t2 * before * frac(static_cast<long>(2 * e + 1) * (e - 1), den);
        before = std::move(last);
        last = std::move(next);
    }
    return last;
}

UniPoly half_diagonal(int n) {
    UniPoly before = {};   // g(1, 0)
    UniPoly last = T();    // g(2, 1)
    for (int m = 3; m <= n; ++m) {
        UniPoly next;
        if (m % 2 == 1) {
            const int e = m / 2;   // g(2e+1, e)
            next = last * frac(2L * e - 1, e) + T() * before * frac(e - 1, e);
        } else {
            next = last * Rational(2) + T() * before;   // g(2e+2, e+1)
        }
        before = std::move(last);
        last = std::move(next);
    }
    return last;
}

}  // namespace

GPolyRecord closed_form(int n, int d) {
    check_nd(n, d);
    if (d == 0 || d == n) return {n, d, {}};
    FactorialTable fact(n);
    std::vector<Rational> coeffs(static_cast<std::size_t>(std::min(d, n - d)) + 1);
    for (int i = 1; i <= std::min(d, n - d); ++i)
        coeffs[static_cast<std::size_t>(i)] = Rational(coefficient_with(fact, n, d, i));
    return {n, d, UniPoly(std::move(coeffs))};
}

Rational coefficient(int n, int d, int i) {
    check_nd(n, d);
    if (i < 1 || i > std::min(d, n - d)) return 0;
    return Rational(coefficient_with(FactorialTable(n), n, d, i));
}

std::pair<int, int> symmetry_normalize(int n, int d) {
    check_nd(n, d);
    return {n, std::min(d, n - d)};
}

const std::vector<RecurrenceScheme>& all_schemes() {
    static const std::vector<RecurrenceScheme> schemes = [] {
        std::vector<RecurrenceScheme> v;
        for (const auto& i : kSchemes) v.push_back(i.scheme);
        return v;
    }();
    return schemes;
}

std::string_view scheme_name(RecurrenceScheme s) { return info(s).name; }
std::string_view scheme_domain(RecurrenceScheme s) { return info(s).domain; }

RecurrenceScheme parse_scheme(std::string_view name) {
    for (const auto& i : kSchemes)
        if (i.name == name) return i.scheme;
    throw DomainError("unknown recurrence scheme '" + std::string(name) + "'");
}

bool scheme_applies(RecurrenceScheme s, int n, int d) {
    try {
        check_domain(n, d, s);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

GPolyRecord via_recurrence(int n, int d, RecurrenceScheme scheme) {
    check_domain(n, d, scheme);
    UniPoly p;
    using RS = RecurrenceScheme;
    switch (scheme) {
        case RS::FixedDThreeTerm: p = fixed_d_three_term(n, d); break;
        case RS::FixedDDerivative: p = fixed_d_derivative(n, d); break;
        case RS::FixedNThreeTerm: p = fixed_n_three_term(n, d); break;
        case RS::FixedNDerivative: p = fixed_n_derivative(n, d); break;
        case RS::TriangularFirst: p = triangular_first(n, d); break;
        case RS::TriangularSecond: p = triangular_second(n, d); break;
        case RS::EvenDiagonal: p = even_diagonal(d); break;
        case RS::OddDiagonal: p = odd_diagonal(d); break;
        case RS::HalfDiagonal: p = half_diagonal(n); break;
    }
    for (const auto& c : p.coeffs())
        if (!is_integer(c))
            throw InvariantViolation("recurrence " + std::string(scheme_name(scheme)) + " produced a non-integer coefficient " +
                                     to_string(c) + " at (n, d) = (" + std::to_string(n) + ", " + std::to_string(d) + ")");
    return {n, d, std::move(p)};
}

}  // namespace gpoly
