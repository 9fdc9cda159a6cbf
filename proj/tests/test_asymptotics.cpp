#include <doctest.h>

#include <cmath>

#include "gpoly/asymptotics.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/gpoly.hpp"
#include "oracles.hpp"

using namespace gpoly;

namespace {

// Moments from the coefficient distribution: mean = E[k], var = E[k^2] - mean^2.
std::pair<mpq_class, mpq_class> oracle_moments(int n, int d) {
    const auto c = oracle::g_coeffs(n, d);
    mpq_class s = 0, s1 = 0, s2 = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        s += c[k];
        s1 += c[k] * static_cast<unsigned long>(k);
        s2 += c[k] * static_cast<unsigned long>(k * k);
    }
    const mpq_class mu = s1 / s;
    return {mu, s2 / s - mu * mu};
}

// Rational bracket lo < sqrt2 < hi of width below 2^-200.
std::pair<mpq_class, mpq_class> sqrt2_bracket() {
    mpq_class lo = 1, hi = 2;
    const mpq_class eps = mpq_class(1, mpz_class(1) << 200);
    while (hi - lo > eps) {
        mpq_class mid = (lo + hi) / 2;
        (mid * mid < 2 ? lo : hi) = mid;
    }
    return {lo, hi};
}

}  // namespace

TEST_CASE("f_n(1) sequence") {
    const auto f = half_diagonal_at_one(60);
    CHECK(f[3] == 1);
    CHECK(f[4] == 3);
    CHECK(f[5] == 5);
    CHECK(f[6] == 13);
    CHECK(f[7] == 25);
    for (int n = 2; n <= 60; ++n) CHECK(f[n] == oracle::g_at_one(n, n / 2));
    for (int n = 4; n < 60; ++n) CHECK(f[n + 1] > f[n]);
}

TEST_CASE("stats examples") {
    const auto s4 = stats(4);
    CHECK(s4.mu == make_rational(4, 3));
    CHECK(s4.sigma2 == make_rational(2, 9));
    CHECK(s4.r == make_rational(1, 3));
    CHECK(std::isfinite(s4.clt_distance));
    CHECK(std::isfinite(s4.llt_distance));
    const auto s3 = stats(3);
    CHECK(s3.mu == 1);
    CHECK(s3.sigma2 == 0);
    CHECK(std::isnan(s3.clt_distance));
    CHECK(stats(7).r == make_rational(13, 25));
    CHECK_THROWS_AS(stats(2), DomainError);
}

TEST_CASE("stats agree with the coefficient-moment oracle") {
    for (int n = 3; n <= 80; ++n) {
        const auto s = stats(n);
        const auto [mu, var] = oracle_moments(n, n / 2);
        CHECK(s.mu == mu);
        CHECK(s.sigma2 == var);
        if (n >= 4) {
            CHECK(s.r > 0);
            CHECK(s.r < 1);
        }
    }
}

TEST_CASE("r sequence") {
    const auto rs = r_sequence(30);
    CHECK(rs.front().n == 3);
    CHECK(rs.back().n == 30);
    CHECK(rs[1].r == make_rational(1, 3));
    CHECK(rs[4].r == make_rational(13, 25));
    for (const auto& e : rs) CHECK(e.r == make_rational(oracle::g_at_one(e.n - 1, (e.n - 1) / 2), oracle::g_at_one(e.n, e.n / 2)));
    CHECK_THROWS_AS(r_sequence(3), DomainError);
}

TEST_CASE("limit gap against a rational sqrt2 bracket") {
    const auto [lo, hi] = sqrt2_bracket();
    for (const auto& e : r_sequence(120)) {
        const mpq_class a = e.r - (lo - 1), b = e.r - (hi - 1);
        const double expect = std::max(std::fabs(a.get_d()), std::fabs(b.get_d()));
        CHECK(limit_gap(e.r) == doctest::Approx(expect).epsilon(1e-12));
    }
    // Fixed points of A^-1 = 2 + A satisfy A^2 + 2A - 1 = 0: -1 + sqrt2 lies in the bracket root.
    const mpq_class a_lo = lo - 1, a_hi = hi - 1;
    CHECK(a_lo * a_lo + 2 * a_lo - 1 < 0);
    CHECK(a_hi * a_hi + 2 * a_hi - 1 > 0);
    const mpq_class b_lo = -1 - hi, b_hi = -1 - lo;  // -1 - sqrt2
    CHECK(b_lo * b_lo + 2 * b_lo - 1 > 0);
    CHECK(b_hi * b_hi + 2 * b_hi - 1 < 0);
}

TEST_CASE("lemma sweeps") {
    const auto l44 = check_lemma44(40);
    CHECK(l44.pass());
    CHECK(l44.rows.front().m == 2);
    CHECK(l44.rows.front().r == make_rational(1, 3));
    const auto l45 = check_lemma45(40);
    CHECK(l45.pass());
    CHECK(l45.rows.front().m == 3);
    CHECK(l45.rows.front().r == make_rational(13, 25));
    CHECK(check_variance_bounds(40).pass());
    CHECK_THROWS_AS(check_lemma44(1), DomainError);
    CHECK_THROWS_AS(check_lemma45(2), DomainError);
}

TEST_CASE("hand values behind the lemma checks") {
    const mpq_class r4(1, 3);
    CHECK(r4 * r4 + 2 * r4 - 1 == mpq_class(-2, 9));
    const mpq_class x = 2 - 3 * r4 - r4 * r4;
    CHECK(x == mpq_class(8, 9));
    CHECK((2 - x) * (2 - x) == mpq_class(100, 81));
    const mpq_class r7(13, 25);
    CHECK(4 - 6 * r7 - 3 * r7 * r7 == mpq_class(43, 625));
    CHECK((mpq_class(38, 25) - 1) * (mpq_class(38, 25) - 1) < mpq_class(21, 9));
}

TEST_CASE("interval step inequality matches a long double evaluation") {
    for (int m = 1; m <= 200; ++m) {
        const long double M = m;
        const long double lhs = 1.0L / ((2 * M + 1) / (M + 1) + M / (M + 1) * (M / (M + std::sqrt(2 * M * M + M))));
        const long double rhs = -1.0L + std::sqrt(2 * (M + 1) * (M + 1) + M + 1) / (M + 1);
        CAPTURE(m);
        CHECK(lemma45_step_holds(m) == (lhs < rhs));
    }
    // The crossover sits between 1 and 2.
    CHECK_FALSE(lemma45_step_holds(1));
    CHECK(lemma45_step_holds(2));
}

TEST_CASE("gaussian distances against brute force") {
    for (int n : {4, 9, 20, 41}) {
        const UniPoly f = closed_form(n, n / 2).poly;
        const auto s = stats(n);
        const Distances dist = gaussian_distances(f, s.mu, s.sigma2, 4001);
        const double mu = s.mu.get_d(), sd = std::sqrt(s.sigma2.get_d());
        const double total = evaluate(f, 1).get_d();
        double clt = 0.0, llt = 0.0;
        for (int i = 0; i <= 400000; ++i) {
            const double t = -10.0 + 20.0 * i / 400000;
            const double x = mu + t * sd;
            double cum = 0.0;
            for (int k = 0; k <= f.degree() && k <= x; ++k) cum += f.coeff(k).get_d() / total;
            clt = std::max(clt, std::fabs(cum - 0.5 * std::erfc(-t / std::sqrt(2.0))));
            const double k = std::floor(x);
            const double p = (k >= 0 && k <= f.degree()) ? f.coeff(static_cast<int>(k)).get_d() / total : 0.0;
            llt = std::max(llt, std::fabs(sd * p - std::exp(-t * t / 2) / std::sqrt(2 * M_PI)));
        }
        CAPTURE(n);
        CHECK(dist.clt >= clt - 1e-12);
        CHECK(dist.clt == doctest::Approx(clt).epsilon(1e-4));
        CHECK(dist.llt >= llt - 1e-12);
        CHECK(dist.llt == doctest::Approx(llt).epsilon(1e-4));
        CHECK(dist.llt_grid <= dist.llt + 1e-12);
    }
    CHECK_THROWS_AS(gaussian_distances(UniPoly::t(), 1, 0, 201), DomainError);
}

TEST_CASE("normality report") {
    const auto rows = normality_report({50, 100, 200, 400}, 201, 2);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].clt_distance < rows[i - 1].clt_distance);
        CHECK(rows[i].llt_distance < rows[i - 1].llt_distance);
    }
    CHECK_THROWS_AS(normality_report({3}), DomainError);
    CHECK_THROWS_AS(normality_report({10}, 100), DomainError);
}

TEST_CASE("schedules") {
    CHECK(schedule_d(Schedule::FloorSqrt, 0, 50) == 7);
    CHECK(schedule_d(Schedule::FloorLog, 0, 50) == 3);
    CHECK(schedule_d(Schedule::FloorAlphaN, 0.25, 50) == 12);
    CHECK(schedule_d(Schedule::ConstantC, 2, 50) == 2);
    CHECK(schedule_d(Schedule::FloorHalf, 0, 51) == 25);
    CHECK(first_valid_n(Schedule::ConstantC, 3) == 6);
    CHECK(first_valid_n(Schedule::FloorSqrt, 0) == 4);
    CHECK_THROWS_AS(schedule_d(Schedule::ConstantC, 0, 10), DomainError);
    CHECK_THROWS_AS(schedule_d(Schedule::FloorAlphaN, 0.7, 10), DomainError);
    CHECK_THROWS_AS(conjecture_probe(Schedule::ConstantC, 3, 4, 20), DomainError);
    CHECK(parse_schedule("floor-alpha-n") == Schedule::FloorAlphaN);
    CHECK_THROWS_AS(parse_schedule("floor-cube"), DomainError);
}

TEST_CASE("conjecture probe") {
    const auto half = conjecture_probe(Schedule::FloorHalf, 0, 4, 60, 201, 2);
    for (const auto& row : half.rows) {
        const auto s = stats(row.n);
        CHECK(row.sigma2 == s.sigma2);
        CHECK(row.clt_distance == s.clt_distance);
        CHECK(row.llt_distance == s.llt_distance);
    }
    const auto c2 = conjecture_probe(Schedule::ConstantC, 2, 4, 200, 201, 2);
    for (const auto& row : c2.rows) {
        const auto [mu, var] = oracle_moments(row.n, 2);
        CHECK(row.sigma2 == var);
        CHECK(row.sigma2 < make_rational(1, 4));  // bounded
    }
}
