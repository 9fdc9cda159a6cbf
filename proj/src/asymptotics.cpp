#include "gpoly/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gpoly/errors.hpp"
#include "gpoly/gpoly.hpp"
#include "interval.hpp"
#include "parallel.hpp"

namespace gpoly {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int ceil_half(int n) { return (n + 1) / 2; }

// mu from the ratio r = f_{n-1}(1)/f_n(1).
Rational mu_from_ratio(int n, const Rational& r) {
    const int c = ceil_half(n);
    return (1 - make_rational(c - 1, c + 1) * r) * make_rational(c + 1, 2);
}

Rational sigma2_from_ratio(int n, const Rational& r) {
    const int c = ceil_half(n);
    const int fl = n / 2;
    return make_rational(c * (c - 1), 4) - make_rational((c - 1) * (2 * fl - 1), 4) * r -
           make_rational((c - 1) * (c - 1), 4) * r * r;
}

struct Moments {
    Rational f1, d1, d2;
};

Moments moments_at_one(const UniPoly& f) {
    return {evaluate(f, 1), evaluate(derivative(f), 1), evaluate(derivative(f, 2), 1)};
}

// X > 2 - sqrt2 with X rational: either X >= 2, or 0 < 2 - X and (2 - X)^2 < 2.
bool exceeds_two_minus_sqrt2(const Rational& x) {
    if (x >= 2) return true;
    const Rational gap = 2 - x;
    return gap * gap < 2;
}

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::numbers::sqrt2); }
double normal_pdf(double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi); }

}  // namespace

std::vector<Integer> half_diagonal_at_one(int n_max) {
    if (n_max < 0) throw DomainError("half_diagonal_at_one: n_max must be >= 0");
    std::vector<Integer> f(static_cast<std::size_t>(std::max(n_max, 4)) + 1, 0);
    f[2] = 1;
    f[3] = 1;
    f[4] = 3;
    for (int n = 4; n < n_max; ++n) {
        const Integer num = (n - 1) * f[n] + (ceil_half(n) - 1) * f[n - 1];
        const int den = n / 2;
        if (num % den != 0) throw InvariantViolation("f_n(1) recurrence left the integers at n = " + std::to_string(n + 1));
        f[n + 1] = num / den;
    }
    f.resize(static_cast<std::size_t>(n_max) + 1);
    return f;
}

std::vector<RatioEntry> r_sequence(int n_max) {
    if (n_max < 4) throw DomainError("r_sequence: n_max must be >= 4");
    const auto f = half_diagonal_at_one(n_max);
    std::vector<RatioEntry> out;
    for (int n = 3; n <= n_max; ++n) out.push_back({n, Rational(f[n - 1]) / Rational(f[n])});
    return out;
}

double limit_gap(const Rational& r) {
    mpfr_t s, x;
    mpfr_init2(s, 256);
    mpfr_init2(x, 256);
    mpfr_sqrt_ui(s, 2, MPFR_RNDN);
    mpfr_sub_ui(s, s, 1, MPFR_RNDN);
    mpfr_set_q(x, r.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(x, x, s, MPFR_RNDN);
    const double out = std::fabs(mpfr_get_d(x, MPFR_RNDN));
    mpfr_clear(s);
    mpfr_clear(x);
    return out;
}

Distances gaussian_distances(const UniPoly& f, const Rational& mu, const Rational& sigma2, int grid) {
    if (sigma2 <= 0) throw DomainError("gaussian_distances: variance must be positive");
    const Rational total = evaluate(f, 1);
    if (total <= 0) throw DomainError("gaussian_distances: coefficients must sum to a positive number");
    const int deg = f.degree();
    std::vector<double> p(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) {
        if (f.coeff(k) < 0) throw DomainError("gaussian_distances: negative coefficient");
        p[k] = Rational(f.coeff(k) / total).get_d();
    }
    const double m = mu.get_d();
    const double s = std::sqrt(sigma2.get_d());
    auto t_of = [&](double k) { return (k - m) / s; };

    Distances out;
    double cum = 0.0;
    for (int k = 0; k <= deg; ++k) {
        const double phi = normal_cdf(t_of(k));
        out.clt = std::max(out.clt, std::fabs(cum - phi));
        cum += p[k];
        out.clt = std::max(out.clt, std::fabs(cum - phi));
    }

    // Cell k is the t-range with floor(mu + t sigma) = k.
    out.llt = std::max(normal_pdf(t_of(0)), normal_pdf(t_of(deg + 1)));
    for (int k = 0; k <= deg; ++k) {
        const double a = t_of(k);
        const double b = t_of(k + 1);
        const double v = s * p[k];
        const double hi = (a <= 0.0 && 0.0 <= b) ? normal_pdf(0.0) : std::max(normal_pdf(a), normal_pdf(b));
        const double lo = std::min(normal_pdf(a), normal_pdf(b));
        out.llt = std::max({out.llt, std::fabs(v - hi), std::fabs(v - lo)});
    }

    const double t_lo = t_of(-1);
    const double t_hi = t_of(deg + 2);
    for (int i = 0; i < grid; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / (grid - 1);
        const double k = std::floor(m + t * s);
        const double v = (k >= 0 && k <= deg) ? s * p[static_cast<std::size_t>(k)] : 0.0;
        out.llt_grid = std::max(out.llt_grid, std::fabs(v - normal_pdf(t)));
    }
    if (out.llt_grid > out.llt + 1e-12) throw InvariantViolation("llt grid value exceeds the analytic supremum");
    return out;
}

StatsRecord stats(int n, int llt_grid) {
    if (n < 3) throw DomainError("stats: n must be >= 3");
    StatsRecord rec;
    rec.n = n;
    rec.d = n / 2;
    const UniPoly f = closed_form(n, rec.d).poly;
    const Moments mo = moments_at_one(f);
    rec.mu = mo.d1 / mo.f1;
    rec.sigma2 = mo.d2 / mo.f1 + rec.mu - rec.mu * rec.mu;

    const auto seq = half_diagonal_at_one(n);
    const Integer& fn = seq[n];
    const Integer& fprev = seq[n - 1];
    if (Rational(fn) != mo.f1) throw InvariantViolation("f_n(1) recurrence disagrees with expansion at n = " + std::to_string(n));
    if (Rational(fprev) != evaluate(closed_form(n - 1, (n - 1) / 2).poly, 1))
        throw InvariantViolation("f_{n-1}(1) recurrence disagrees with expansion at n = " + std::to_string(n));
    rec.r = Rational(fprev) / Rational(fn);
    if (n >= 4 && !(rec.r > 0 && rec.r < 1)) throw InvariantViolation("r_n(1) outside (0, 1) at n = " + std::to_string(n));

    const int c = ceil_half(n);
    const Rational d1 = (Rational(c + 1) * fn - Rational(c - 1) * fprev) / 2;
    const Rational d2 = (Rational((c - 1) * (2 * c + 1)) * fn - Rational((c - 1) * (2 * n - 1)) * fprev) / 4;
    if (d1 != mo.d1) throw InvariantViolation("f_n'(1) identity fails at n = " + std::to_string(n));
    if (d2 != mo.d2) throw InvariantViolation("f_n''(1) identity fails at n = " + std::to_string(n));
    if (mu_from_ratio(n, rec.r) != rec.mu) throw InvariantViolation("mean closed form fails at n = " + std::to_string(n));
    if (sigma2_from_ratio(n, rec.r) != rec.sigma2)
        throw InvariantViolation("variance closed form fails at n = " + std::to_string(n));

    if (rec.sigma2 > 0) {
        const Distances dist = gaussian_distances(f, rec.mu, rec.sigma2, llt_grid);
        rec.clt_distance = dist.clt;
        rec.llt_distance = dist.llt;
    } else {
        rec.clt_distance = kNaN;
        rec.llt_distance = kNaN;
    }
    return rec;
}

bool LemmaRow::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.holds; });
}

bool LemmaReport::pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const LemmaRow& r) { return r.ok(); });
}

LemmaReport check_lemma44(int m_max) {
    if (m_max < 2) throw DomainError("check_lemma44: m_max must be >= 2");
    const auto f = half_diagonal_at_one(2 * m_max);
    LemmaReport rep{"4.4", m_max, {}};
    for (int m = 2; m <= m_max; ++m) {
        const Rational r = Rational(f[2 * m - 1]) / Rational(f[2 * m]);
        // r < sqrt2 - 1 with r > 0: (r + 1)^2 < 2.
        const bool below = r * r + 2 * r - 1 < 0;
        const Rational x = m - (2 * m - 1) * r - (m - 1) * r * r;
        rep.rows.push_back({m, r, {{"r2m-below-limit", below}, {"lower-bound", exceeds_two_minus_sqrt2(x)}}});
    }
    return rep;
}

bool lemma45_step_holds(int m) {
    if (m < 1) throw DomainError("lemma45_step_holds: m must be >= 1");
    using detail::Interval;
    for (mpfr_prec_t prec = 64; prec <= (1 << 14); prec *= 2) {
        auto q = [&](long a, long b = 1) { return Interval(make_rational(a, b), prec); };
        const long mm = m;
        const Interval root = sqrt(q(2 * mm * mm + mm));
        const Interval inner = q(mm, mm + 1) * (q(mm) / (q(mm) + root));
        const Interval lhs = q(1) / (q(2 * mm + 1, mm + 1) + inner);
        const Interval rhs = sqrt(q(2 * (mm + 1) * (mm + 1) + mm + 1)) / q(mm + 1) - q(1);
        if (certainly_less(lhs, rhs)) return true;
        if (certainly_greater(lhs, rhs)) return false;
    }
    return false;
}

LemmaReport check_lemma45(int m_max) {
    if (m_max < 3) throw DomainError("check_lemma45: m_max must be >= 3");
    const auto f = half_diagonal_at_one(2 * m_max + 1);
    LemmaReport rep{"4.5", m_max, {}};
    for (int m = 3; m <= m_max; ++m) {
        const Rational r = Rational(f[2 * m]) / Rational(f[2 * m + 1]);
        const bool main = m + 1 - 2 * m * r - m * r * r > 0;
        // r < -1 + sqrt(2m^2+m)/m; both sides of (r+1) m < sqrt(2m^2+m) positive.
        const Rational lhs = (r + 1) * m;
        const bool upper = lhs * lhs < 2 * m * m + m;
        rep.rows.push_back({m, r, {{"main", main}, {"r2m1-upper-bound", upper}, {"step", lemma45_step_holds(m)}}});
    }
    return rep;
}

LemmaReport check_variance_bounds(int m_max) {
    if (m_max < 2) throw DomainError("check_variance_bounds: m_max must be >= 2");
    const auto f = half_diagonal_at_one(2 * m_max + 1);
    LemmaReport rep{"variance", m_max, {}};
    for (int m = 2; m <= m_max; ++m) {
        LemmaRow row{m, Rational(f[2 * m]) / Rational(f[2 * m + 1]), {}};
        const Rational even = sigma2_from_ratio(2 * m, Rational(f[2 * m - 1]) / Rational(f[2 * m]));
        row.checks.push_back({"even", exceeds_two_minus_sqrt2(4 * even / (m - 1))});
        if (m >= 3) row.checks.push_back({"odd", sigma2_from_ratio(2 * m + 1, row.r) > make_rational(m, 4) * row.r});
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<StatsRecord> normality_report(const std::vector<int>& n_list, int grid, int threads) {
    if (grid < 101) throw DomainError("normality_report: grid size must be >= 101");
    for (int n : n_list)
        if (n < 4) throw DomainError("normality_report: every n must be >= 4");
    return detail::parallel_map(n_list.size(), threads, [&](std::size_t i) { return stats(n_list[i], grid); });
}

namespace {

struct ScheduleInfo {
    Schedule schedule;
    std::string_view name;
};

constexpr std::array<ScheduleInfo, 5> kSchedules{{
    {Schedule::ConstantC, "constant-c"},
    {Schedule::FloorSqrt, "floor-sqrt"},
    {Schedule::FloorLog, "floor-log"},
    {Schedule::FloorAlphaN, "floor-alpha-n"},
    {Schedule::FloorHalf, "floor-half"},
}};

void check_param(Schedule s, double param) {
    if (s == Schedule::ConstantC && (param < 1 || param != std::floor(param)))
        throw DomainError("constant-c schedule needs an integer c >= 1");
    if (s == Schedule::FloorAlphaN && !(param > 0 && param <= 0.5))
        throw DomainError("floor-alpha-n schedule needs 0 < alpha <= 1/2");
}

}  // namespace

std::string_view schedule_name(Schedule s) {
    for (const auto& i : kSchedules)
        if (i.schedule == s) return i.name;
    return "?";
}

Schedule parse_schedule(std::string_view name) {
    for (const auto& i : kSchedules)
        if (i.name == name) return i.schedule;
    throw DomainError("unknown schedule '" + std::string(name) + "'");
}

int schedule_d(Schedule s, double param, int n) {
    check_param(s, param);
    switch (s) {
        case Schedule::ConstantC: return static_cast<int>(param);
        case Schedule::FloorSqrt: {
            const Integer root = sqrt(Integer(n));
            return static_cast<int>(root.get_si());
        }
        case Schedule::FloorLog: return static_cast<int>(std::floor(std::log(static_cast<double>(n))));
        case Schedule::FloorAlphaN: return static_cast<int>(std::floor(param * n));
        case Schedule::FloorHalf: return n / 2;
    }
    return 0;
}

int first_valid_n(Schedule s, double param) {
    for (int n = 4; n < 1'000'000; ++n) {
        const int d = schedule_d(s, param, n);
        if (d >= 1 && d <= n / 2) return n;
    }
    throw DomainError("schedule never yields 1 <= d(n) <= floor(n/2)");
}

ScheduleProbe conjecture_probe(Schedule s, double param, int n_min, int n_max, int grid, int threads) {
    check_param(s, param);
    if (n_min < 2 || n_max < n_min) throw DomainError("conjecture_probe: need 2 <= n_min <= n_max");
    for (int n = n_min; n <= n_max; ++n) {
        const int d = schedule_d(s, param, n);
        if (d < 1 || d > n / 2)
            throw DomainError("schedule " + std::string(schedule_name(s)) + " gives d = " + std::to_string(d) +
                              " outside [1, floor(n/2)] at n = " + std::to_string(n));
    }
    ScheduleProbe probe{s, param, {}};
    probe.rows = detail::parallel_map(static_cast<std::size_t>(n_max - n_min + 1), threads, [&](std::size_t i) {
        ProbeRow row;
        row.n = n_min + static_cast<int>(i);
        row.d = schedule_d(s, param, row.n);
        const UniPoly f = closed_form(row.n, row.d).poly;
        const Moments mo = moments_at_one(f);
        const Rational mu = mo.d1 / mo.f1;
        row.sigma2 = mo.d2 / mo.f1 + mu - mu * mu;
        if (row.sigma2 > 0) {
            const Distances dist = gaussian_distances(f, mu, row.sigma2, grid);
            row.clt_distance = dist.clt;
            row.llt_distance = dist.llt;
        } else {
            row.clt_distance = kNaN;
            row.llt_distance = kNaN;
        }
        return row;
    });
    return probe;
}

}  // namespace gpoly
