#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gpoly/poly.hpp"

namespace gpoly {

/// Mean, variance and ratio for the half-diagonal f_n = g_{n, floor(n/2)}.
/// Distances are NaN when sigma2 == 0 (only n = 3).
struct StatsRecord {
    int n = 0;
    int d = 0;
    Rational mu;
    Rational sigma2;
    Rational r;  // f_{n-1}(1) / f_n(1)
    double clt_distance = 0.0;
    double llt_distance = 0.0;
};

/// f_n(1) for 0 <= n <= n_max from the three-term integer recurrence.
/// Entries below n = 2 are zero.
std::vector<Integer> half_diagonal_at_one(int n_max);

/// Requires n >= 3. mu and sigma2 come from the expanded polynomial and
/// again from the ratio r; a mismatch throws InvariantViolation.
StatsRecord stats(int n, int llt_grid = 201);

struct RatioEntry {
    int n = 0;
    Rational r;
};

/// r_n(1) for 3 <= n <= n_max (n_max >= 4).
std::vector<RatioEntry> r_sequence(int n_max);

/// |r - (sqrt 2 - 1)| evaluated in 256-bit arithmetic.
double limit_gap(const Rational& r);

struct LemmaCheck {
    std::string name;
    bool holds = false;
};

struct LemmaRow {
    int m = 0;
    Rational r;
    std::vector<LemmaCheck> checks;
    bool ok() const;
};

struct LemmaReport {
    std::string lemma;
    int m_max = 0;
    std::vector<LemmaRow> rows;
    bool pass() const;
};

/// 2 <= m <= m_max, r = r_{2m}(1): r < sqrt2 - 1 and
/// m - (2m-1) r - (m-1) r^2 > 2 - sqrt2, both decided in rationals.
LemmaReport check_lemma44(int m_max);

/// 3 <= m <= m_max, r = r_{2m+1}(1): m + 1 - 2m r - m r^2 > 0, the upper
/// bound r < -1 + sqrt(2m^2+m)/m, and the inductive step inequality
/// certified with outward-rounded intervals.
LemmaReport check_lemma45(int m_max);

/// sigma2_{2m} > (2 - sqrt2)(m - 1)/4 for 2 <= m <= m_max and
/// sigma2_{2m+1} > (m/4) r_{2m+1}(1) for 3 <= m <= m_max.
LemmaReport check_variance_bounds(int m_max);

/// Inductive step inequality at one m, decided by intervals whose
/// precision doubles until they separate. Exposed for tests.
bool lemma45_step_holds(int m);

struct Distances {
    double clt = 0.0;
    double llt = 0.0;
    double llt_grid = 0.0;  // grid lower bound for llt
};

/// Gaussian distances of the coefficient distribution of f (nonnegative
/// coefficients) with the given exact mean and variance (> 0).
Distances gaussian_distances(const UniPoly& f, const Rational& mu, const Rational& sigma2, int grid);

/// Requires every n >= 4 and grid >= 101. Rows in input order.
std::vector<StatsRecord> normality_report(const std::vector<int>& n_list, int grid = 201, int threads = 1);

enum class Schedule { ConstantC, FloorSqrt, FloorLog, FloorAlphaN, FloorHalf };

std::string_view schedule_name(Schedule s);
Schedule parse_schedule(std::string_view name);

/// d(n) for the schedule; `param` is c for constant-c and alpha for
/// floor-alpha-n, ignored otherwise.
int schedule_d(Schedule s, double param, int n);

struct ProbeRow {
    int n = 0;
    int d = 0;
    Rational sigma2;
    double clt_distance = 0.0;
    double llt_distance = 0.0;
};

struct ScheduleProbe {
    Schedule schedule = Schedule::FloorHalf;
    double param = 0.0;
    std::vector<ProbeRow> rows;
};

/// Smallest n >= 4 with 1 <= d(n) <= floor(n/2).
int first_valid_n(Schedule s, double param);

/// Rows for n_min <= n <= n_max. Throws DomainError if d(n) leaves
/// [1, floor(n/2)] anywhere in the range.
ScheduleProbe conjecture_probe(Schedule s, double param, int n_min, int n_max, int grid = 201, int threads = 1);

}  // namespace gpoly
