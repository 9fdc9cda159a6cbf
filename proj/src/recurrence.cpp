#include "gpoly/recurrence.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <utility>

#include "gpoly/errors.hpp"
#include "gpoly/gpoly.hpp"

namespace gpoly {

namespace {

UniPoly lin(long c0, long c1) { return UniPoly::from_ints({c0, c1}); }
UniPoly num(long c) { return UniPoly::constant(c); }
const UniPoly kT = UniPoly::t();
const UniPoly kT2 = UniPoly::monomial(1, 2);
const UniPoly kTT1 = UniPoly::from_ints({0, 1, 1});        // t(t+1)
const UniPoly kTT1Sq = UniPoly::from_ints({0, 1, 2, 1});   // t(t+1)^2

DenominatorFactor scalar(std::string name, long value) { return {std::move(name), num(value)}; }

IdentityTerm term(UniPoly numerator, int n, int d, int order = 0) { return {std::move(numerator), GRef{n, d, order}}; }

bool in_grid(int n, int d) { return n >= 2 && d >= 1 && d <= n - 1; }

std::vector<RecurrenceSpec> make_registry() {
    using WO = WellFoundedOrder;
    std::vector<RecurrenceSpec> r;

    r.push_back({"2.1", "fixed-d three-term",
                 "g(n,d) = [((2d-n+1)t + n-2) g(n-1,d) + t(n-d-2) g(n-2,d)] / (n-d-1)",
                 "d >= 1, n >= d + 2", WO::ByN,
                 [](int n, int d) { return d >= 1 && n >= d + 2; },
                 [](int n, int d) {
                     return IdentityInstance{{scalar("n-d-1", n - d - 1)},
                                             {term(lin(n - 2, 2L * d - n + 1), n - 1, d),
                                              term(kT * Rational(n - d - 2), n - 2, d)}};
                 }});

    r.push_back({"2.2", "fixed-d derivative",
                 "g(n,d) = [(dt + n-1) g(n-1,d) - t(t+1) g'(n-1,d)] / (n-d-1)",
                 "d >= 1, n >= d + 2", WO::ByN,
                 [](int n, int d) { return d >= 1 && n >= d + 2; },
                 [](int n, int d) {
                     return IdentityInstance{{scalar("n-d-1", n - d - 1)},
                                             {term(lin(n - 1, d), n - 1, d), term(-kTT1, n - 1, d, 1)}};
                 }});

    r.push_back({"2.3", "fixed-n three-term",
                 "g(n,d) = [c(n+1)(c(n)c(n+2)t + (n-d)^2 + (d-2)^2 + n-2) g(n,d-1) - (d-2)(n+1-d)c(n) g(n,d-2)]"
                 " / ((d-1)(n-d)c(n+2)),  c(m) = m+1-2d",
                 "n >= 3, 2 <= d <= floor(n/2) + 1", WO::ByD,
                 [](int n, int d) { return n >= 3 && d >= 2 && d <= n / 2 + 1; },
                 [](int n, int d) {
                     auto c = [d](int m) { return static_cast<long>(m + 1 - 2 * d); };
                     const long sq = static_cast<long>(n - d) * (n - d) + static_cast<long>(d - 2) * (d - 2) + n - 2;
                     return IdentityInstance{
                         {scalar("d-1", d - 1), scalar("n-d", n - d), scalar("c_d(n+2)", c(n + 2))},
                         {term(lin(sq, c(n) * c(n + 2)) * Rational(c(n + 1)), n, d - 1),
                          term(num(-static_cast<long>(d - 2) * (n + 1 - d) * c(n)), n, d - 2)}};
                 }});

    r.push_back({"2.4", "fixed-n derivative",
                 "g(n,d) = [((n+1-2d)(n+1-d)t + (n-d)^2 + n-2d+1) g(n,d-1) - t(t+1)(n+1-2d) g'(n,d-1)] / ((d-1)(n-d))",
                 "n >= 3, 2 <= d <= n - 1", WO::ByD,
                 [](int n, int d) { return n >= 3 && d >= 2 && d <= n - 1; },
                 [](int n, int d) {
                     const long k = n + 1 - 2 * d;
                     const long c0 = static_cast<long>(n - d) * (n - d) + n - 2 * d + 1;
                     return IdentityInstance{{scalar("d-1", d - 1), scalar("n-d", n - d)},
                                             {term(lin(c0, k * (n + 1 - d)), n, d - 1),
                                              term(kTT1 * Rational(-k), n, d - 1, 1)}};
                 }});

    r.push_back({"2.5", "triangular first",
                 "g(n,d) = [(n-d) g(n,d-1) + t(n+1-2d) g(n-1,d-1)] / (d-1)",
                 "n >= 3, 2 <= d <= n - 1", WO::ByD,
                 [](int n, int d) { return n >= 3 && d >= 2 && d <= n - 1; },
                 [](int n, int d) {
                     return IdentityInstance{{scalar("d-1", d - 1)},
                                             {term(num(n - d), n, d - 1), term(kT * Rational(n + 1 - 2 * d), n - 1, d - 1)}};
                 }});

    r.push_back({"2.6", "triangular second",
                 "g(n,d) = [(d-1)(n-d) g(n,d-1) + (n+1-2d)(n-1-d)t g(n-1,d)] / ((n-2d)(n+1-2d)t + (d-1)^2)",
                 "n >= 3, 2 <= d <= n - 1", WO::ByNPlusD,
                 [](int n, int d) { return n >= 3 && d >= 2 && d <= n - 1; },
                 [](int n, int d) {
                     const UniPoly den = lin(static_cast<long>(d - 1) * (d - 1), static_cast<long>(n - 2 * d) * (n + 1 - 2 * d));
                     return IdentityInstance{{{"(n-2d)(n+1-2d)t+(d-1)^2", den}},
                                             {term(num(static_cast<long>(d - 1) * (n - d)), n, d - 1),
                                              term(kT * Rational(static_cast<long>(n + 1 - 2 * d) * (n - 1 - d)), n - 1, d)}};
                 }});

    // The next four are indexed by the parameter e of the printed identity;
    // the LHS point is recovered from it.
    r.push_back({"2.7", "even diagonal",
                 "g(2e+2,e+1) = [(t+2)(2e-1) g(2e,e) - (e-1)t^2 g(2e-2,e-1)] / e",
                 "n = 2d, d >= 2 (e = d - 1 >= 1)", WO::ByN,
                 [](int n, int d) { return n == 2 * d && d >= 2; },
                 [](int, int d) {
                     const int e = d - 1;
                     return IdentityInstance{{scalar("e", e)},
                                             {term(lin(2, 1) * Rational(2 * e - 1), 2 * e, e),
                                              term(kT2 * Rational(-(e - 1)), 2 * e - 2, e - 1)}};
                 }});

    r.push_back({"2.8", "odd diagonal",
                 "g(2e+3,e+1) = [2(2e^2 t + 4e^2 - 1) g(2e+1,e) - (2e+1)(e-1)t^2 g(2e-1,e-1)] / ((e+1)(2e-1))",
                 "n = 2d + 1, d >= 2 (e = d - 1 >= 1)", WO::ByN,
                 [](int n, int d) { return n == 2 * d + 1 && d >= 2; },
                 [](int, int d) {
                     const long e = d - 1;
                     return IdentityInstance{{scalar("e+1", e + 1), scalar("2e-1", 2 * e - 1)},
                                             {term(lin(2 * (4 * e * e - 1), 4 * e * e), 2 * e + 1, e),
                                              term(kT2 * Rational(-(2 * e + 1) * (e - 1)), 2 * e - 1, e - 1)}};
                 }});

    r.push_back({"2.9", "half-diagonal odd step",
                 "g(2d+1,d) = [(2d-1) g(2d,d) + (d-1)t g(2d-1,d-1)] / d",
                 "n = 2d + 1, d >= 1", WO::ByN,
                 [](int n, int d) { return n == 2 * d + 1 && d >= 1; },
                 [](int, int d) {
                     return IdentityInstance{{scalar("d", d)},
                                             {term(num(2L * d - 1), 2 * d, d), term(kT * Rational(d - 1), 2 * d - 1, d - 1)}};
                 }});

    r.push_back({"2.10", "half-diagonal even step",
                 "g(2e+2,e+1) = 2 g(2e+1,e) + t g(2e,e)",
                 "n = 2d, d >= 2 (e = d - 1 >= 1)", WO::ByN,
                 [](int n, int d) { return n == 2 * d && d >= 2; },
                 [](int, int d) {
                     const int e = d - 1;
                     return IdentityInstance{{}, {term(num(2), 2 * e + 1, e), term(kT, 2 * e, e)}};
                 }});

    r.push_back({"2.11", "even first-derivative",
                 "g(2d,d) = [(d-1)t g(2d-1,d-1) + t(t+1) g'(2d,d)] / (dt + 1)",
                 "n = 2d, d >= 2", WO::SelfReferential,
                 [](int n, int d) { return n == 2 * d && d >= 2; },
                 [](int, int d) {
                     return IdentityInstance{{{"dt+1", lin(1, d)}},
                                             {term(kT * Rational(d - 1), 2 * d - 1, d - 1), term(kTT1, 2 * d, d, 1)}};
                 }});

    r.push_back({"2.12", "even second-derivative",
                 "g(2d,d) = [(d-1)((2d-1)t + 2d) g(2d-1,d-1) + t(t+1)^2 g''(2d,d)] / ((d-1)(dt + d + 1))",
                 "n = 2d, d >= 2", WO::SelfReferential,
                 [](int n, int d) { return n == 2 * d && d >= 2; },
                 [](int, int d) {
                     return IdentityInstance{{scalar("d-1", d - 1), {"dt+d+1", lin(d + 1, d)}},
                                             {term(lin(2L * d, 2L * d - 1) * Rational(d - 1), 2 * d - 1, d - 1),
                                              term(kTT1Sq, 2 * d, d, 2)}};
                 }});

    r.push_back({"2.13", "odd first-derivative",
                 "g(2d+1,d) = [dt g(2d,d) + t(t+1) g'(2d+1,d)] / ((d+1)t + 1)",
                 "n = 2d + 1, d >= 1", WO::SelfReferential,
                 [](int n, int d) { return n == 2 * d + 1 && d >= 1; },
                 [](int, int d) {
                     return IdentityInstance{{{"(d+1)t+1", lin(1, d + 1)}},
                                             {term(kT * Rational(d), 2 * d, d), term(kTT1, 2 * d + 1, d, 1)}};
                 }});

    r.push_back({"2.14", "odd second-derivative",
                 "g(2d+1,d) = [d(2dt + 2d + 1) g(2d,d) + t(t+1)^2 g''(2d+1,d)] / (d((d+1)t + d + 2))",
                 "n = 2d + 1, d >= 1", WO::SelfReferential,
                 [](int n, int d) { return n == 2 * d + 1 && d >= 1; },
                 [](int, int d) {
                     return IdentityInstance{{scalar("d", d), {"(d+1)t+d+2", lin(d + 2L, d + 1L)}},
                                             {term(lin(2L * d + 1, 2L * d) * Rational(d), 2 * d, d),
                                              term(kTT1Sq, 2 * d + 1, d, 2)}};
                 }});
    return r;
}

using Cache = std::map<std::pair<int, int>, UniPoly>;

const UniPoly& cached(Cache& cache, int n, int d) {
    auto it = cache.find({n, d});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, d), closed_form(n, d).poly).first;
    return it->second;
}

struct PointResult {
    int n = 0;
    int d = 0;
    std::optional<SkippedPoint> skipped;
    std::optional<FailurePoint> failure;
};

PointResult check_point(const RecurrenceSpec& spec, int n, int d, Cache& cache) {
    PointResult out{n, d, {}, {}};
    const IdentityInstance inst = spec.build(n, d);
    UniPoly den = UniPoly::constant(1);
    for (const auto& f : inst.denominator) {
        if (f.value.is_zero()) {
            out.skipped = SkippedPoint{n, d, "vanishing factor " + f.name};
            return out;
        }
        den *= f.value;
    }
    UniPoly rhs;
    for (const auto& tm : inst.terms) {
        if (tm.g.d < 0 || tm.g.d > tm.g.n) {
            out.skipped = SkippedPoint{n, d, "reference g(" + std::to_string(tm.g.n) + "," + std::to_string(tm.g.d) +
                                                 ") outside 0 <= d <= n"};
            return out;
        }
        rhs += tm.numerator * derivative(cached(cache, tm.g.n, tm.g.d), tm.g.derivative_order);
    }
    UniPoly lhs = cached(cache, n, d) * den;
    if (!(lhs == rhs)) out.failure = FailurePoint{n, d, std::move(lhs), std::move(rhs)};
    return out;
}

}  // namespace

const std::vector<RecurrenceSpec>& registry() {
    static const std::vector<RecurrenceSpec> specs = make_registry();
    return specs;
}

const RecurrenceSpec* find_spec(const std::string& id) {
    for (const auto& s : registry())
        if (s.id == id) return &s;
    return nullptr;
}

int order_rank(WellFoundedOrder order, int n, int d) {
    switch (order) {
        case WellFoundedOrder::ByN: return n;
        case WellFoundedOrder::ByD: return d;
        case WellFoundedOrder::ByNPlusD: return n + d;
        case WellFoundedOrder::SelfReferential: return n;
    }
    return n;
}

RecurrenceSpec with_negated_term(const RecurrenceSpec& spec, std::size_t term_index) {
    RecurrenceSpec out = spec;
    out.id = spec.id + "~neg" + std::to_string(term_index);
    out.build = [base = spec.build, term_index](int n, int d) {
        IdentityInstance inst = base(n, d);
        if (term_index >= inst.terms.size()) throw DomainError("with_negated_term: no such term");
        inst.terms[term_index].numerator = -inst.terms[term_index].numerator;
        return inst;
    };
    return out;
}

VerificationReport verify(const RecurrenceSpec& spec, int n_max, int threads) {
    VerificationReport report{spec.id, spec.domain, n_max, 0, {}, {}};
    std::vector<std::pair<int, int>> points;
    for (int n = 2; n <= n_max; ++n)
        for (int d = 1; d <= n - 1; ++d)
            if (in_grid(n, d) && spec.applies(n, d)) points.emplace_back(n, d);

    auto run_chunk = [&spec, &points](std::size_t begin, std::size_t end) {
        Cache cache;
        std::vector<PointResult> out;
        for (std::size_t i = begin; i < end; ++i) out.push_back(check_point(spec, points[i].first, points[i].second, cache));
        return out;
    };

    std::vector<PointResult> results;
    const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1 || points.size() < 2 * workers) {
        results = run_chunk(0, points.size());
    } else {
        std::vector<std::future<std::vector<PointResult>>> futures;
        const std::size_t chunk = (points.size() + workers - 1) / workers;
        for (std::size_t b = 0; b < points.size(); b += chunk)
            futures.push_back(std::async(std::launch::async, run_chunk, b, std::min(points.size(), b + chunk)));
        for (auto& f : futures)
            for (auto& r : f.get()) results.push_back(std::move(r));
    }
    std::sort(results.begin(), results.end(),
              [](const PointResult& a, const PointResult& b) { return std::tie(a.n, a.d) < std::tie(b.n, b.d); });
    for (auto& r : results) {
        if (r.skipped) {
            report.skipped.push_back(std::move(*r.skipped));
            continue;
        }
        ++report.checked;
        if (r.failure) report.failures.push_back(std::move(*r.failure));
    }
    return report;
}

std::vector<VerificationReport> verify_all(int n_max, int threads) {
    std::vector<VerificationReport> out;
    for (const auto& spec : registry()) out.push_back(verify(spec, n_max, threads));
    return out;
}

}  // namespace gpoly
