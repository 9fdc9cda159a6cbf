#include <doctest.h>

#include <set>

#include "gpoly/recurrence.hpp"
#include "oracles.hpp"

using namespace gpoly;

namespace {

UniPoly oracle_ref(const GRef& r) { return derivative(oracle::g_poly(r.n, r.d), r.derivative_order); }

bool holds_with_oracle(const IdentityInstance& inst, int n, int d) {
    UniPoly lhs = oracle::g_poly(n, d);
    for (const auto& f : inst.denominator) lhs *= f.value;
    UniPoly rhs;
    for (const auto& t : inst.terms) rhs += t.numerator * oracle_ref(t.g);
    return lhs == rhs;
}

}  // namespace

TEST_CASE("registry contents") {
    const auto& reg = registry();
    REQUIRE(reg.size() == 14);
    std::set<std::string> ids;
    for (const auto& s : reg) ids.insert(s.id);
    CHECK(ids.size() == 14);
    for (int k = 1; k <= 14; ++k) CHECK(find_spec("2." + std::to_string(k)) != nullptr);
    CHECK(find_spec("9.9") == nullptr);
}

TEST_CASE("identities hold with oracle polynomials") {
    for (const auto& spec : registry()) {
        CAPTURE(spec.id);
        int points = 0;
        for (int n = 2; n <= 22; ++n)
            for (int d = 1; d < n; ++d) {
                if (!spec.applies(n, d)) continue;
                const IdentityInstance inst = spec.build(n, d);
                bool vanishing = false;
                for (const auto& f : inst.denominator) vanishing = vanishing || f.value.is_zero();
                if (vanishing) continue;
                ++points;
                CHECK(holds_with_oracle(inst, n, d));
            }
        CHECK(points > 0);
    }
}

TEST_CASE("verify passes for every spec") {
    for (const auto& rep : verify_all(30, 2)) {
        CAPTURE(rep.id);
        CHECK(rep.passed());
        CHECK(rep.checked > 0);
        CHECK(rep.n_max == 30);
    }
}

TEST_CASE("threaded and serial verification agree") {
    for (const auto& spec : registry()) {
        const auto a = verify(spec, 20, 1);
        const auto b = verify(spec, 20, 4);
        CHECK(a.checked == b.checked);
        CHECK(a.skipped.size() == b.skipped.size());
    }
}

TEST_CASE("sign-flip mutants are caught") {
    for (const auto& spec : registry()) {
        std::size_t terms = 0;
        for (int n = 2; n <= 20 && terms == 0; ++n)
            for (int d = 1; d < n && terms == 0; ++d)
                if (spec.applies(n, d)) terms = spec.build(n, d).terms.size();
        REQUIRE(terms > 0);
        for (std::size_t k = 0; k < terms; ++k) {
            CAPTURE(spec.id);
            CAPTURE(k);
            const auto rep = verify(with_negated_term(spec, k), 12, 1);
            REQUIRE_FALSE(rep.passed());
            CHECK(rep.failures.front().lhs != rep.failures.front().rhs);
        }
    }
}

TEST_CASE("well-founded order") {
    for (const auto& spec : registry()) {
        CAPTURE(spec.id);
        for (int n = 2; n <= 20; ++n)
            for (int d = 1; d < n; ++d) {
                if (!spec.applies(n, d)) continue;
                const auto inst = spec.build(n, d);
                const int lhs = order_rank(spec.order, n, d);
                bool self = false;
                for (const auto& t : inst.terms) {
                    if (t.g.n == n && t.g.d == d) self = true;
                    if (spec.order != WellFoundedOrder::SelfReferential) CHECK(order_rank(spec.order, t.g.n, t.g.d) < lhs);
                }
                if (spec.order == WellFoundedOrder::SelfReferential) CHECK(self);
            }
    }
}

TEST_CASE("tiny grids and skip bookkeeping") {
    for (const auto& rep : verify_all(4)) CHECK(rep.passed());
    for (const auto& rep : verify_all(60, 4)) {
        CAPTURE(rep.id);
        for (const auto& skip : rep.skipped) CHECK(skip.reason.rfind("vanishing factor", 0) == 0);
    }
}

TEST_CASE("printed domains") {
    CHECK(find_spec("2.1")->domain.find("n >= d + 2") != std::string::npos);
    CHECK(find_spec("2.12")->domain.find("d >= 2") != std::string::npos);
    CHECK(find_spec("2.6")->formula.find("(d-1)^2") != std::string::npos);
}
