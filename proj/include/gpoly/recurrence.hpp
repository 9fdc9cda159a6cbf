#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpoly/poly.hpp"

namespace gpoly {

/// g_{n,d} or one of its derivatives, as referenced by an identity.
struct GRef {
    int n = 0;
    int d = 0;
    int derivative_order = 0;
};

struct IdentityTerm {
    UniPoly numerator;
    GRef g;
};

/// A scalar or linear-in-t factor of the common denominator.
struct DenominatorFactor {
    std::string name;
    UniPoly value;
};

/// One instance of a recurrence at a concrete (n, d), already put over a
/// common denominator:
///
///     g_{n,d} * prod(denominator) == sum(term.numerator * term.g)
struct IdentityInstance {
    std::vector<DenominatorFactor> denominator;
    std::vector<IdentityTerm> terms;
};

/// Which index strictly decreases from the LHS to every RHS reference.
enum class WellFoundedOrder { ByN, ByD, ByNPlusD, SelfReferential };

struct RecurrenceSpec {
    std::string id;
    std::string name;
    /// Readable rendering of the identity.
    std::string formula;
    /// Domain over the LHS point (n, d).
    std::string domain;
    WellFoundedOrder order = WellFoundedOrder::ByN;
    std::function<bool(int n, int d)> applies;
    std::function<IdentityInstance(int n, int d)> build;
};

/// Every identity, ids "2.1" through "2.14".
const std::vector<RecurrenceSpec>& registry();
const RecurrenceSpec* find_spec(const std::string& id);

/// Rank of (n, d) under the spec's well-founded order.
int order_rank(WellFoundedOrder order, int n, int d);

/// Copy of spec with the numerator of term `term_index` negated.
RecurrenceSpec with_negated_term(const RecurrenceSpec& spec, std::size_t term_index);

struct SkippedPoint {
    int n = 0;
    int d = 0;
    std::string reason;
};

struct FailurePoint {
    int n = 0;
    int d = 0;
    UniPoly lhs;
    UniPoly rhs;
};

struct VerificationReport {
    std::string id;
    std::string domain;
    int n_max = 0;
    int checked = 0;
    std::vector<SkippedPoint> skipped;
    std::vector<FailurePoint> failures;

    bool passed() const { return failures.empty(); }
};

/// Cross-multiplied check of spec at every (n, d) in its domain, 2 <= n <= n_max.
/// Both sides are evaluated from the closed form. Grid points are split
/// across `threads` workers; results are sorted by (n, d).
VerificationReport verify(const RecurrenceSpec& spec, int n_max, int threads = 1);

std::vector<VerificationReport> verify_all(int n_max, int threads = 1);

}  // namespace gpoly
