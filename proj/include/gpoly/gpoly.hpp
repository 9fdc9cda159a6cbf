#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpoly/poly.hpp"

namespace gpoly {

/// g-polynomial g_{n,d}(t) of the uniform matroid U_{n,d}.
///
/// For n >= 2 and 1 <= d <= n - 1 the coefficients are positive integers on
/// 1 <= i <= min(d, n - d) and zero elsewhere. The boundary d in {0, n} is
/// the zero polynomial.
struct GPolyRecord {
    int n = 0;
    int d = 0;
    UniPoly poly;
};

/// Exact factorial sum. Throws DomainError unless 0 <= d <= n.
GPolyRecord closed_form(int n, int d);

/// [t^i] g_{n,d}; zero outside 1 <= i <= min(d, n - d).
Rational coefficient(int n, int d, int i);

/// g_{n,d} = g_{n,n-d}: returns (n, min(d, n - d)).
std::pair<int, int> symmetry_normalize(int n, int d);

/// Bottom-up constructors, each seeded only by its initial values.
enum class RecurrenceScheme {
    FixedDThreeTerm,    // g(n,d) from g(n-1,d), g(n-2,d)
    FixedDDerivative,   // g(n,d) from g(n-1,d) and its derivative
    FixedNThreeTerm,    // g(n,d) from g(n,d-1), g(n,d-2)
    FixedNDerivative,   // g(n,d) from g(n,d-1) and its derivative
    TriangularFirst,    // g(n,d) from g(n,d-1), g(n-1,d-1)
    TriangularSecond,   // g(n,d) from g(n,d-1), g(n-1,d); divides by a linear factor
    EvenDiagonal,       // g(2k,k) from g(2k-2,k-1), g(2k-4,k-2)
    OddDiagonal,        // g(2k+1,k) from g(2k-1,k-1), g(2k-3,k-2)
    HalfDiagonal,       // g(n,floor(n/2)) alternating the two half-step identities
};

const std::vector<RecurrenceScheme>& all_schemes();
std::string_view scheme_name(RecurrenceScheme s);
RecurrenceScheme parse_scheme(std::string_view name);
/// Printed applicability domain, e.g. "d >= 1, n >= d + 2".
std::string_view scheme_domain(RecurrenceScheme s);
bool scheme_applies(RecurrenceScheme s, int n, int d);

/// Throws DomainError naming the violated bound when (n, d) is outside the
/// scheme's domain, SingularCoefficientError on a vanishing denominator and
/// InvariantViolation if the result is not an integer polynomial.
GPolyRecord via_recurrence(int n, int d, RecurrenceScheme scheme);

}  // namespace gpoly
