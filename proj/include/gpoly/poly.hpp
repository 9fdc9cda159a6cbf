#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gpoly/rational.hpp"

namespace gpoly {

/// Dense univariate polynomial over Q in the variable t.
///
/// coeffs()[i] is the coefficient of t^i. The vector never carries trailing
/// zeros, so the zero polynomial is the empty vector and has degree -1.
class UniPoly {
public:
    static constexpr int kZeroDegree = -1;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly from_ints(std::initializer_list<long> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t power);
    /// The indeterminate t.
    static UniPoly t();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of t^i, zero past the degree.
    Rational coeff(std::size_t i) const;
    /// Throws DomainError on the zero polynomial.
    const Rational& leading() const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
    friend UniPoly operator*(UniPoly p, const Rational& c) { return p *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly p) { return p *= c; }
    friend UniPoly operator-(UniPoly p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

enum class ArithOp { Add, Sub, Mul };

UniPoly poly_arith(const UniPoly& p, const UniPoly& q, ArithOp op);
UniPoly scale(const UniPoly& p, const Rational& c);

UniPoly derivative(const UniPoly& p);
UniPoly derivative(const UniPoly& p, int order);

/// Horner evaluation, exact.
Rational evaluate(const UniPoly& p, const Rational& x);
int sign_at(const UniPoly& p, const Rational& x);

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

/// Euclidean division over Q. Throws DomainError when b is zero.
DivMod divmod(const UniPoly& a, const UniPoly& b);

/// Positive rational c such that p / c has coprime integer coefficients.
/// content(0) = 0.
Rational content(const UniPoly& p);

/// p / content(p): integer coefficients with gcd 1, same sign pattern as p.
UniPoly primitive_part(const UniPoly& p);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct SquarefreeSplit {
    UniPoly gcd_with_derivative;
    UniPoly squarefree_part;
};

/// p = gcd_with_derivative * squarefree_part up to a nonzero rational.
/// squarefree_part is primitive with positive leading coefficient.
/// Throws DomainError on the zero polynomial.
SquarefreeSplit gcd_squarefree(const UniPoly& p);

/// Yun's decomposition: factors[k] collects the roots of multiplicity k + 1.
/// Each factor is primitive with positive leading coefficient (possibly 1).
std::vector<UniPoly> squarefree_factorization(const UniPoly& p);

/// Human-readable form, ascending powers: "2t + t^2".
std::string to_string(const UniPoly& p);

}  // namespace gpoly
