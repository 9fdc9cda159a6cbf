#include "gpoly/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gpoly/errors.hpp"

namespace gpoly {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

UniPoly UniPoly::from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::t() { return monomial(1, 1); }

Rational UniPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly operator-(UniPoly p) {
    for (auto& a : p.coeffs_) a = -a;
    return p;
}

UniPoly poly_arith(const UniPoly& p, const UniPoly& q, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return p + q;
        case ArithOp::Sub: return p - q;
        case ArithOp::Mul: return p * q;
    }
    throw DomainError("unknown arithmetic operation");
}

UniPoly scale(const UniPoly& p, const Rational& c) { return p * c; }

UniPoly derivative(const UniPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> out(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    return UniPoly(std::move(out));
}

UniPoly derivative(const UniPoly& p, int order) {
    if (order < 0) throw DomainError("negative derivative order");
    UniPoly out = p;
    for (int k = 0; k < order; ++k) out = derivative(out);
    return out;
}

Rational evaluate(const UniPoly& p, const Rational& x) {
    Rational acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

int sign_at(const UniPoly& p, const Rational& x) { return sign(evaluate(p, x)); }

DivMod divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<Rational> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational lead_inv = 1 / bc.back();
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational q = rem[static_cast<std::size_t>(k + db)] * lead_inv;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

Rational content(const UniPoly& p) {
    if (p.is_zero()) return 0;
    Integer num = 0;
    Integer den = 1;
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    return make_rational(num, den);
}

UniPoly primitive_part(const UniPoly& p) {
    if (p.is_zero()) return {};
    return p * (1 / content(p));
}

namespace {

UniPoly normalized(const UniPoly& p) {
    UniPoly q = primitive_part(p);
    if (!q.is_zero() && q.leading() < 0) q = -q;
    return q;
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvariantViolation("expected exact polynomial division");
    return q;
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = normalized(a);
    UniPoly y = normalized(b);
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = normalized(r);
    }
    return x;
}

SquarefreeSplit gcd_squarefree(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("gcd_squarefree: zero polynomial");
    UniPoly g = gcd(p, derivative(p));
    if (g.is_zero()) g = UniPoly::constant(1);  // only for constants: p' = 0
    return {g, normalized(exact_quotient(p, g))};
}

std::vector<UniPoly> squarefree_factorization(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree_factorization: zero polynomial");
    std::vector<UniPoly> factors;
    if (p.degree() == 0) return factors;
    const UniPoly dp = derivative(p);
    const UniPoly a0 = gcd(p, dp);
    UniPoly b = exact_quotient(p, a0);
    UniPoly c = exact_quotient(dp, a0);
    UniPoly d = c - derivative(b);
    while (b.degree() > 0) {
        UniPoly a = gcd(b, d);
        if (a.is_zero()) a = UniPoly::constant(1);
        factors.push_back(a);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - derivative(b);
    }
    return factors;
}

std::string to_string(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Rational& c = p.coeffs()[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (i == 0 || mag != 1) os << to_string(mag);
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace gpoly
