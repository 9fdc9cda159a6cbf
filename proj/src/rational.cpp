#include "gpoly/rational.hpp"

#include "gpoly/errors.hpp"

namespace gpoly {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw DomainError("not a rational number: '" + text + "'");
    if (q.get_den() == 0) throw DomainError("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace gpoly
