#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace polysum {

// All geometry in this library is exact. Scalars are arbitrary-precision
// rationals (GMP mpq), always stored in lowest terms with a positive
// denominator, so every predicate is a discrete yes/no with no epsilons.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms; throws std::invalid_argument on den == 0.
Rational makeRational(const Integer& num, const Integer& den);

// Accepts integers ("42", "-7"), fractions ("3/4", "-9/2") and finite
// decimals ("2.5", "-.125"); everything is normalized to an exact Rational.
std::optional<Rational> tryParseRational(std::string_view token);
Rational parseRational(std::string_view token);  // throws std::invalid_argument

// "p" when integral, "p/q" otherwise.
std::string str(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace polysum
