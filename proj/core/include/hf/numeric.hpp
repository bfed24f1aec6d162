#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace hf {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<Rational>;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

/// Floor division for arbitrary signs.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor_of(const Rational& q) { return floor_div(numerator_of(q), denominator_of(q)); }
inline BigInt ceil_of(const Rational& q) { return -floor_div(-numerator_of(q), denominator_of(q)); }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Scales a rational vector to the primitive integer vector on the same ray.
/// The zero vector maps to the zero vector.
IntVector primitive_integer_vector(const RatVector& v);

}  // namespace hf
