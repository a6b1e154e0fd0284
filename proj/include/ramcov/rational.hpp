#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ramcov {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an operation's precondition on its arguments does not hold.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a requested enumeration exceeds the configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// num/den in lowest terms. mpq_class(num, den) leaves the fraction as given,
/// and equality on non-canonical values is unreliable.
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical "p/q" rendering; integers render as "p/1" so every rational
// field in a report has the same shape.
inline std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p/q" or "p". Throws InvalidInput on anything else or q = 0.
Rational parse_rational(const std::string& text);

inline bool is_integral(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_den() == 1;
}

}  // namespace ramcov
