#include "ramcov/rational.hpp"

#include <cctype>

namespace ramcov {

namespace {

bool is_signed_digits(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer to_integer(std::string s) {
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_signed_digits(num) || !is_signed_digits(den))
    throw InvalidInput("not an exact rational: '" + text + "'");
  Integer d = to_integer(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
  Rational r(to_integer(num), d);
  r.canonicalize();
  return r;
}

}  // namespace ramcov
