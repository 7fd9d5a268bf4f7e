#include "frieze/rational.hpp"

#include <cctype>

#include "frieze/errors.hpp"

namespace frieze {

Rational rat(long num, long den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool digits_only(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational rat_parse(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
  }
  if (!digits_only(num) || !digits_only(den))
    throw ParseError("malformed rational '" + text + "'");
  Integer n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool rat_is_canonical(const Rational& value) {
  if (value.get_den() <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return value.get_num() == 0 ? value.get_den() == 1 : g == 1;
}

}  // namespace frieze
