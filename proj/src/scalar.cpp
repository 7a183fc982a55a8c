#include "maxwell11/scalar.hpp"

#include <cctype>
#include <ostream>

namespace mx11 {

namespace {

bool rational_syntax_ok(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (!rational_syntax_ok(text))
    throw std::invalid_argument("not an exact rational (expected p or p/q): '" + text + "'");
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("unparsable rational: '" + text + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

ComplexRational parse_complex(const std::string& re, const std::string& im) {
  return {parse_rational(re), parse_rational(im)};
}

std::string to_string(const ComplexRational& z) {
  if (z.is_real()) return to_string(z.re);
  std::string im = to_string(z.im);
  std::string impart;
  if (im == "1")
    impart = "i";
  else if (im == "-1")
    impart = "-i";
  else
    impart = im + "i";
  if (sgn(z.re) == 0) return impart;
  if (impart[0] != '-') return to_string(z.re) + "+" + impart;
  return to_string(z.re) + impart;
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
  return os << to_string(z);
}

}  // namespace mx11
