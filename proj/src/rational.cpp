#include "kdelta/rational.hpp"

#include <cctype>
#include <ostream>

namespace kdelta {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat::Rat(long n, long d) {
  if (d == 0) fail("DivisionByZero", "rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat::Rat(mpz_class n, mpz_class d) {
  if (sgn(d) == 0) fail("DivisionByZero", "rational with zero denominator");
  q_ = mpq_class(std::move(n));
  q_ /= mpq_class(std::move(d));
}

Rat Rat::parse(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(s)) fail("ParseError", "not an exact rational: \"" + s + "\"");
    return Rat(mpz_class(s));
  }
  const std::string p = s.substr(0, slash);
  const std::string q = s.substr(slash + 1);
  if (!valid_integer_token(p) || !valid_integer_token(q))
    fail("ParseError", "not an exact rational: \"" + s + "\"");
  mpz_class den(q);
  if (sgn(den) == 0) fail("DivisionByZero", "rational with zero denominator: \"" + s + "\"");
  return Rat(mpz_class(p), std::move(den));
}

Rat Rat::factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(std::move(f));
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rat Rat::abs() const {
  Rat r = *this;
  if (r.sign() < 0) r = -r;
  return r;
}

Rat Rat::pow(unsigned long e) const {
  Rat acc(1);
  Rat base = *this;
  while (e != 0) {
    if (e & 1UL) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Rat Rat::inverse() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero");
  return Rat(mpz_class(den()), mpz_class(num()));
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.q_ = -r.q_;
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) fail("DivisionByZero", "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace kdelta
