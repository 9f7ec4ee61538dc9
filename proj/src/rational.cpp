#include "nary/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace nary {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };

  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_int(num)) throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(mpq_class(to_mpz(num)));

  std::string_view den = text.substr(slash + 1);
  if (!valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
  mpz_class d = to_mpz(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(to_mpz(num), d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nary
