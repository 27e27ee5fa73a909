#include "sqw/rational.hpp"

#include <cctype>
#include <ostream>

#include "sqw/errors.hpp"

namespace sqw {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw PoleError("zero denominator in rational literal");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view n = text.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(n, true) || !valid_integer(d, false))
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  std::string ns(n);
  if (ns[0] == '+') ns.erase(0, 1);
  mpz_class num(ns, 10), den(std::string(d), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::inverse() const {
  if (is_zero()) throw PoleError("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  mpq_class r(n, d);
  r.canonicalize();
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PoleError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::size_t Rational::hash() const {
  std::size_t h1 = std::hash<std::string>{}(v_.get_num().get_str(16));
  std::size_t h2 = std::hash<std::string>{}(v_.get_den().get_str(16));
  return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sqw
