#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "sqw/errors.hpp"
#include "sqw/rational.hpp"

namespace sqw {

using Complex = std::complex<double>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }

inline bool is_zero_ring(const Rational& x) { return x.is_zero(); }
inline bool is_zero_ring(const Complex& z) { return is_zero(z); }

inline bool is_finite(const Rational&) { return true; }
inline bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

template <class F>
F from_rational(const Rational& r);
template <>
inline Rational from_rational<Rational>(const Rational& r) { return r; }
template <>
inline Complex from_rational<Complex>(const Rational& r) { return Complex(r.to_double(), 0.0); }

inline Complex to_complex(const Rational& r) { return Complex(r.to_double(), 0.0); }
inline Complex to_complex(const Complex& z) { return z; }

inline std::string to_string(const Rational& r) { return r.str(); }
std::string to_string(const Complex& z);

template <class F>
F checked_div(const F& a, const F& b, const char* where = "division") {
  if (is_zero(b)) throw PoleError(where);
  F r = a / b;
  if (!is_finite(r)) throw PoleError(std::string(where) + " (non-finite)");
  return r;
}

template <class F>
F inv(const F& x, const char* where = "inverse") { return checked_div(F(1), x, where); }

template <class F>
F ipow(const F& x, long e) {
  if (e < 0) return ipow(inv(x, "negative power"), -e);
  F r(1), b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

template <>
inline Rational ipow<Rational>(const Rational& x, long e) { return x.pow(e); }

inline double magnitude(const Rational& r) { return std::fabs(r.to_double()); }
inline double magnitude(const Complex& z) { return std::abs(z); }

}  // namespace sqw
