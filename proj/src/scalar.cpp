#include <cstdio>

#include "sqw/qpoch.hpp"
#include "sqw/scalar.hpp"

namespace sqw {

std::string to_string(const Complex& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

QpochInf qpoch_inf_detail(const Complex& x, const Complex& q, double tol) {
  double aq = std::abs(q);
  if (!(aq < 1.0)) throw PreconditionError("qpoch_inf requires |q| < 1");
  if (!(tol > 0.0)) throw PreconditionError("qpoch_inf requires tol > 0");
  double ax = std::abs(x);
  int k = 0;
  double bound = ax / (1.0 - aq);
  while (bound >= tol) {
    bound *= aq;
    ++k;
  }
  QpochInf out;
  out.terms = k;
  out.value = qpoch(x, q, k);
  return out;
}

}  // namespace sqw
