#pragma once

#include <cmath>
#include <vector>

#include "sqw/scalar.hpp"

namespace sqw {

// (x;q)_n = prod_{i=1}^{n} (1 - x q^{i-1}), (x;q)_0 = 1
template <class F>
F qpoch(const F& x, const F& q, int n) {
  if (n < 0) throw PreconditionError("qpoch with negative length");
  F r(1), t = x;
  for (int i = 0; i < n; ++i) {
    r *= F(1) - t;
    t *= q;
  }
  return r;
}

// all prefixes (x;q)_0 .. (x;q)_n
template <class F>
std::vector<F> qpoch_table(const F& x, const F& q, int n) {
  std::vector<F> out;
  out.reserve(n + 1);
  F r(1), t = x;
  out.push_back(r);
  for (int i = 0; i < n; ++i) {
    r *= F(1) - t;
    t *= q;
    out.push_back(r);
  }
  return out;
}

template <class F>
F qbinom(const F& q, int n, int k) {
  if (k < 0 || k > n) return F(0);
  return checked_div(qpoch(q, q, n), qpoch(q, q, k) * qpoch(q, q, n - k), "q-binomial");
}

struct QpochInf {
  Complex value;
  int terms = 0;
};

// (x;q)_inf truncated at the first k with |x||q|^k/(1-|q|) < tol
QpochInf qpoch_inf_detail(const Complex& x, const Complex& q, double tol);

inline Complex qpoch_inf(const Complex& x, const Complex& q, double tol) {
  return qpoch_inf_detail(x, q, tol).value;
}

}  // namespace sqw
