#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "sqw/qpoch.hpp"

namespace sqw {

// Label convention for a single vertex (i,j;k,l): i bottom, j left, k top, l right.

// higher spin weights, j,l thin
template <class F>
F w_s(const F& q, const F& u, const F& s, int i, int j, int k, int l) {
  if (i < 0 || k < 0 || j < 0 || j > 1 || l < 0 || l > 1 || i + j != k + l) return F(0);
  F den = F(1) - s * u;
  F qg = ipow(q, i);
  F num;
  if (j == 0 && l == 0) num = F(1) - s * u * qg;
  else if (j == 0 && l == 1) num = (qg - F(1)) * s * u;
  else if (j == 1 && l == 0) num = F(1) - s * s * qg;
  else num = s * s * qg - s * u;
  return checked_div(num, den, "w_s: 1-su");
}

// R-matrix on thin labels
template <class F>
F R_mat(const F& q, const F& z, int i, int j, int k, int l) {
  for (int x : {i, j, k, l})
    if (x < 0 || x > 1) return F(0);
  auto key = i * 1000 + j * 100 + k * 10 + l;
  switch (key) {
    case 0:
    case 1111: return F(1) - q * z;
    case 101: return F(1) - z;
    case 110: return z * (F(1) - q);
    case 1001: return F(1) - q;
    case 1010: return q * (F(1) - z);
    default: return F(0);
  }
}

template <class F>
F R_star(const F& q, const F& z, int i, int j, int k, int l) {
  return R_mat(q, inv(z, "R_star"), i, j, k, l);
}

// q-Hahn weights; only t^2, s^2 enter
template <class F>
F W_s(const F& q, const F& t2, const F& s2, int i, int j, int k, int l) {
  if (i < 0 || j < 0 || k < 0 || l < 0 || i + j != k + l || i < l) return F(0);
  F r = checked_div(s2, t2, "W_s: t^2");
  F num = ipow(r, l) * qpoch(r, q, i - l) * qpoch(t2, q, l) * qbinom(q, i, l);
  return checked_div(num, qpoch(s2, q, i), "W_s: (s^2;q)_i");
}

// W_s at t^2 = s xi / kappa, s^2, written as a polynomial in kappa; r = s/xi.
template <class R, class F>
R W_row(const R& kappa, const F& r, const F& s2, const F& q, int i, int j, int k, int l) {
  if (i < 0 || j < 0 || k < 0 || l < 0 || i + j != k + l || i < l) return R(F(0));
  R out(F(1));
  F qm(1);
  for (int m = 0; m < l; ++m, qm *= q) out *= kappa * r - s2 * qm;
  qm = F(1);
  for (int m = 0; m < i - l; ++m, qm *= q) out *= F(1) - kappa * (r * qm);
  F scale = checked_div(qbinom(q, i, l), qpoch(s2, q, i), "W_row: (s^2;q)_i");
  return out * scale;
}

// dual higher spin weights (i,l;k,j): i bottom, l right, k top, j left; edges run right to left
template <class F>
F w_s_star(const F& q, const F& u, const F& s, int i, int l, int k, int j) {
  if (i < 0 || k < 0 || j < 0 || j > 1 || l < 0 || l > 1 || i + l != k + j) return F(0);
  F den = F(1) - s * u;
  F qg = ipow(q, i);
  F num;
  if (l == 0 && j == 0) num = F(1) - s * u * qg;
  else if (l == 1 && j == 0) num = -checked_div(u, s, "w_s_star: s") * (F(1) - s * s * qg);
  else if (l == 0 && j == 1) num = F(1) - qg;
  else num = qg - checked_div(u, s, "w_s_star: s");
  return checked_div(num, den, "w_s_star: 1-su");
}

template <class F>
F W_s_star(const F& q, const F& t2, const F& s2, int i, int l, int k, int j) {
  if (i < 0 || j < 0 || k < 0 || l < 0 || i + l != j + k || i < j) return F(0);
  F r = checked_div(s2, t2, "W_s_star: t^2");
  F num = ipow(t2, i - j) * qpoch(r, q, i - j) * qpoch(t2, q, j) * qbinom(q, i, j);
  return checked_div(num, qpoch(s2, q, i), "W_s_star: (s^2;q)_i");
}

template <class F>
F phi(const F& q, int a, int b, const F& x, const F& y) {
  if (a < 0 || b < 0 || a > b) return F(0);
  F yx = checked_div(y, x, "phi: x");
  F num = ipow(yx, a) * qpoch(x, q, a) * qpoch(yx, q, b - a) * qbinom(q, b, a);
  return checked_div(num, qpoch(y, q, b), "phi: (y;q)_b");
}

// fully fused weights with Q = q^J kept as a free scalar
template <class F>
F W_fused_Q(const F& q, const F& Q, const F& u, const F& s, int i, int j, int k, int l) {
  if (i < 0 || j < 0 || k < 0 || l < 0 || i + j != k + l) return F(0);
  F su = s * u;
  F x2 = checked_div(s, Q * u, "W_fused: Qu");
  F y2 = inv(Q, "W_fused: Q");
  F sum(0);
  for (int p = 0; p <= std::min(j, k); ++p)
    sum += phi(q, k - p, k + l - p, su * Q, su) * phi(q, p, j, x2, y2);
  return ipow(u, l - j) * ipow(Q, i) * ipow(s, j + l) * sum;
}

template <class F>
F W_fused(const F& q, int J, const F& u, const F& s, int i, int j, int k, int l) {
  if (j > J || l > J) return F(0);
  return W_fused_Q(q, ipow(q, J), u, s, i, j, k, l);
}

// sum over a in {0,1}^J with |a| = j of q^{sum (r-1) a_r}
template <class F>
F Z_fusion(const F& q, int j, int J) {
  if (j < 0 || j > J) return F(0);
  return ipow(q, j * (j - 1) / 2) * qbinom(q, J, j);
}

// continued dual weight: bottom label alpha, output beta = alpha q^{l-j}
template <class F>
F w_tilde_star(const F& q, const F& u, const F& s, const F& alpha, int l, int j) {
  if (l < 0 || l > 1 || j < 0 || j > 1) return F(0);
  F den = F(1) - s * u;
  F num;
  if (l == 0 && j == 0) num = F(1) - s * u * alpha;
  else if (l == 1 && j == 0) num = -checked_div(u, s, "w_tilde_star: s") * (F(1) - s * s * alpha);
  else if (l == 0 && j == 1) num = F(1) - alpha;
  else num = alpha - checked_div(u, s, "w_tilde_star: s");
  return checked_div(num, den, "w_tilde_star: 1-su");
}

template <class F>
F W_tilde(const F& q, const F& t2, const F& s2, int i, int delta, int l) {
  if (delta != i - l || delta < 0 || l < 0) return F(0);
  F r = checked_div(s2, t2, "W_tilde: t^2");
  F num = ipow(r, l) * qpoch(r, q, i - l) * qpoch(t2, q, l) * qbinom(q, i, l);
  return checked_div(num, qpoch(s2, q, i), "W_tilde: (s^2;q)_i");
}

// hat weight at alpha = q^N with the infinite ratios collapsed
template <class F>
F W_hat(const F& q, const F& t2, const F& s2, int N, int delta, int j, int k) {
  if (N < 0 || delta < 0 || delta != k - j || j < 0) return F(0);
  F r = checked_div(s2, t2, "W_hat: t^2");
  F num = ipow(r, N) * qpoch(ipow(q, N + 1), q, delta) * qpoch(r, q, delta) * qpoch(t2, q, N);
  F den = qpoch(q, q, delta) * qpoch(s2, q, N + delta);
  return checked_div(num, den, "W_hat");
}

// colored labels: compositions over colors 1..n stored 0-based; thin colors 0..n with 0 empty
using Composition = std::vector<int>;

inline int comp_sum(const Composition& I, int from, int to) {  // I_{[from,to]}, 1-based
  int s = 0;
  for (int c = from; c <= to; ++c) s += I[c - 1];
  return s;
}

// (I, a; K, b): I bottom, e^a left, K top, e^b right
template <class F>
F w_col(const F& q, const F& x, const F& s, const Composition& I, int a, const Composition& K, int b) {
  const int n = static_cast<int>(I.size());
  if (static_cast<int>(K.size()) != n || a < 0 || a > n || b < 0 || b > n) return F(0);
  for (int c = 1; c <= n; ++c) {
    int lhs = I[c - 1] + (a == c), rhs = K[c - 1] + (b == c);
    if (lhs != rhs || K[c - 1] < 0 || I[c - 1] < 0) return F(0);
  }
  F den = F(1) - s * x;
  F num;
  if (a == 0 && b == 0) {
    num = F(1) - s * x * ipow(q, comp_sum(I, 1, n));
  } else if (a == b) {
    int i = a;
    num = (s * s * ipow(q, I[i - 1]) - s * x) * ipow(q, comp_sum(I, i + 1, n));
  } else if (a == 0) {
    int i = b;
    num = s * x * (ipow(q, I[i - 1]) - F(1)) * ipow(q, comp_sum(I, i + 1, n));
  } else if (b == 0) {
    num = F(1) - s * s * ipow(q, comp_sum(I, 1, n));
  } else if (a < b) {
    int j = b;
    num = s * x * (ipow(q, I[j - 1]) - F(1)) * ipow(q, comp_sum(I, j + 1, n));
  } else {
    int i = b;
    num = s * s * (ipow(q, I[i - 1]) - F(1)) * ipow(q, comp_sum(I, i + 1, n));
  }
  return checked_div(num, den, "w_col: 1-sx");
}

// (I, J; K, L): I bottom, J left, K top, L right
template <class F>
F W_col(const F& q, const F& t2, const F& s2, const Composition& I, const Composition& J, const Composition& K,
        const Composition& L) {
  const int n = static_cast<int>(I.size());
  for (int c = 0; c < n; ++c)
    if (I[c] + J[c] != K[c] + L[c] || I[c] < L[c] || L[c] < 0 || K[c] < 0 || J[c] < 0) return F(0);
  int aI = comp_sum(I, 1, n), aL = comp_sum(L, 1, n);
  F r = checked_div(s2, t2, "W_col: t^2");
  F val = ipow(r, aL) * qpoch(r, q, aI - aL) * qpoch(t2, q, aL);
  for (int c = 1; c <= n; ++c)
    val *= ipow(q, comp_sum(L, 1, c - 1) * (I[c - 1] - L[c - 1])) * qbinom(q, I[c - 1], L[c - 1]);
  return checked_div(val, qpoch(s2, q, aI), "W_col: (s^2;q)_|I|");
}

}  // namespace sqw
