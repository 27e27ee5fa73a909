#pragma once

#include <functional>
#include <vector>

#include "sqw/params.hpp"
#include "sqw/partition.hpp"
#include "sqw/weights.hpp"

namespace sqw {

// One-row W^s partition function between mu (bottom) and lam (top), left label a,
// column c carrying (t^2, s^2) = (s_c xi_c / kappa, s_c^2).
template <class F>
F zw_row(int a, const Partition& lam, const Partition& mu, const F& kappa, const View<F>& v) {
  if (lam[1] != mu[1] + a) return F(0);
  int L = std::max(lam.length(), mu.length());
  F out(1);
  for (int c = 1; c <= L && !is_zero(out); ++c) {
    F t2 = checked_div(v.s_xi(c), kappa, "zw_row: kappa");
    out *= W_s(v.q(), t2, v.s2(c), col_mult(mu, c), lam[c] - mu[c], col_mult(lam, c), lam[c + 1] - mu[c + 1]);
  }
  return out;
}

// One-row w^s partition function (one row of Zw) with spectral parameters u xi_c.
template <class F>
F zw_row_thin(int a, const Partition& lam, const Partition& mu, const F& u, const View<F>& v) {
  if (lam[1] != mu[1] + a) return F(0);
  int L = std::max(lam.length(), mu.length());
  F out(1);
  for (int c = 1; c <= L && !is_zero(out); ++c)
    out *= w_s(v.q(), u * v.xi(c), v.s(c), col_mult(mu, c), lam[c] - mu[c], col_mult(lam, c), lam[c + 1] - mu[c + 1]);
  return out;
}

enum class RowFamily { W, Wstar, w, wstar };

template <class F>
struct RowSpec {
  RowFamily family = RowFamily::W;
  F spectral;  // kappa for W / Wstar, u for w / wstar
  View<F> view;
  int left = 0;
  Partition top, bottom;  // for the dual families "bottom" is the ket lam and "top" the bra mu
};

// Sums the row weight over every assignment of horizontal labels in [0, cap]
// (transfer-matrix evaluation of the full sum, no conservation shortcut).
template <class F>
F brute_force_row(const RowSpec<F>& spec, int cap) {
  const View<F>& v = spec.view;
  const F& q = v.q();
  int L = std::max(spec.top.length(), spec.bottom.length()) + 1;
  if (spec.left < 0 || spec.left > cap) return F(0);
  std::vector<F> cur(cap + 1, F(0));
  cur[spec.left] = F(1);
  for (int c = 1; c <= L; ++c) {
    int ib = col_mult(spec.bottom, c), kt = col_mult(spec.top, c);
    std::vector<F> nxt(cap + 1, F(0));
    for (int h = 0; h <= cap; ++h) {
      if (is_zero(cur[h])) continue;
      for (int h2 = 0; h2 <= cap; ++h2) {
        F w(0);
        switch (spec.family) {
          case RowFamily::W:
            w = W_s(q, checked_div(v.s_xi(c), spec.spectral, "row: kappa"), v.s2(c), ib, h, kt, h2);
            break;
          case RowFamily::Wstar:
            w = W_s_star(q, checked_div(v.s_xi(c), spec.spectral, "row: kappa"), v.s2(c), ib, h2, kt, h);
            break;
          case RowFamily::w:
            w = w_s(q, spec.spectral * v.xi(c), v.s(c), ib, h, kt, h2);
            break;
          case RowFamily::wstar:
            w = w_s_star(q, spec.spectral * v.xi(c), v.s(c), ib, h2, kt, h);
            break;
        }
        if (!is_zero(w)) nxt[h2] += cur[h] * w;
      }
    }
    cur = std::move(nxt);
  }
  return cur[0];
}

namespace detail {

template <class F, class RowFn>
F grid_sum(const std::vector<int>& a, const Partition& lam, const Partition& mu, RowFn row, bool vertical) {
  int n = static_cast<int>(a.size());
  std::function<F(int, const Partition&)> rec = [&](int i, const Partition& above) -> F {
    if (i == n) return above == mu ? F(1) : F(0);
    F total(0);
    auto below_set = vertical ? enum_vertical_strip_below(above) : enum_interlacing_below(above);
    for (const auto& below : below_set) {
      if (below[1] != above[1] - a[i] || !contains(below, mu)) continue;
      F r = row(i, above, below);
      if (is_zero(r)) continue;
      total += r * rec(i + 1, below);
    }
    return total;
  };
  return rec(0, lam);
}

}  // namespace detail

// ZW^{(a)}_{lam/mu}(kappa): row i (1 = top, next to lam) uses the view mixed-shifted by i
template <class F>
F ZW_grid(const std::vector<int>& a, const Partition& lam, const Partition& mu, const std::vector<F>& kappa,
          const View<F>& v) {
  if (a.size() != kappa.size()) throw PreconditionError("ZW_grid: label and variable counts differ");
  int total = 0;
  for (int x : a) total += x;
  if (total != lam[1] - mu[1]) return F(0);
  auto row = [&](int i, const Partition& above, const Partition& below) {
    return zw_row(a[i], above, below, kappa[i], v.mixed_shift(i + 1));
  };
  return detail::grid_sum<F>(a, lam, mu, row, false);
}

// Zw^{(a)}_{lam/mu}(u): w^s rows with (u_i xi_c, s_c), row 1 at the top
template <class F>
F Zw_grid(const std::vector<int>& a, const Partition& lam, const Partition& mu, const std::vector<F>& u,
          const View<F>& v) {
  if (a.size() != u.size()) throw PreconditionError("Zw_grid: label and variable counts differ");
  for (int x : a)
    if (x < 0 || x > 1) return F(0);
  auto row = [&](int i, const Partition& above, const Partition& below) {
    return zw_row_thin(a[i], above, below, u[i], v);
  };
  return detail::grid_sum<F>(a, lam, mu, row, true);
}

// J-column of w^s vertices with spectral parameters u, qu, ..., q^{J-1}u (bottom to top),
// right labels b, normalized by Z_l(J)/Z_j(J).
template <class F>
F stack_columns_fused(const F& q, int J, const F& u, const F& s, int i, int j, int k, const std::vector<int>& b) {
  if (static_cast<int>(b.size()) != J) throw PreconditionError("stack_columns_fused: b has wrong length");
  int l = 0, bw = 0;
  for (int r = 0; r < J; ++r) {
    if (b[r] < 0 || b[r] > 1) throw PreconditionError("stack_columns_fused: b not thin");
    l += b[r];
    bw += r * b[r];
  }
  if (j < 0 || j > J || i + j != k + l) return F(0);
  F sum(0);
  std::vector<int> av(J, 0);
  std::function<void(int, int, int, F, F)> rec = [&](int r, int v, int left, F prod, F qa) {
    if (r == J) {
      if (left == 0 && v == k) sum += qa * prod;
      return;
    }
    for (int ar = 0; ar <= std::min(1, left); ++ar) {
      int vn = v + ar - b[r];
      if (vn < 0) continue;
      F w = w_s(q, ipow(q, r) * u, s, v, ar, vn, b[r]);
      if (is_zero(w)) continue;
      rec(r + 1, vn, left - ar, prod * w, ar ? qa * ipow(q, r) : qa);
    }
  };
  rec(0, i, j, F(1), F(1));
  return checked_div(Z_fusion(q, l, J), Z_fusion(q, j, J), "stack: Z_j") * ipow(q, -bw) * sum;
}

// dual J-column: rows r = J (bottom) .. 1 (top) with w^{s*}_{s q^{r-1}; s},
// row r reads (v, b_r; v', a_r); returns the raw right-hand side of the dual fusion relation
template <class F>
F stack_columns_dual_fused(const F& q, int J, const F& s, int i, int j, int k, const std::vector<int>& b) {
  if (static_cast<int>(b.size()) != J) throw PreconditionError("stack_columns_dual_fused: b has wrong length");
  int l = 0, bw = 0;
  for (int r = 0; r < J; ++r) {
    if (b[r] < 0 || b[r] > 1) throw PreconditionError("stack_columns_dual_fused: b not thin");
    l += b[r];
    bw += r * b[r];
  }
  if (j < 0 || j > J || i + l != k + j) return F(0);
  F sum(0);
  std::function<void(int, int, int, F, F)> rec = [&](int r, int v, int left, F prod, F qa) {
    if (r < 0) {
      if (left == 0 && v == k) sum += qa * prod;
      return;
    }
    for (int ar = 0; ar <= std::min(1, left); ++ar) {
      int vn = v + b[r] - ar;
      if (vn < 0) continue;
      F w = w_s_star(q, s * ipow(q, r), s, v, b[r], vn, ar);
      if (is_zero(w)) continue;
      rec(r - 1, vn, left - ar, prod * w, ar ? qa * ipow(q, r) : qa);
    }
  };
  rec(J - 1, i, j, F(1), F(1));
  return ipow(q, -bw) * sum;
}

}  // namespace sqw
