#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "sqw/lattice.hpp"
#include "sqw/rowops.hpp"

namespace sqw {

// c_S(lam) = prod_{i>=1} (s_i^2;q)_{m_i} / (q;q)_{m_i},  m_i = lam_i - lam_{i+1}
template <class F>
F c_S(const Partition& lam, const View<F>& v) {
  F out(1);
  for (int i = 1; i <= lam.length(); ++i) {
    int m = col_mult(lam, i);
    if (m == 0) continue;
    out *= checked_div(qpoch(v.s2(i), v.q(), m), qpoch(v.q(), v.q(), m), "c_S");
  }
  return out;
}

// (-S)^lam = prod_{i>=1} (-s_{i-1})^{lam_i}
template <class F>
F signed_power(const Partition& lam, const View<F>& v) {
  F out(1);
  for (int i = 1; i <= lam.length(); ++i) out *= ipow(-v.s(i - 1), lam[i]);
  return out;
}

// (S)^{2 lam} = prod_{i>=1} s_{i-1}^{2 lam_i}
template <class F>
F squared_power(const Partition& lam, const View<F>& v) {
  F out(1);
  for (int i = 1; i <= lam.length(); ++i) out *= ipow(v.s2(i - 1), lam[i]);
  return out;
}

template <class F>
struct NormData {
  F c, signed_pow, squared_pow;
  static NormData of(const Partition& lam, const View<F>& v) {
    return {c_S(lam, v), signed_power(lam, v), squared_power(lam, v)};
  }
};

// lam'_r <= rho'_r + k for every column r
inline bool columns_within(const Partition& lam, const Partition& rho, int k) {
  for (int r = 1; r <= lam[1]; ++r) {
    int lc = 0, rc = 0;
    for (int i = 1; i <= lam.length() && lam[i] >= r; ++i) ++lc;
    for (int i = 1; i <= rho.length() && rho[i] >= r; ++i) ++rc;
    if (lc > rc + k) return false;
  }
  return true;
}

// <lam| C(k_1|tau^s v) ... C(k_n|tau^{ns} v) |mu>; the definition has step s = 1
template <class R, class F>
R spin_F_s_chain(const Partition& lam, const Partition& mu, const std::vector<R>& kappa, const View<F>& v,
                 int step) {
  const int n = static_cast<int>(kappa.size());
  if (!contains(lam, mu)) return R(F(0));
  State<R> state;
  state.emplace(mu, R(F(1)));
  for (int i = n; i >= 1; --i) {
    COp<R, F> op(kappa[i - 1], v.mixed_shift(i * step));
    State<R> next;
    auto keep = [&](const Partition& rho) { return contains(lam, rho) && columns_within(lam, rho, i - 1); };
    for (const auto& [nu, c] : state)
      for (auto& [rho, m] : op.column(nu, lam[1], keep)) {
        auto it = next.find(rho);
        if (it == next.end()) next.emplace(rho, c * m);
        else it->second += c * m;
      }
    state = std::move(next);
  }
  auto it = state.find(lam);
  return it == state.end() ? R(F(0)) : it->second;
}

template <class R, class F>
R spin_F_s(const Partition& lam, const Partition& mu, const std::vector<R>& kappa, const View<F>& v) {
  return spin_F_s_chain(lam, mu, kappa, v, 1);
}

// F^s_{lam/mu} for every lam inside the box at once
template <class R, class F>
State<R> spin_F_s_all(const Partition& mu, const std::vector<R>& kappa, const View<F>& v, const Box& box) {
  const int n = static_cast<int>(kappa.size());
  State<R> state;
  if (!box.contains(mu)) return state;
  state.emplace(mu, R(F(1)));
  for (int i = n; i >= 1; --i) {
    COp<R, F> op(kappa[i - 1], v.mixed_shift(i));
    State<R> next;
    auto keep = [&](const Partition& rho) { return box.contains(rho); };
    for (const auto& [nu, c] : state)
      for (auto& [rho, m] : op.column(nu, box.cols, keep)) {
        auto it = next.find(rho);
        if (it == next.end()) next.emplace(rho, c * m);
        else it->second += c * m;
      }
    state = std::move(next);
  }
  return state;
}

// lattice oracle: sum over a of prod_i C-coefficient(a_i) * ZW^{(a)}
template <class F>
F spin_F_s_lattice(const Partition& lam, const Partition& mu, const std::vector<F>& kappa, const View<F>& v) {
  const int n = static_cast<int>(kappa.size());
  int d = lam[1] - mu[1];
  if (d < 0) return F(0);
  F total(0);
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      a[i] = left;
      F coef(1);
      for (int r = 0; r < n; ++r) coef *= C_coeff(kappa[r], v.mixed_shift(r + 1), a[r]);
      if (!is_zero(coef)) total += coef * ZW_grid(a, lam, mu, kappa, v);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      a[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (n == 0) return lam == mu ? F(1) : F(0);
  rec(0, d);
  return total;
}

// F_{lam/mu} = (-tau^n S)^mu / (-S)^lam * c_{tau^n S}(mu) / c_S(lam) * F^s_{lam/mu}
template <class F>
F spin_F_scale(const Partition& lam, const Partition& mu, int n, const View<F>& v) {
  View<F> vn = v.mixed_shift(n);
  return checked_div(signed_power(mu, vn) * c_S(mu, vn), signed_power(lam, v) * c_S(lam, v), "F normalization");
}

template <class R, class F>
R spin_F(const Partition& lam, const Partition& mu, const std::vector<R>& kappa, const View<F>& v) {
  const int n = static_cast<int>(kappa.size());
  return spin_F_s(lam, mu, kappa, v) * spin_F_scale(lam, mu, n, v);
}

template <class F>
F spin_F_star(const Partition& lam, const Partition& mu, const std::vector<F>& kappa, const View<F>& v) {
  const int n = static_cast<int>(kappa.size());
  return spin_F(lam, mu, kappa, v) * checked_div(c_S(lam, v), c_S(mu, v.mixed_shift(n)), "F* normalization");
}

// definition: (tau^n S)^{2mu}/(S)^{2lam} * c_{tau^n S}(mu)/c_S(lam) * F^s
template <class F>
F spin_F_s_star(const Partition& lam, const Partition& mu, const std::vector<F>& kappa, const View<F>& v) {
  const int n = static_cast<int>(kappa.size());
  View<F> vn = v.mixed_shift(n);
  F scale = checked_div(squared_power(mu, vn) * c_S(mu, vn), squared_power(lam, v) * c_S(lam, v), "F^s* scale");
  return scale * spin_F_s(lam, mu, kappa, v);
}

// <mu| B*(k_n|tau^{n-1} v) ... B*(k_1|v) |lam>
template <class F>
F spin_F_s_star_operator(const Partition& lam, const Partition& mu, const std::vector<F>& kappa, const View<F>& v) {
  const int n = static_cast<int>(kappa.size());
  if (!contains(lam, mu)) return F(0);
  State<F> state;
  state.emplace(lam, F(1));
  for (int i = 1; i <= n; ++i) {
    BstarOp<F> op(kappa[i - 1], v.mixed_shift(i - 1));
    State<F> next;
    for (const auto& [rho, c] : state)
      for (auto& [nu, m] : op.column(rho)) {
        if (!contains(nu, mu) || !columns_within(nu, mu, n - i)) continue;
        auto it = next.find(nu);
        if (it == next.end()) next.emplace(nu, c * m);
        else it->second += c * m;
      }
    state = std::move(next);
  }
  auto it = state.find(mu);
  return it == state.end() ? F(0) : it->second;
}

// Single-variable closed form, scalar mode.
template <class F>
F spin_F_one_var(const Partition& lam, const Partition& mu, const F& kappa, const View<F>& v) {
  if (!interlaces(lam, mu)) return F(0);
  const F& q = v.q();
  F out(1);
  for (int i = 1; i <= lam.length(); ++i) {
    int d = lam[i] - mu[i], e = mu[i] - lam[i + 1], m = lam[i] - lam[i + 1];
    // (-kappa)^{d} (kappa^{-1} s_i xi_i;q)_d = prod (s_i xi_i q^r - kappa)
    F sx = v.s_xi(i), qr(1);
    for (int r = 0; r < d; ++r, qr *= q) out *= sx * qr - kappa;
    out *= ipow(v.xi(i - 1), mu[i] - lam[i]);
    out *= ipow(checked_div(v.sqrt_s_xi(i), v.sqrt_s_xi(i - 1), "one-var root"), mu[i]);
    out *= qpoch(kappa * v.s_over_xi(i), q, e) * qpoch(q, q, m);
    out = checked_div(out, qpoch(q, q, d) * qpoch(q, q, e) * qpoch(v.s2(i), q, m), "one-var denominator");
  }
  return out;
}

// ---------------------------------------------------------------------------
// stable spin Hall-Littlewood side; public entry points take the HL labels
// (conjugates of the vertex-model partitions)

// <mu| B~*(u_n) ... B~*(u_1) |lam> on vertex partitions
template <class F>
F btilde_chain(const Partition& lam, const Partition& mu, const std::vector<F>& u, const View<F>& v) {
  const int n = static_cast<int>(u.size());
  if (!contains(lam, mu) || lam[1] - mu[1] > n) return F(0);
  State<F> state;
  state.emplace(lam, F(1));
  for (int i = 1; i <= n; ++i) {
    BtildeOp<F> op(u[i - 1], v);
    State<F> next;
    for (const auto& [rho, c] : state)
      for (auto& [nu, m] : op.column(rho)) {
        if (!contains(nu, mu) || nu[1] - mu[1] > n - i) continue;
        auto it = next.find(nu);
        if (it == next.end()) next.emplace(nu, c * m);
        else it->second += c * m;
      }
    state = std::move(next);
  }
  auto it = state.find(mu);
  return it == state.end() ? F(0) : it->second;
}

template <class F>
F FHL_s_star(const Partition& lamHL, const Partition& muHL, const std::vector<F>& u, const View<F>& v) {
  return btilde_chain(conjugate(lamHL), conjugate(muHL), u, v);
}

// F~ = (-S)^lam / (-S)^mu * F~^{s*}   (vertex partitions lam, mu)
template <class F>
F FHL(const Partition& lamHL, const Partition& muHL, const std::vector<F>& u, const View<F>& v) {
  Partition lam = conjugate(lamHL), mu = conjugate(muHL);
  return checked_div(signed_power(lam, v), signed_power(mu, v), "FHL scale") * btilde_chain(lam, mu, u, v);
}

template <class F>
F FHL_star(const Partition& lamHL, const Partition& muHL, const std::vector<F>& u, const View<F>& v) {
  Partition lam = conjugate(lamHL), mu = conjugate(muHL);
  return checked_div(c_S(lam, v), c_S(mu, v), "FHL* scale") * FHL(lamHL, muHL, u, v);
}

// lattice oracle: sum_a prod (-u_i xi_0 s_0)^{a_i} Zw^{(a)}, renormalized
template <class F>
F FHL_lattice(const Partition& lamHL, const Partition& muHL, const std::vector<F>& u, const View<F>& v) {
  Partition lam = conjugate(lamHL), mu = conjugate(muHL);
  const int n = static_cast<int>(u.size());
  int d = lam[1] - mu[1];
  if (d < 0 || d > n) return F(0);
  F total(0);
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> a(n);
    int cnt = 0;
    for (int i = 0; i < n; ++i) cnt += a[i] = (mask >> i) & 1;
    if (cnt != d) continue;
    F coef(1);
    for (int i = 0; i < n; ++i)
      if (a[i]) coef *= -u[i] * v.xi(0) * v.s(0);
    total += coef * Zw_grid(a, lam, mu, u, v);
  }
  F scale = checked_div(signed_power(mu, v) * c_S(mu, v), signed_power(lam, v) * c_S(lam, v), "FHL lattice scale");
  return scale * total;
}

template <class F>
F phi_tilde(int k, const F& u, const View<F>& v) {
  const F& q = v.q();
  if (k == 0) return F(1) - q;
  F out = checked_div(v.xi(0) * u * (F(1) - q), F(1) - v.s_xi(k) * u, "phi_tilde");
  for (int j = 1; j < k; ++j) out *= checked_div(v.xi(j) * u - v.s(j), F(1) - v.s_xi(j) * u, "phi_tilde");
  return out;
}

// symmetrization formula, pairwise distinct u only
template <class F>
F FHL_symmetrized(const Partition& lamHL, const std::vector<F>& u, const View<F>& v) {
  const int n = static_cast<int>(u.size());
  if (lamHL.length() > n) return F(0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (u[a] == u[b]) throw PreconditionError("FHL_symmetrized needs pairwise distinct variables");
  const F& q = v.q();
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<F>> phis(n, std::vector<F>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) phis[i][j] = phi_tilde(lamHL[i + 1], u[j], v);
  F total(0);
  do {
    F term(1);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const F& ua = u[sigma[a]];
        const F& ub = u[sigma[b]];
        term *= (ua - q * ub) / (ua - ub);
      }
    for (int i = 0; i < n; ++i) term *= phis[i][sigma[i]];
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return checked_div(total, qpoch(q, q, n - lamHL.length()), "FHL_symmetrized");
}

}  // namespace sqw
