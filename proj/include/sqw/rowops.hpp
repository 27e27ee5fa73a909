#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sqw/multipoly.hpp"
#include "sqw/params.hpp"
#include "sqw/partition.hpp"
#include "sqw/weights.hpp"

namespace sqw {

// (kappa s_0/xi_0)^a (kappa^{-1} s_0 xi_0;q)_a / (q;q)_a in the pole-free factored form
template <class R, class F>
R C_coeff(const R& kappa, const View<F>& v, int a) {
  const F& q = v.q();
  F r = v.s_over_xi(0), s2 = v.s2(0), qm(1);
  R out(F(1));
  for (int m = 0; m < a; ++m, qm *= q) out *= kappa * r - s2 * qm;
  return out * inv(qpoch(q, q, a), "C_coeff: (q;q)_a");
}

// <lam| T_a(kappa|v) |mu>
template <class R, class F>
R T_elem(int a, const R& kappa, const View<F>& v, const Partition& lam, const Partition& mu) {
  if (lam[1] != mu[1] + a) return R(F(0));
  int L = std::max(lam.length(), mu.length());
  R out(F(1));
  for (int c = 1; c <= L; ++c) {
    out *= W_row(kappa, v.s_over_xi(c), v.s2(c), v.q(), col_mult(mu, c), lam[c] - mu[c], col_mult(lam, c),
                 lam[c + 1] - mu[c + 1]);
    if (is_zero_ring(out)) break;
  }
  return out;
}

template <class R, class F>
R C_elem(const R& kappa, const View<F>& v, const Partition& lam, const Partition& mu) {
  int a = lam[1] - mu[1];
  if (a < 0) return R(F(0));
  return C_coeff(kappa, v, a) * T_elem(a, kappa, v, lam, mu);
}

// <mu| B*(kappa|v) |lam>
template <class F>
F Bstar_elem(const F& kappa, const View<F>& v, const Partition& mu, const Partition& lam) {
  const F& q = v.q();
  F out = ipow(checked_div(kappa, v.s_xi(0), "Bstar prefactor"), lam[1]);
  int L = std::max(lam.length(), mu.length());
  for (int c = 1; c <= L && !is_zero(out); ++c) {
    F t2 = checked_div(v.s_xi(c), kappa, "Bstar: kappa");
    out *= W_s_star(q, t2, v.s2(c), col_mult(lam, c), lam[c + 1] - mu[c + 1], col_mult(mu, c), lam[c] - mu[c]);
  }
  return out;
}

// <mu| T*_a(u|v) |lam>
template <class F>
F Tstar_elem(int a, const F& u, const View<F>& v, const Partition& mu, const Partition& lam) {
  if (lam[1] - mu[1] != a) return F(0);
  const F& q = v.q();
  int L = std::max(lam.length(), mu.length());
  F out(1);
  for (int c = 1; c <= L && !is_zero(out); ++c)
    out *= w_s_star(q, u * v.xi(c), v.s(c), col_mult(lam, c), lam[c + 1] - mu[c + 1], col_mult(mu, c), lam[c] - mu[c]);
  return out;
}

// <mu| B~*(u|v) |lam>
template <class F>
F Btilde_elem(const F& u, const View<F>& v, const Partition& mu, const Partition& lam) {
  int a = lam[1] - mu[1];
  if (a < 0 || a > 1) return F(0);
  F coef = a ? -u * checked_div(v.xi(0), v.s(0), "Btilde: s_0") : F(1);
  return coef * Tstar_elem(a, u, v, mu, lam);
}

// ---------------------------------------------------------------------------
// memoized evaluators: column factors depend on (c, bottom, left, right) only

inline std::uint64_t pack4(int a, int b, int c, int d) {
  return (static_cast<std::uint64_t>(a) << 48) | (static_cast<std::uint64_t>(b) << 32) |
         (static_cast<std::uint64_t>(c) << 16) | static_cast<std::uint64_t>(d);
}

template <class R, class F>
class COp {
 public:
  COp(R kappa, View<F> v) : kappa_(std::move(kappa)), v_(std::move(v)) {}

  const View<F>& view() const { return v_; }

  R elem(const Partition& lam, const Partition& mu) const {
    int a = lam[1] - mu[1];
    if (a < 0) return R(F(0));
    R out = coeff(a);
    int L = std::max(lam.length(), mu.length());
    for (int c = 1; c <= L; ++c) {
      int i = col_mult(mu, c), j = lam[c] - mu[c], l = lam[c + 1] - mu[c + 1];
      if (j < 0 || l < 0 || i < l) return R(F(0));
      out *= factor(c, i, j, l);
    }
    return out;
  }

  // C|mu> restricted to lambda_1 <= cap and an optional filter
  std::vector<std::pair<Partition, R>> column(const Partition& mu, int cap,
                                              const std::function<bool(const Partition&)>& keep = {}) const {
    std::vector<std::pair<Partition, R>> out;
    for (auto& lam : enum_interlacing_above(mu, cap)) {
      if (keep && !keep(lam)) continue;
      R e = elem(lam, mu);
      if (!is_zero_ring(e)) out.emplace_back(std::move(lam), std::move(e));
    }
    return out;
  }

 private:
  const R& coeff(int a) const {
    auto it = coeff_.find(a);
    if (it != coeff_.end()) return it->second;
    return coeff_.emplace(a, C_coeff(kappa_, v_, a)).first->second;
  }
  const R& factor(int c, int i, int j, int l) const {
    auto key = pack4(c, i, j, l);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    R w = W_row(kappa_, v_.s_over_xi(c), v_.s2(c), v_.q(), i, j, i + j - l, l);
    return memo_.emplace(key, std::move(w)).first->second;
  }

  R kappa_;
  View<F> v_;
  mutable std::unordered_map<int, R> coeff_;
  mutable std::unordered_map<std::uint64_t, R> memo_;
};

template <class F>
class BstarOp {
 public:
  BstarOp(F kappa, View<F> v) : kappa_(std::move(kappa)), v_(std::move(v)) {}

  // <mu| B* |lam>
  F elem(const Partition& mu, const Partition& lam) const {
    F out = ipow(checked_div(kappa_, v_.s_xi(0), "Bstar prefactor"), lam[1]);
    int L = std::max(lam.length(), mu.length());
    for (int c = 1; c <= L; ++c) {
      int i = col_mult(lam, c), l = lam[c + 1] - mu[c + 1], j = lam[c] - mu[c];
      if (j < 0 || l < 0 || i < j) return F(0);
      out *= factor(c, i, l, j);
    }
    return out;
  }

  std::vector<std::pair<Partition, F>> column(const Partition& lam) const {
    std::vector<std::pair<Partition, F>> out;
    for (auto& mu : enum_interlacing_below(lam)) {
      F e = elem(mu, lam);
      if (!is_zero(e)) out.emplace_back(std::move(mu), std::move(e));
    }
    return out;
  }

 private:
  const F& factor(int c, int i, int l, int j) const {
    auto key = pack4(c, i, l, j);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    F t2 = checked_div(v_.s_xi(c), kappa_, "Bstar: kappa");
    F w = W_s_star(v_.q(), t2, v_.s2(c), i, l, i + l - j, j);
    return memo_.emplace(key, std::move(w)).first->second;
  }

  F kappa_;
  View<F> v_;
  mutable std::unordered_map<std::uint64_t, F> memo_;
};

template <class F>
class BtildeOp {
 public:
  BtildeOp(F u, View<F> v) : u_(std::move(u)), v_(std::move(v)) {}

  // <mu| B~* |lam>
  F elem(const Partition& mu, const Partition& lam) const {
    int a = lam[1] - mu[1];
    if (a < 0 || a > 1) return F(0);
    F out = a ? -u_ * checked_div(v_.xi(0), v_.s(0), "Btilde: s_0") : F(1);
    int L = std::max(lam.length(), mu.length());
    for (int c = 1; c <= L; ++c) {
      int i = col_mult(lam, c), l = lam[c + 1] - mu[c + 1], j = lam[c] - mu[c];
      if (j < 0 || j > 1 || l < 0 || l > 1) return F(0);
      out *= factor(c, i, l, j);
    }
    return out;
  }

  std::vector<std::pair<Partition, F>> column(const Partition& lam) const {
    std::vector<std::pair<Partition, F>> out;
    for (auto& mu : enum_vertical_strip_below(lam)) {
      F e = elem(mu, lam);
      if (!is_zero(e)) out.emplace_back(std::move(mu), std::move(e));
    }
    return out;
  }

 private:
  const F& factor(int c, int i, int l, int j) const {
    auto key = pack4(c, i, l, j);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    F w = w_s_star(v_.q(), u_ * v_.xi(c), v_.s(c), i, l, i + l - j, j);
    return memo_.emplace(key, std::move(w)).first->second;
  }

  F u_;
  View<F> v_;
  mutable std::unordered_map<std::uint64_t, F> memo_;
};

// ---------------------------------------------------------------------------
// sparse operators on the partition basis

template <class R>
using State = std::map<Partition, R>;

struct Box {
  int rows = 0, cols = 0;
  bool contains(const Partition& p) const { return fits_box(p, rows, cols); }
};

enum class Overflow { Throw, Drop };

template <class R>
struct SparseOp {
  std::function<std::vector<std::pair<Partition, R>>(const Partition&)> column;
  int grow_rows = 0;    // A: l(out) <= l(in) + A
  int shrink_cols = 0;  // B: out_1 >= in_1 - B
};

template <class R>
State<R> apply(const SparseOp<R>& op, const State<R>& state, const Box& box, Overflow policy = Overflow::Throw) {
  State<R> out;
  for (const auto& [p, c] : state) {
    if (!box.contains(p)) throw BoxOverflow("input " + p.str() + " outside box");
    for (const auto& [lam, m] : op.column(p)) {
      if (lam.length() > p.length() + op.grow_rows || lam[1] < p[1] - op.shrink_cols)
        throw PreconditionError("operator emitted " + lam.str() + " outside its declared support");
      if (!box.contains(lam)) {
        if (policy == Overflow::Throw && !is_zero_ring(m)) throw BoxOverflow("output " + lam.str());
        continue;
      }
      auto it = out.find(lam);
      if (it == out.end()) out.emplace(lam, c * m);
      else it->second += c * m;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (is_zero_ring(it->second)) it = out.erase(it);
    else ++it;
  }
  return out;
}

template <class R, class F>
SparseOp<R> as_sparse(std::shared_ptr<const COp<R, F>> op, int cap) {
  return {[op, cap](const Partition& mu) { return op->column(mu, cap); }, 1, 0};
}

template <class F>
SparseOp<F> as_sparse(std::shared_ptr<const BstarOp<F>> op) {
  return {[op](const Partition& lam) { return op->column(lam); }, 0, 1 << 20};
}

template <class F>
SparseOp<F> as_sparse(std::shared_ptr<const BtildeOp<F>> op) {
  return {[op](const Partition& lam) { return op->column(lam); }, 0, 1};
}

inline Partition hat_extend(const Partition& lam, int N) {
  if (N < lam[1]) throw PreconditionError("hat_extend: N < lambda_1");
  std::vector<int> parts{N};
  parts.insert(parts.end(), lam.parts().begin(), lam.parts().end());
  return Partition(std::move(parts));
}

template <class F>
View<F> hat_view(const View<F>& v) {
  return v.hat(1);
}

}  // namespace sqw
