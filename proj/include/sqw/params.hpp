#pragma once

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sqw/scalar.hpp"

namespace sqw {

// q and the square-root generators rs[i] = sqrt(s_i), rx[i] = sqrt(xi_i).
template <class F>
struct ParameterBase {
  F q;
  std::vector<F> rs, rx;
  int horizon = 0;

  void validate() const {
    if (rs.size() != rx.size()) throw PreconditionError("sqrt_s and sqrt_xi differ in length");
    if (horizon < 0 || horizon >= static_cast<int>(rs.size()))
      throw PreconditionError("horizon " + std::to_string(horizon) + " needs " + std::to_string(horizon + 1) +
                              " generators, have " + std::to_string(rs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (is_zero(rs[i]) || is_zero(rx[i])) throw PreconditionError("zero generator at index " + std::to_string(i));
  }
};

template <class F>
using BasePtr = std::shared_ptr<const ParameterBase<F>>;

// Cheap handle on a base: plain offset o, mixed shift k, hat depth h.
// Hat depth h prepends h copies of the generator pair (1,1).
template <class F>
class View {
 public:
  View() = default;
  explicit View(BasePtr<F> base, int o = 0, int k = 0, int h = 0) : base_(std::move(base)), o_(o), k_(k), h_(h) {}

  const ParameterBase<F>& base() const { return *base_; }
  const BasePtr<F>& base_ptr() const { return base_; }
  int offset() const { return o_; }
  int shift() const { return k_; }
  int hat_depth() const { return h_; }
  const F& q() const { return base_->q; }

  F s(int i) const {
    if (i < h_) return F(1);
    int j = index(i - h_);
    return rs(j + k_) * rx(j + k_) * checked_div(rs(j), rx(j), "s accessor");
  }
  F xi(int i) const {
    if (i < h_) return F(1);
    int j = index(i - h_);
    return rx(j + k_) * rs(j + k_) * checked_div(rx(j), rs(j), "xi accessor");
  }
  F s2(int i) const {
    F v = s(i);
    return v * v;
  }
  F s_xi(int i) const {
    F r = sqrt_s_xi(i);
    return r * r;
  }
  // a fixed square root of s_i xi_i
  F sqrt_s_xi(int i) const {
    if (i < h_) return F(1);
    int j = index(i - h_) + k_;
    return rs(j) * rx(j);
  }
  F s_over_xi(int i) const {
    if (i < h_) return F(1);
    int j = index(i - h_);
    F r = checked_div(rs(j), rx(j), "s/xi");
    return r * r;
  }

  View plain_shift(int n) const {
    if (h_) throw PreconditionError("plain_shift on a hatted view");
    if (n < 0) throw PreconditionError("negative plain shift");
    return View(base_, o_ + n, k_, 0);
  }
  View mixed_shift(int n) const {
    if (h_) throw PreconditionError("mixed_shift on a hatted view");
    if (n < 0) throw PreconditionError("negative mixed shift");
    return View(base_, o_, k_ + n, 0);
  }
  View hat(int depth = 1) const { return View(base_, o_, k_, h_ + depth); }

  // largest accessor index that stays within the horizon
  int max_index() const { return base_->horizon - o_ - k_ + h_; }

 private:
  int index(int i) const {
    if (i < 0) throw PreconditionError("negative parameter index");
    int j = i + o_;
    if (j + k_ > base_->horizon)
      throw HorizonError("index " + std::to_string(j + k_) + " > horizon " + std::to_string(base_->horizon));
    return j;
  }
  const F& rs(int j) const { return base_->rs[j]; }
  const F& rx(int j) const { return base_->rx[j]; }

  BasePtr<F> base_;
  int o_ = 0, k_ = 0, h_ = 0;
};

template <class F>
std::pair<View<F>, View<F>> mixed_shift_pair(const View<F>& a, const View<F>& b, int k) {
  if (a.base_ptr() != b.base_ptr()) throw PreconditionError("mixed_shift_pair: views on different bases");
  return {a.mixed_shift(k), b.mixed_shift(k)};
}

template <class F>
View<F> make_view(const ParameterBase<F>& b) {
  b.validate();
  return View<F>(std::make_shared<const ParameterBase<F>>(b));
}

template <class F>
ParameterBase<F> make_xi_equals_s(const ParameterBase<F>& b) {
  ParameterBase<F> r = b;
  r.rx = r.rs;
  return r;
}

template <class F>
ParameterBase<F> make_xi_equals_sbar(const ParameterBase<F>& b) {
  ParameterBase<F> r = b;
  for (std::size_t i = 0; i < r.rx.size(); ++i) r.rx[i] = inv(r.rs[i], "make_xi_equals_sbar");
  return r;
}

// xi_i -> 1/xi_i with S unchanged
template <class F>
ParameterBase<F> invert_xi(const ParameterBase<F>& b) {
  ParameterBase<F> r = b;
  for (auto& x : r.rx) x = inv(x, "invert_xi");
  return r;
}

ParameterBase<Complex> to_complex(const ParameterBase<Rational>& b);

ParameterBase<Rational> fixture_p0(int horizon = 16);

ParameterBase<Rational> load_params_json(const std::string& path);
ParameterBase<Rational> params_from_json_text(const std::string& text);
std::string params_to_json_text(const ParameterBase<Rational>& b);

// nonzero rational with |numerator|, denominator <= bound
Rational random_rational(std::mt19937_64& rng, int bound = 97, bool allow_negative = true);

// random generators; q avoids roots of unity (|q| != 1)
ParameterBase<Rational> random_base(std::mt19937_64& rng, int horizon, int bound = 97);

}  // namespace sqw
