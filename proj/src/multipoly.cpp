#include "sqw/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sqw {

MultiPoly::MultiPoly(const Rational& c) : n_(0) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

MultiPoly::MultiPoly(int nvars, const Rational& c) : n_(nvars) {
  if (!c.is_zero()) terms_.emplace(Exponent(nvars, 0), c);
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw PreconditionError("variable index out of range");
  MultiPoly p(nvars);
  Exponent e(nvars, 0);
  e[index] = 1;
  p.terms_.emplace(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::promote(int nvars) const {
  if (nvars < n_) throw PreconditionError("cannot demote polynomial");
  if (nvars == n_) return *this;
  MultiPoly p(nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(nvars, 0);
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::min_total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

MultiPoly MultiPoly::swap_vars(int i, int j) const {
  MultiPoly p(n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f.at(i), f.at(j));
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.n_ > n_) *this = promote(o.n_);
  const MultiPoly& b = o.n_ < n_ ? o.promote(n_) : o;
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a0, const MultiPoly& b0) {
  int n = std::max(a0.n_, b0.n_);
  MultiPoly a = a0.promote(n), b = b0.promote(n);
  MultiPoly r(n);
  MultiPoly::Exponent e(n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) { return *this *= c.inverse(); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  int n = std::max(a.n_, b.n_);
  return a.promote(n).terms_ == b.promote(n).terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (constant) os << c;
    else os << "(" << c << ")";
    for (int i = 0; i < n_; ++i)
      if (e[i]) os << "*k" << (i + 1) << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return os.str();
}

}  // namespace sqw
