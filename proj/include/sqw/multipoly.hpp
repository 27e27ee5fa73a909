#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqw/scalar.hpp"

namespace sqw {

// Sparse polynomial over Q. Operands with different variable counts are
// promoted to the larger count by padding exponents with zeros.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : n_(nvars) {}
  MultiPoly(const Rational& c);  // NOLINT: constant with zero variables
  MultiPoly(int nvars, const Rational& c);

  static MultiPoly variable(int nvars, int index);

  int nvars() const { return n_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;
  int min_total_degree() const;  // -1 for the zero polynomial
  int total_degree() const;
  MultiPoly swap_vars(int i, int j) const;
  MultiPoly promote(int nvars) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator/=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }
  friend MultiPoly operator+(MultiPoly a, const Rational& c) { return a += MultiPoly(c); }
  friend MultiPoly operator-(MultiPoly a, const Rational& c) { return a -= MultiPoly(c); }
  friend MultiPoly operator+(const Rational& c, const MultiPoly& a) { return MultiPoly(c) + a; }
  friend MultiPoly operator-(const Rational& c, const MultiPoly& a) { return MultiPoly(c) - a; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void add_term(const Exponent& e, const Rational& c);

  int n_ = 0;
  std::map<Exponent, Rational> terms_;
};

inline bool is_zero_ring(const MultiPoly& p) { return p.is_zero(); }

template <class F>
F poly_eval(const MultiPoly& p, const std::vector<F>& point) {
  if (static_cast<int>(point.size()) != p.nvars())
    throw PreconditionError("poly_eval: point length " + std::to_string(point.size()) +
                            " != variable count " + std::to_string(p.nvars()));
  F total(0);
  for (const auto& [e, c] : p.terms()) {
    F m = from_rational<F>(c);
    for (int i = 0; i < p.nvars(); ++i)
      if (e[i]) m *= ipow(point[i], e[i]);
    total += m;
  }
  return total;
}

}  // namespace sqw
