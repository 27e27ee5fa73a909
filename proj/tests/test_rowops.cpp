#include "doctest.h"

#include <memory>

#include "sqw/functions.hpp"
#include "sqw/rowops.hpp"

using namespace sqw;
using Q = Rational;

namespace {
std::vector<Partition> upto(int n) {
  std::vector<Partition> out;
  for (auto& p : enum_box(n, n))
    if (p.size() <= n) out.push_back(p);
  return out;
}
}  // namespace

TEST_CASE("trivial elements") {
  auto v = make_view(fixture_p0(16));
  Q k(3, 7);
  Partition e;
  CHECK(T_elem(0, k, v, e, e) == Q(1));
  CHECK(C_elem(k, v, e, e) == Q(1));
  CHECK(Bstar_elem(k, v, e, e) == Q(1));
  CHECK(Btilde_elem(k, v, e, e) == Q(1));
}

TEST_CASE("vanishing rules") {
  auto v = make_view(fixture_p0(16));
  Q k(3, 7);
  for (const auto& lam : upto(6))
    for (const auto& mu : upto(6)) {
      if (!interlaces(lam, mu)) {
        CHECK(C_elem(k, v, lam, mu) == Q(0));
        for (int a = 0; a <= 3; ++a) CHECK(T_elem(a, k, v, lam, mu) == Q(0));
      }
      // <lam|B~*|mu> vanishes unless mu/lam is a vertical strip
      if (!vertical_strip(mu, lam)) CHECK(Btilde_elem(k, v, lam, mu) == Q(0));
    }
}

TEST_CASE("C of a single box") {
  auto v = make_view(fixture_p0(16));
  Q k(3, 7);
  Q expect = C_coeff(k, v, 1) * zw_row(1, Partition({1}), Partition{}, k, v);
  CHECK(C_elem(k, v, Partition({1}), Partition{}) == expect);
  // coefficient: (kappa s_0/xi_0)(1 - s_0 xi_0/kappa)/(1-q)
  Q hand = k * v.s(0) / v.xi(0) * (Q(1) - v.s(0) * v.xi(0) / k) / (Q(1) - v.q());
  CHECK(C_coeff(k, v, 1) == hand);
}

TEST_CASE("order of C in (kappa, q)") {
  // the order is joint in kappa and q: scale both by t and compare two small t exactly
  auto elem = [](const Partition& lam, const Partition& mu, const Q& t) {
    auto b = fixture_p0(16);
    b.q = b.q * t;
    auto v = make_view(b);
    int a = lam[1] - mu[1];
    return C_elem(Q(2, 7) * t, v, lam, mu) / t.pow(std::max(a - 1, 0));
  };
  const Q t1(1, 1000000), t2(1, 10000000);
  int checked = 0;
  for (const auto& lam : upto(8))
    for (const auto& mu : enum_interlacing_below(lam)) {
      if (lam[1] - mu[1] < 2) continue;
      Q h1 = elem(lam, mu, t1), h2 = elem(lam, mu, t2);
      // a lower order would grow the rescaled value tenfold
      CHECK((h2 - h1).abs() <= (h1.abs() + Q(1)) * Q(1, 1000));
      ++checked;
    }
  CHECK(checked > 20);
}

TEST_CASE("adjoint at P0") {
  auto v = make_view(fixture_p0(16));
  auto tv = v.mixed_shift(1);
  Q k(2, 11);
  for (const auto& lam : upto(8))
    for (const auto& mu : upto(8)) {
      Q lhs = Bstar_elem(k, v, mu, lam);
      Q rhs = squared_power(mu, tv) * c_S(mu, tv) / (squared_power(lam, v) * c_S(lam, v)) * C_elem(k, tv, lam, mu);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("sparse application") {
  auto v = make_view(fixture_p0(16));
  Box box{4, 4};
  State<Q> st{{Partition({2, 1}), Q(3)}, {Partition{}, Q(-1)}};
  SparseOp<Q> id{[](const Partition& p) { return std::vector<std::pair<Partition, Q>>{{p, Q(1)}}; }, 0, 0};
  CHECK(apply(id, st, box) == st);
  auto C = std::make_shared<const COp<Q, Q>>(Q(3, 7), v);
  auto out = apply(as_sparse(C, 4), State<Q>{{Partition{}, Q(1)}}, box);
  CHECK(out.size() == 5);
  for (const auto& [p, c] : out) CHECK(p.length() <= 1);
  // the row operator leaves the 1x4 box through (1,1)
  CHECK_THROWS_AS(apply(as_sparse(C, 4), State<Q>{{Partition({1}), Q(1)}}, Box{1, 4}), BoxOverflow);
  CHECK_NOTHROW(apply(as_sparse(C, 4), State<Q>{{Partition({1}), Q(1)}}, Box{1, 4}, Overflow::Drop));
}
