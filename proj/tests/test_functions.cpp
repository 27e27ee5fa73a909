#include "doctest.h"

#include <random>

#include "sqw/functions.hpp"

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

TEST_CASE("empty shapes") {
  auto v = make_view(fixture_p0(16));
  Partition e;
  std::vector<Q> k{Q(1, 4), Q(1, 5)};
  CHECK(spin_F_s(e, e, k, v) == Q(1));
  CHECK(spin_F(e, e, k, v) == Q(1));
  CHECK(spin_F_star(e, e, k, v) == Q(1));
  CHECK(FHL(e, e, k, v) == Q(1));
  CHECK(c_S(e, v) == Q(1));
  CHECK(signed_power(e, v) == Q(1));
}

TEST_CASE("one variable") {
  auto v = make_view(fixture_p0(16));
  Q k(2, 9);
  for (const auto& lam : upto(5))
    for (const auto& mu : enum_interlacing_below(lam))
      CHECK(spin_F_s(lam, mu, std::vector<Q>{k}, v) == C_elem(k, v.mixed_shift(1), lam, mu));
  CHECK(spin_F_one_var(Partition({1}), Partition{}, k, v) == (v.s_xi(1) - k) / (v.xi(0) * (Q(1) - v.s2(1))));
  CHECK(spin_F(Partition({1}), Partition{}, std::vector<Q>{k}, v) == (v.s_xi(1) - k) / (v.xi(0) * (Q(1) - v.s2(1))));
  CHECK(spin_F_one_var(Partition({2}), Partition({1, 1}), k, v) == Q(0));
  CHECK(spin_F(Partition({1, 1}), Partition{}, std::vector<Q>{k}, v) == Q(0));
  std::mt19937_64 rng(9);
  auto parts = upto(6);
  for (int t = 0; t < 30; ++t) {
    const auto& lam = parts[rng() % parts.size()];
    const auto& mu = parts[rng() % parts.size()];
    Q x = random_rational(rng);
    CHECK(spin_F_one_var(lam, mu, x, v) == spin_F(lam, mu, std::vector<Q>{x}, v));
  }
}

TEST_CASE("operator chain against the lattice") {
  auto v = make_view(fixture_p0(16));
  std::vector<Q> k{Q(1, 4), Q(-2, 7)};
  for (const auto& lam : upto(6))
    for (const auto& mu : upto(3))
      if (contains(lam, mu)) CHECK(spin_F_s(lam, mu, k, v) == spin_F_s_lattice(lam, mu, k, v));
}

TEST_CASE("stability and star") {
  auto v = make_view(fixture_p0(16));
  std::vector<Q> k{Q(1, 4), Q(-2, 7)};
  for (const auto& lam : upto(6)) {
    auto k3 = k;
    k3.push_back(v.s_xi(3));
    CHECK(spin_F(lam, Partition{}, k3, v) == spin_F(lam, Partition{}, k, v));
    for (const auto& mu : upto(3)) {
      if (!contains(lam, mu)) continue;
      Q f = spin_F(lam, mu, k, v);
      CHECK(spin_F_star(lam, mu, k, v) == f * c_S(lam, v) / c_S(mu, v.mixed_shift(2)));
      CHECK(spin_F_s_star(lam, mu, k, v) == spin_F_s_star_operator(lam, mu, k, v));
    }
  }
}

TEST_CASE("Hall-Littlewood side") {
  auto v = make_view(fixture_p0(16));
  CHECK(phi_tilde(0, Q(1, 5), v) == Q(2, 3));
  CHECK(FHL_symmetrized(Partition{}, std::vector<Q>{Q(1, 5)}, v) == Q(1));
  std::vector<Q> u{Q(1, 5), Q(-1, 3), Q(2, 7)};
  for (const auto& lam : upto(5))
    for (int n = std::max(1, lam.length()); n <= 3; ++n) {
      std::vector<Q> un(u.begin(), u.begin() + n);
      CHECK(FHL_symmetrized(lam, un, v) == FHL(lam, Partition{}, un, v));
      CHECK(FHL(lam, Partition{}, un, v) == FHL_lattice(lam, Partition{}, un, v));
      auto u0 = un;
      u0.push_back(Q(0));
      CHECK(FHL(lam, Partition{}, u0, v) == FHL(lam, Partition{}, un, v));
    }
  // s_0 does not enter
  auto b = fixture_p0(16);
  b.rs[0] = Q(5, 13);
  auto w = make_view(b);
  for (const auto& lam : upto(4))
    for (const auto& mu : upto(2))
      CHECK(FHL(lam, mu, u, v) == FHL(lam, mu, u, w));
  CHECK_THROWS_AS(FHL_symmetrized(Partition({1}), std::vector<Q>{Q(1, 5), Q(1, 5)}, v), PreconditionError);
}

TEST_CASE("symbolic symmetry") {
  auto v = make_view(fixture_p0(16));
  std::vector<MultiPoly> k{MultiPoly::variable(2, 0), MultiPoly::variable(2, 1)};
  for (const auto& lam : upto(4)) {
    MultiPoly f = spin_F(lam, Partition{}, k, v);
    if (f.nvars() < 2) f = f.promote(2);
    CHECK(f.swap_vars(0, 1) == f);
  }
}
