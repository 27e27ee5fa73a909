#include "doctest.h"

#include <random>

#include "sqw/lattice.hpp"
#include "sqw/rowops.hpp"

using namespace sqw;
using Q = Rational;

namespace {
std::vector<Partition> small_parts(int n) {
  std::vector<Partition> out;
  for (auto& p : enum_box(n, n))
    if (p.size() <= n) out.push_back(p);
  return out;
}

RowSpec<Q> spec(RowFamily f, Q x, const View<Q>& v, int left, Partition top, Partition bottom) {
  RowSpec<Q> r;
  r.family = f;
  r.spectral = x;
  r.view = v;
  r.left = left;
  r.top = std::move(top);
  r.bottom = std::move(bottom);
  return r;
}
}  // namespace

TEST_CASE("one-row partition functions") {
  auto v = make_view(fixture_p0(16));
  Q kappa(1, 2);
  CHECK(zw_row(0, Partition{}, Partition{}, kappa, v) == Q(1));
  CHECK(zw_row(1, Partition({2, 1}), Partition({2}), kappa, v) == Q(0));
  CHECK(zw_row(0, Partition({2, 1}), Partition({1}), kappa, v) == Q(0));
  Q z = zw_row(1, Partition({2, 1}), Partition({1}), kappa, v);
  CHECK(z == brute_force_row(spec(RowFamily::W, kappa, v, 1, Partition({2, 1}), Partition({1})), 6));
  CHECK_FALSE(z == Q(0));
}

TEST_CASE("rows against the transfer-matrix oracle") {
  auto v = make_view(fixture_p0(16));
  auto parts = small_parts(6);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  int nonzero = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Partition& lam = parts[pick(rng)];
    auto below = enum_interlacing_below(lam);
    Partition mu = trial % 5 == 4 ? parts[pick(rng)] : below[rng() % below.size()];
    Q kappa = random_rational(rng), u = random_rational(rng);
    int a = lam[1] - mu[1];
    if (a < 0) continue;
    Q z = zw_row(a, lam, mu, kappa, v);
    nonzero += !z.is_zero();
    CHECK(z == brute_force_row(spec(RowFamily::W, kappa, v, a, lam, mu), 10));
    CHECK(T_elem(a, kappa, v, lam, mu) == z);
    if (a <= 1) {
      CHECK(zw_row_thin(a, lam, mu, u, v) == brute_force_row(spec(RowFamily::w, u, v, a, lam, mu), 10));
      CHECK(Tstar_elem(a, u, v, mu, lam) == brute_force_row(spec(RowFamily::wstar, u, v, a, mu, lam), 10));
    }
    Q pre = (kappa / v.s_xi(0)).pow(lam[1]);
    CHECK(Bstar_elem(kappa, v, mu, lam) == pre * brute_force_row(spec(RowFamily::Wstar, kappa, v, a, mu, lam), 10));
  }
  CHECK(nonzero > 10);
}

TEST_CASE("grids") {
  auto v = make_view(fixture_p0(16));
  Q k1(1, 4), k2(2, 9), u1(1, 5), u2(3, 11);
  for (const auto& lam : small_parts(5))
    for (const auto& mu : enum_interlacing_below(lam)) {
      int a = lam[1] - mu[1];
      CHECK(ZW_grid({a}, lam, mu, {k1}, v) == zw_row(a, lam, mu, k1, v.mixed_shift(1)));
    }
  // conservation: total label must equal lam_1 - mu_1
  CHECK(ZW_grid({1, 1}, Partition({1}), Partition{}, {k1, k2}, v) == Q(0));
  // u_n = 0 removes the last row
  for (const auto& lam : small_parts(5))
    for (const auto& mu : small_parts(3)) {
      if (!contains(lam, mu)) continue;
      for (int a1 = 0; a1 <= 1; ++a1)
        for (int a2 = 0; a2 <= 1; ++a2)
          CHECK(Zw_grid({a1, a2, 0}, lam, mu, {u1, u2, Q(0)}, v) == Zw_grid({a1, a2}, lam, mu, {u1, u2}, v));
    }
}

TEST_CASE("column stacks") {
  Q q(1, 3), u(2, 7), s(1, 2);
  for (int J = 1; J <= 3; ++J)
    for (int mask = 0; mask < (1 << J); ++mask) {
      std::vector<int> b(J);
      int l = 0;
      for (int r = 0; r < J; ++r) l += b[r] = (mask >> r) & 1;
      for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= J; ++j) {
          int k = i + j - l;
          if (k < 0) continue;
          CHECK(stack_columns_fused(q, J, u, s, i, j, k, b) == W_fused(q, J, u, s, i, j, k, l));
          // dual stack: signed, rescaled W_s_star at t^2 = q^{-J}
          Q sign = (l - j) % 2 ? Q(-1) : Q(1);
          Q rhs = sign * q.pow(i * J) * W_s_star(q, q.pow(-J), s * s, i, l, i + l - j, j);
          CHECK(stack_columns_dual_fused(q, J, s, i, j, i + l - j, b) == rhs);
        }
    }
}
