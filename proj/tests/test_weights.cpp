#include "doctest.h"

#include <random>

#include "sqw/params.hpp"
#include "sqw/weights.hpp"

using namespace sqw;
using Q = Rational;

namespace {
const Q q(1, 3);
const Q u(2, 7), s(1, 2), t(3, 5);
}  // namespace

TEST_CASE("w_s table") {
  for (int g = 0; g <= 5; ++g)
    CHECK(w_s(q, u, s, g, 0, g, 0) == (Q(1) - s * u * q.pow(g)) / (Q(1) - s * u));
  CHECK(w_s(q, u, s, 2, 1, 2, 0) == Q(0));
  CHECK(w_s(q, u, s, 2, 0, 3, 0) == Q(0));
  CHECK_THROWS_AS(w_s(q, Q(2), Q(1, 2), 0, 0, 0, 0), PoleError);
}

TEST_CASE("dual weights") {
  for (int g = 0; g <= 5; ++g)
    CHECK(w_s_star(q, u, s, g, 0, g, 0) == (Q(1) - s * u * q.pow(g)) / (Q(1) - s * u));
  for (int i = 0; i <= 5; ++i)
    for (int k = 0; k <= 5; ++k)
      for (int l = 0; l <= 1; ++l)
        for (int j = 0; j <= 1; ++j) {
          Q lhs = w_s_star(q, u, s, i, l, k, j);
          Q resc = (s * s).pow(-l) * qpoch(q, q, i) / qpoch(s * s, q, i) * qpoch(s * s, q, k) / qpoch(q, q, k);
          CHECK(lhs == resc * w_s(q, u, s, k, j, i, l));
          // reversed direction with 1/u
          Q dir = (s - u) / (s * (Q(1) - u * s));
          CHECK(lhs == dir * w_s(q, u.inverse(), s, i, 1 - j, k, 1 - l));
        }
}

TEST_CASE("R matrix") {
  Q z(4, 9);
  CHECK(R_mat(q, z, 0, 0, 0, 0) == Q(1) - q * z);
  CHECK(R_mat(q, z, 1, 1, 1, 1) == Q(1) - q * z);
  CHECK(R_mat(q, z, 1, 0, 0, 1) == Q(1) - q);
  CHECK(R_mat(q, z, 0, 0, 1, 1) == Q(0));
  CHECK(R_star(q, z, 0, 1, 0, 1) == Q(1) - z.inverse());
}

TEST_CASE("q-Hahn weights") {
  Q t2 = t * t, s2 = s * s;
  CHECK(W_s(q, t2, s2, 1, 0, 0, 2) == Q(0));
  CHECK(W_s(q, t2, s2, 0, 0, 0, 0) == Q(1));
  CHECK(W_s_star(q, t2, s2, 1, 2, 0, 3) == Q(0));
  CHECK(W_s_star(q, t2, s2, 0, 0, 0, 0) == Q(1));
  // dual q-Hahn weights as a rescaling of W_s
  for (int i = 0; i <= 5; ++i)
    for (int l = 0; l <= 5; ++l)
      for (int k = 0; k <= 5; ++k)
        for (int j = 0; j <= 5; ++j) {
          Q resc = t2.pow(k) / s2.pow(l) * qpoch(t2, q, j) / qpoch(q, q, j) * qpoch(q, q, l) / qpoch(t2, q, l) *
                   qpoch(q, q, i) / qpoch(s2, q, i) * qpoch(s2, q, k) / qpoch(q, q, k);
          CHECK(W_s_star(q, t2, s2, i, l, k, j) == resc * W_s(q, t2, s2, k, j, i, l));
        }
}

TEST_CASE("fused weights") {
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 1; ++j)
      for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 1; ++l) CHECK(W_fused(q, 1, u, s, i, j, k, l) == w_s(q, u, s, i, j, k, l));
  // q^J -> 1/t^2 at u = s gives W_s
  Q t2 = t * t;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l)
          CHECK(W_fused_Q(q, t2.inverse(), s, s, i, j, k, l) == W_s(q, t2, s * s, i, j, k, l));
}

TEST_CASE("stochastic sums") {
  auto v = make_view(fixture_p0(16));
  const Q& qq = v.q();
  Q uu(1, 4), ss = v.s(1);
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 1; ++j) {
      Q sum(0);
      for (int l = 0; l <= 1; ++l) sum += w_s(qq, uu, ss, i, j, i + j - l, l);
      CHECK(sum == Q(1));
    }
  Q t2 = v.s_xi(1) * Q(3), s2 = v.s2(1);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) {
      Q sum(0);
      for (int l = 0; l <= i + j; ++l) sum += W_s(qq, t2, s2, i, j, i + j - l, l);
      CHECK(sum == Q(1));
    }
  for (int J = 1; J <= 3; ++J)
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= std::min(J, 4); ++j) {
        Q sum(0);
        for (int l = 0; l <= J; ++l) sum += W_fused(qq, J, uu, ss, i, j, i + j - l, l);
        CHECK(sum == Q(1));
      }
}

TEST_CASE("conservation") {
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j)
      for (int k = 0; k <= 6; ++k)
        for (int l = 0; l <= 6; ++l) {
          if (i + j == k + l) continue;
          CHECK(w_s(q, u, s, i, j, k, l) == Q(0));
          CHECK(W_s(q, t * t, s * s, i, j, k, l) == Q(0));
          CHECK(W_fused(q, 6, u, s, i, j, k, l) == Q(0));
          CHECK(R_mat(q, u, i, j, k, l) == Q(0));
        }
  for (int i = 0; i <= 6; ++i)
    for (int l = 0; l <= 6; ++l)
      for (int k = 0; k <= 6; ++k)
        for (int j = 0; j <= 6; ++j)
          if (i + l != k + j) {
            CHECK(w_s_star(q, u, s, i, l, k, j) == Q(0));
            CHECK(W_s_star(q, t * t, s * s, i, l, k, j) == Q(0));
          }
}

TEST_CASE("continued dual weights") {
  for (int i = 0; i <= 4; ++i)
    for (int l = 0; l <= 1; ++l)
      for (int j = 0; j <= 1; ++j) {
        int k = i + l - j;
        if (k < 0) continue;
        CHECK(w_tilde_star(q, u, s, q.pow(i), l, j) == w_s_star(q, u, s, i, l, k, j));
        Q eta(5, 3);
        Q alpha = eta.pow(2 * (1 - j)) * q.pow(i);
        Q lhs = w_tilde_star(q, u, s, alpha, l, j) * (Q(1) - s * u) / (Q(1) - eta * eta * s * u);
        CHECK(lhs == w_s_star(q, eta * u, eta * s, i, l, k, j));
      }
  CHECK(w_tilde_star(q, u, s, Q(7), 0, 0) == (Q(1) - s * u * Q(7)) / (Q(1) - s * u));
}

TEST_CASE("W tilde and W hat") {
  Q t2 = t * t, s2 = s * s;
  CHECK(W_tilde(q, t2, s2, 3, 2, 2) == Q(0));
  CHECK(W_tilde(q, t2, s2, 0, 0, 0) == Q(1));
  for (int i = 0; i <= 4; ++i)
    for (int l = 0; l <= i; ++l)
      for (int j = 0; j <= 3; ++j) CHECK(W_tilde(q, t2, s2, i, i - l, l) == W_s(q, t2, s2, i, j, i + j - l, l));
  CHECK(W_hat(q, t2, s2, 0, 0, 0, 0) == Q(1));
  CHECK(W_hat(q, t2, s2, 2, 1, 1, 3) == Q(0));
  // (N, Delta) = (2, 1) at P0, hand-collapsed display
  auto v = make_view(fixture_p0(16));
  Q qq = v.q(), T2 = v.s_xi(1) * Q(2), S2 = v.s2(1), r = S2 / T2;
  Q oracle = r * r * (Q(1) - qq.pow(3)) * (Q(1) - r) * (Q(1) - T2) * (Q(1) - T2 * qq) /
             ((Q(1) - qq) * (Q(1) - S2) * (Q(1) - S2 * qq) * (Q(1) - S2 * qq * qq));
  CHECK(W_hat(qq, T2, S2, 2, 1, 0, 1) == oracle);
  for (int N = 0; N <= 4; ++N)
    for (int d = 0; d <= 3; ++d)
      for (int j = 0; j <= 2; ++j) CHECK(W_hat(q, t2, s2, N, d, j, j + d) == W_s(q, t2, s2, N + d, j, j + d, N));
}

TEST_CASE("colored weights") {
  Q x(2, 7);
  for (int i = 0; i <= 4; ++i)
    for (int a = 0; a <= 1; ++a)
      for (int k = 0; k <= 4; ++k)
        for (int b = 0; b <= 1; ++b) CHECK(w_col(q, x, s, {i}, a, {k}, b) == w_s(q, x, s, i, a, k, b));
  Q t2 = t * t, s2 = s * s;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l) CHECK(W_col(q, t2, s2, {i}, {j}, {k}, {l}) == W_s(q, t2, s2, i, j, k, l));
  Composition I{2, 1};
  CHECK(w_col(q, x, s, I, 0, I, 0) == (Q(1) - s * x * q.pow(3)) / (Q(1) - s * x));
  // n = 2 stochasticity
  auto v = make_view(fixture_p0(16));
  Q qq = v.q(), ss = v.s(2), xx(1, 5);
  for (int i1 = 0; i1 <= 4; ++i1)
    for (int i2 = 0; i1 + i2 <= 4; ++i2)
      for (int a = 0; a <= 2; ++a) {
        Composition In{i1, i2};
        Q sum(0);
        for (int b = 0; b <= 2; ++b) {
          Composition K = In;
          if (a) ++K[a - 1];
          if (b) --K[b - 1];
          if (K[0] < 0 || K[1] < 0) continue;
          sum += w_col(qq, xx, ss, In, a, K, b);
        }
        CHECK(sum == Q(1));
      }
}
