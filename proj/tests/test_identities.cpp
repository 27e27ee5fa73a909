#include "doctest.h"

#include "sqw/functions.hpp"
#include "sqw/identities.hpp"
#include "sqw/integral.hpp"

using namespace sqw;
using Q = Rational;

namespace {
SuiteConfig quick(int trials = 1) {
  SuiteConfig c;
  c.trials = trials;
  c.seed = 3;
  return c;
}
}  // namespace

TEST_CASE("registry") {
  CHECK(suites().size() == 22);
  CHECK(find_suite("dual-cauchy") != nullptr);
  CHECK(find_suite("nosuch") == nullptr);
}

TEST_CASE("dual Cauchy with one variable each") {
  // mu = nu = empty, n = m = 1: sum_lam F~*_{lam'}(u) F_lam(kappa) = (1 - u kappa)/(1 - u xi_1 s_1)
  auto v = make_view(fixture_p0(16));
  Q k(1, 4), u(1, 5);
  Q lhs(0);
  for (const auto& lam : enum_box(1, 8)) {
    // single-variable F~* lives on vertical strips; with m = 1 only lam = (0) and (1) contribute
    Q hl = FHL_star(conjugate(lam), Partition{}, std::vector<Q>{u}, v);
    lhs += hl * spin_F(lam, Partition{}, std::vector<Q>{k}, v);
  }
  CHECK(lhs == (Q(1) - u * k) / (Q(1) - u * v.s_xi(1)));
  auto c = quick(0);
  c.n = 1;
  c.m = 1;
  CHECK(verify_dual_cauchy(c).passed());
}

TEST_CASE("Cauchy identity at q^J") {
  auto c = quick(0);
  c.n = 2;
  c.J = {1, 2};
  auto rep = verify_cauchy_qJ(c);
  CHECK(rep.passed());
  c.J = {0, 1};
  CHECK_THROWS_AS(verify_cauchy_qJ(c), PreconditionError);
}

TEST_CASE("numeric Cauchy identity reports truncation failures") {
  auto c = quick(0);
  CHECK(verify_cauchy_numeric(c).passed());
  c.L_trunc = 2;
  CHECK_FALSE(verify_cauchy_numeric(c).passed());
}

TEST_CASE("orthogonality examples") {
  auto b = to_complex(fixture_p0(16));
  CHECK(std::abs(orthogonality_integral(Partition{}, Partition{}, 0, b) - 1.0) < 1e-12);
  CHECK(std::abs(orthogonality_integral(Partition({1}), Partition({1}), 1, b) - 1.0) < 1e-6);
  CHECK(std::abs(orthogonality_integral(Partition({1}), Partition({2}), 1, b)) < 1e-6);
  CHECK(std::abs(orthogonality_integral(Partition({2, 1}), Partition({2, 1}), 2, b, 64) - 1.0) < 1e-6);
  CHECK_THROWS_AS(orthogonality_integral(Partition{}, Partition({1, 1}), 1, b), PreconditionError);
}

TEST_CASE("small suites pass and their controls fail") {
  for (std::string name : {"stochastic", "fusion-weights", "one-var", "support", "hl-stability", "hl-symmetry",
                           "hl-formula", "bfusion", "normalization"}) {
    CAPTURE(name);
    auto c = quick(1);
    CHECK(find_suite(name)->run(c).passed());
    c.perturb = true;
    CHECK(find_suite(name)->run(c).failure_count > 0);
  }
}
