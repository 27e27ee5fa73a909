#include "doctest.h"

#include <cmath>

#include "sqw/functions.hpp"
#include "sqw/integral.hpp"

using namespace sqw;
using Q = Rational;

TEST_CASE("contour at P0") {
  auto b = to_complex(fixture_p0(16));
  auto c = build_contour(b);
  // s_1/xi_1 = (4/3)^2 and 1/(s_1 xi_1) = 12^2 are the binding points
  CHECK(std::abs(c.inner - 16.0 / 9.0) < 1e-12);
  CHECK(std::abs(c.outer - 144.0) < 1e-9);
  CHECK(std::abs(c.radius - 16.0) < 1e-9);
  CHECK(c.inner < c.radius);
  CHECK(c.radius < c.outer);
  CHECK(std::abs(b.q) * c.radius < c.radius);
}

TEST_CASE("degenerate parameters") {
  auto p = fixture_p0(16);
  p.rs[1] = Q(1);
  CHECK_THROWS_AS(build_contour(to_complex(p)), PreconditionError);
  // s_3/xi_3 = 250000 lies beyond 1/(s_1 xi_1) = 144
  auto wide = fixture_p0(16);
  wide.rs[3] = Q(1, 2);
  wide.rx[3] = Q(1, 1000);
  CHECK_THROWS_AS(build_contour(to_complex(wide)), PreconditionError);
}

TEST_CASE("integral representation") {
  auto pq = fixture_p0(16);
  auto b = to_complex(pq);
  auto v = make_view(pq);
  CHECK(integral_F(Partition{}, {Complex(0.25)}, b) == Complex(1.0));
  Q k(1, 4);
  double closed = ((v.s_xi(1) - k) / (v.xi(0) * (Q(1) - v.s2(1)))).to_double();
  Complex one = integral_F(Partition({1}), {Complex(0.25)}, b);
  CHECK(std::abs(one - closed) < 1e-8);
  CHECK(std::abs(one.imag()) < 1e-9);
  std::vector<Q> kq{Q(1, 4), Q(1, 5)};
  double exact = spin_F(Partition({2, 1}), Partition{}, kq, v).to_double();
  Complex two = integral_F(Partition({2, 1}), {Complex(0.25), Complex(0.2)}, b);
  CHECK(std::abs(two - exact) < 1e-6);
  Complex swapped = integral_F(Partition({2, 1}), {Complex(0.2), Complex(0.25)}, b);
  CHECK(std::abs(two - swapped) < 1e-10);
  Complex coarse = integral_F(Partition({2, 1}), {Complex(0.25), Complex(0.2)}, b, 128);
  CHECK(std::abs(two - coarse) < 1e-9);
}
