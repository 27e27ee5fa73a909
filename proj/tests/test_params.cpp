#include "doctest.h"

#include <random>

#include "sqw/errors.hpp"
#include "sqw/params.hpp"
#include "sqw/rowops.hpp"

using namespace sqw;
using Q = Rational;

TEST_CASE("fixture P0") {
  auto b = fixture_p0(16);
  CHECK(b.q == Q(1, 3));
  CHECK(b.horizon == 16);
  CHECK(b.rs[0] == Q(1, 2));
  CHECK(b.rx[0] == Q(1, 3));
  CHECK(b.rs[16] == Q(1, 18));
  auto v = make_view(b);
  for (int i = 0; i <= 16; ++i) {
    CHECK(v.s(i) == b.rs[i] * b.rs[i]);
    CHECK(v.xi(i) == b.rx[i] * b.rx[i]);
  }
  CHECK_THROWS_AS(v.s(17), HorizonError);
  CHECK_THROWS_AS(v.mixed_shift(2).xi(15), HorizonError);
  CHECK_THROWS_AS(v.plain_shift(1).s(16), HorizonError);
}

TEST_CASE("mixed shift relations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto b = random_base(rng, 12);
    auto s = [&](int j) { return b.rs[j] * b.rs[j]; };
    auto x = [&](int j) { return b.rx[j] * b.rx[j]; };
    auto v = make_view(b);
    for (int o = 0; o <= 2; ++o)
      for (int k = 0; k <= 3; ++k) {
        auto w = v.plain_shift(o).mixed_shift(k);
        for (int i = 0; i + o + k <= 12; ++i) {
          int j = i + o;
          CHECK(w.s(i) * w.xi(i) == s(j + k) * x(j + k));
          CHECK(w.s(i) / w.xi(i) == s(j) / x(j));
          // squared accessor against the defining radical
          CHECK(w.s(i) * w.s(i) == s(j + k) * x(j + k) * s(j) / x(j));
          CHECK(w.xi(i) * w.xi(i) == s(j + k) * x(j + k) * x(j) / s(j));
        }
      }
  }
}

TEST_CASE("shift composition") {
  auto v = make_view(fixture_p0(16));
  for (int i = 0; i <= 10; ++i) {
    CHECK(v.mixed_shift(0).s(i) == v.s(i));
    CHECK(v.plain_shift(0).xi(i) == v.xi(i));
    CHECK(v.mixed_shift(2).mixed_shift(3).s(i) == v.mixed_shift(5).s(i));
    CHECK(v.mixed_shift(2).mixed_shift(3).xi(i) == v.mixed_shift(5).xi(i));
    CHECK(v.plain_shift(2).plain_shift(1).s(i) == v.plain_shift(3).s(i));
    CHECK(v.plain_shift(4).s(i) == v.s(i + 4));
  }
  auto [a, b] = mixed_shift_pair(v, v, 0);
  CHECK(a.s(3) == v.s(3));
  CHECK(b.xi(3) == v.xi(3));
  auto other = make_view(fixture_p0(16));
  CHECK_THROWS_AS(mixed_shift_pair(v, other, 1), PreconditionError);
}

TEST_CASE("degenerate specializations") {
  std::mt19937_64 rng(5);
  auto b = random_base(rng, 10);
  auto vS = make_view(make_xi_equals_s(b));
  auto vB = make_view(make_xi_equals_sbar(b));
  auto plain = make_view(b);
  for (int k = 0; k <= 3; ++k)
    for (int i = 0; i + k <= 10; ++i) {
      // xi = s: mixed shift is the plain shift
      CHECK(vS.mixed_shift(k).s(i) == vS.plain_shift(k).s(i));
      CHECK(vS.mixed_shift(k).xi(i) == vS.plain_shift(k).xi(i));
      // xi = 1/s: both sequences are fixed
      CHECK(vB.mixed_shift(k).xi(i) == inv(plain.s(i)));
      CHECK(vB.mixed_shift(k).s(i) == plain.s(i));
    }
  auto bad = b;
  bad.rs[2] = Q(0);
  CHECK_THROWS_AS(make_xi_equals_sbar(bad), PoleError);
}

TEST_CASE("hat view") {
  auto v = make_view(fixture_p0(16));
  auto h = hat_view(v);
  CHECK(h.s(0) == Q(1));
  CHECK(h.xi(0) == Q(1));
  for (int i = 1; i <= 10; ++i) {
    CHECK(h.s(i) == v.s(i - 1));
    CHECK(h.xi(i) == v.xi(i - 1));
  }
  CHECK(hat_extend(Partition{}, 3) == Partition({3}));
  CHECK(hat_extend(Partition({2, 1}), 2) == Partition({2, 2, 1}));
  CHECK_THROWS_AS(hat_extend(Partition({4}), 3), PreconditionError);
}

TEST_CASE("parameter json") {
  auto b = fixture_p0(16);
  auto back = params_from_json_text(params_to_json_text(b));
  CHECK(back.q == b.q);
  CHECK(back.rs == b.rs);
  CHECK(back.rx == b.rx);
  CHECK(back.horizon == b.horizon);
  auto c = params_from_json_text(R"({"q":"1/3","sqrt_s":["1/2","1/3"],"sqrt_xi":["1/5","1/7"],"horizon":1})");
  CHECK(make_view(c).s(1) == Q(1, 9));
  CHECK_THROWS(params_from_json_text(R"({"q":"1/3","sqrt_s":["1/2"],"sqrt_xi":["1/5"],"horizon":3})"));
  CHECK_THROWS(params_from_json_text("{not json"));
}
