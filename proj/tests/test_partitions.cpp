#include "doctest.h"

#include <algorithm>

#include "sqw/errors.hpp"
#include "sqw/partition.hpp"

using namespace sqw;

namespace {
std::vector<Partition> upto(int n) {
  std::vector<Partition> out;
  for (auto& p : enum_box(n, n))
    if (p.size() <= n) out.push_back(p);
  return out;
}
}  // namespace

TEST_CASE("parse") {
  CHECK(Partition::parse("") == Partition{});
  CHECK(Partition::parse("3,1") == Partition({3, 1}));
  CHECK(Partition::parse("2,1,0,0") == Partition({2, 1}));
  CHECK_THROWS_AS(Partition::parse("1,3"), ParseError);
  CHECK_THROWS_AS(Partition::parse("2,x"), ParseError);
  CHECK_THROWS_AS(Partition::parse("-1"), ParseError);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  for (const auto& p : upto(12)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("column multiplicities") {
  CHECK(col_mult(Partition({3, 1}), 1) == 2);
  for (int j = 1; j < 5; ++j) CHECK(col_mult(Partition{}, j) == 0);
  for (const auto& p : upto(12)) {
    int s = 0;
    for (int j = 1; j <= p.length(); ++j) s += j * col_mult(p, j);
    CHECK(s == p.size());
  }
}

TEST_CASE("interlacing") {
  CHECK(interlaces(Partition({2, 1}), Partition({1})));
  CHECK_FALSE(interlaces(Partition({1}), Partition({2})));
  for (const auto& lam : upto(10))
    for (const auto& mu : enum_interlacing_below(lam)) {
      CHECK(interlaces(lam, mu));
      int d = lam.length() - mu.length();
      CHECK(d >= 0);
      CHECK(d <= 1);
    }
}

TEST_CASE("box enumeration") {
  CHECK(enum_box(0, 0) == std::vector<Partition>{Partition{}});
  CHECK(enum_box(1, 2) == std::vector<Partition>{Partition{}, Partition({1}), Partition({2})});
  CHECK(enum_box(3, 3).size() == 20);
  CHECK(enum_box(6, 6).size() == 924);
}

TEST_CASE("interlacing above") {
  CHECK(enum_interlacing_above(Partition{}, 0) == std::vector<Partition>{Partition{}});
  auto got = enum_interlacing_above(Partition({1}), 1);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<Partition>{Partition({1}), Partition({1, 1})});
  // filter-check against the box
  Partition mu({3, 1});
  auto above = enum_interlacing_above(mu, 5);
  std::size_t count = 0;
  for (const auto& lam : enum_box(3, 5))
    if (interlaces(lam, mu)) ++count;
  CHECK(above.size() == count);
  for (const auto& lam : above) CHECK(interlaces(lam, mu));
}

TEST_CASE("vertical strips") {
  CHECK(vertical_strip(Partition({2, 1}), Partition({1, 1})));
  CHECK_FALSE(vertical_strip(Partition({2}), Partition{}));
  for (const auto& lam : upto(8))
    for (const auto& mu : enum_vertical_strip_below(lam)) CHECK(vertical_strip(lam, mu));
}
