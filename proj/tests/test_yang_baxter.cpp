#include "doctest.h"

#include <algorithm>
#include <random>

#include "sqw/errors.hpp"
#include "sqw/weights.hpp"
#include "sqw/yang_baxter.hpp"

using namespace sqw;
using namespace sqw::ybe;
using Q = Rational;

TEST_CASE("instance registry") {
  std::vector<std::string> names;
  for (const auto& i : instances()) names.push_back(i.name);
  for (auto n : {"hs", "W", "dual", "cauchy", "defW", "defCauchy", "colDef", "contCauchy"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(find_instance("nope"), PreconditionError);
}

TEST_CASE("all-zero boundary") {
  // every weight is 1 at zero labels except the R-matrix cell, which is 1 - q x/y
  const auto& hs = find_instance("hs");
  Params p{{"q", Q(1, 3)}, {"x", Q(2, 5)}, {"y", Q(3, 7)}, {"s", Q(1, 2)}};
  Boundary zero(6, 0);
  Q expect = Q(1) - Q(1, 3) * Q(2, 5) / Q(3, 7);
  CHECK(ybe_side(hs, true, zero, p) == expect);
  CHECK(ybe_side(hs, false, zero, p) == expect);
}

TEST_CASE("hand case for the higher spin equation") {
  const auto& hs = find_instance("hs");
  Q q(1, 3), x(2, 5), y(3, 7), s(1, 2);
  Params p{{"q", q}, {"x", x}, {"y", y}, {"s", s}};
  Boundary b{1, 0, 0, 1, 0, 0};
  auto w = [&](Q u, int i, int j, int k, int l) { return w_s(q, u, s, i, j, k, l); };
  Q z = x / y;
  // left: internal (l1,l2) = (1,0) or (0,1); right: l3 = 0 or 1
  Q lhs = w(x, 1, 0, 1, 0) * w(y, 1, 0, 1, 0) * R_mat(q, z, 0, 0, 0, 0) +
          w(x, 1, 0, 0, 1) * w(y, 0, 0, 1, 0) * R_mat(q, z, 1, 0, 0, 0);
  Q rhs = R_mat(q, z, 0, 0, 0, 0) * w(y, 1, 0, 1, 0) * w(x, 1, 0, 1, 0) +
          R_mat(q, z, 0, 0, 0, 1) * w(y, 1, 1, 1, 0) * w(x, 1, 0, 1, 0);
  CHECK(ybe_side(hs, true, b, p) == lhs);
  CHECK(ybe_side(hs, false, b, p) == rhs);
  CHECK(lhs == rhs);
}

TEST_CASE("constraint of the Cauchy-type instance") {
  const auto& c = find_instance("cauchy");
  Params p{{"q", Q(1, 3)}, {"x", Q(2, 5)}, {"y", Q(3, 7)}, {"s", Q(1, 2)}, {"t", Q(1, 9)}, {"eta", Q(1)}};
  CHECK_THROWS_AS(c.check_constraint(p), PreconditionError);
  CHECK_THROWS_AS(ybe_side(c, true, Boundary(6, 0), p), PreconditionError);
}

TEST_CASE("instances pass and perturbed ones fail") {
  for (const auto& inst : instances()) {
    CAPTURE(inst.name);
    auto rep = check_instance(inst, inst.name == "hs" ? 4 : std::min(inst.default_cap, 3), 3, 2);
    CHECK(rep.passed());
    CHECK(rep.instances > 0);
    auto bad = check_instance(inst, std::min(inst.default_cap, 3), 2, 2, true);
    CHECK(bad.failure_count > 0);
  }
  CHECK(check_eta_one(3, 3, 4).passed());
  CHECK(check_colored_dictionary(3, 3, 4).passed());
}
