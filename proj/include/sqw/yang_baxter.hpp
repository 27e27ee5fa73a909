#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sqw/rational.hpp"
#include "sqw/report.hpp"

namespace sqw::ybe {

using Params = std::map<std::string, Rational>;
using Boundary = std::vector<int>;
using SideFn = std::function<Rational(bool left, const Boundary&)>;

struct Instance {
  std::string name;
  std::string summary;
  std::vector<std::string> free_params;
  std::function<Params(std::mt19937_64&)> draw;
  std::function<void(const Params&)> check_constraint;  // throws PreconditionError
  std::function<std::vector<Boundary>(int cap)> boundaries;
  std::function<std::string(const Boundary&)> describe;
  // perturb: alters one parameter on the right-hand side only
  std::function<SideFn(const Params&, bool perturb)> bind;
  int default_cap = 4;
};

const std::vector<Instance>& instances();
const Instance& find_instance(const std::string& name);  // throws PreconditionError

Rational ybe_side(const Instance& inst, bool left, const Boundary& boundary, const Params& params);

VerificationReport check_instance(const Instance& inst, int cap, int trials, std::uint64_t seed,
                                  bool perturb = false);

// n = 1 colored equation against the deformed Cauchy-type one under the
// direction-change dictionary
VerificationReport check_colored_dictionary(int cap, int trials, std::uint64_t seed);

// eta = 1 collapses the deformed instances onto the undeformed ones
VerificationReport check_eta_one(int cap, int trials, std::uint64_t seed);

std::string params_str(const Params& p);

}  // namespace sqw::ybe
