#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqw/params.hpp"
#include "sqw/report.hpp"

namespace sqw {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials = 20;       // random rational points (P0 is always checked in addition where it applies)
  bool perturb = false;  // run the deliberately broken negative-control instance instead
  int n = 0, m = 0;      // variable counts; 0 means every count the suite covers
  int cap = 0;           // box / label cap; 0 means the suite default
  std::vector<int> J;    // cauchy-qJ exponents; empty means all J <= (2,3)
  int L_trunc = 40;      // cauchy-numeric truncation
  int nodes = 256;       // quadrature nodes
  std::optional<ParameterBase<Rational>> base;  // replaces P0 in the exact suites
};

VerificationReport verify_dual_cauchy(const SuiteConfig& cfg);
VerificationReport verify_cauchy_qJ(const SuiteConfig& cfg);
VerificationReport verify_cauchy_numeric(const SuiteConfig& cfg);
VerificationReport verify_exchange(const SuiteConfig& cfg);
VerificationReport verify_commutation(const SuiteConfig& cfg);
VerificationReport verify_adjoint(const SuiteConfig& cfg);
VerificationReport verify_Bfusion(const SuiteConfig& cfg);
VerificationReport verify_infcol(const SuiteConfig& cfg);
VerificationReport verify_branching(const SuiteConfig& cfg);
VerificationReport verify_stability(const SuiteConfig& cfg);
VerificationReport verify_symmetry(const SuiteConfig& cfg);
VerificationReport verify_one_var(const SuiteConfig& cfg);
VerificationReport verify_support(const SuiteConfig& cfg);
VerificationReport verify_hl_stability(const SuiteConfig& cfg);
VerificationReport verify_hl_symmetry(const SuiteConfig& cfg);
VerificationReport verify_hl_formula(const SuiteConfig& cfg);
VerificationReport verify_lattice(const SuiteConfig& cfg);
VerificationReport verify_fusion_weights(const SuiteConfig& cfg);
VerificationReport verify_stochastic(const SuiteConfig& cfg);
VerificationReport verify_F_normalization_sum(const SuiteConfig& cfg);
VerificationReport verify_orthogonality(const SuiteConfig& cfg);
VerificationReport verify_integral(const SuiteConfig& cfg);

struct SuiteInfo {
  std::string name;
  std::string summary;
  VerificationReport (*run)(const SuiteConfig&);
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo* find_suite(const std::string& name);

}  // namespace sqw
