#pragma once

#include <optional>
#include <vector>

#include "sqw/params.hpp"
#include "sqw/partition.hpp"

namespace sqw {

// centered circle separating {s_i/xi_i} (inside) from {1/(s_i xi_i)} (outside), i = 1..horizon
struct Contour {
  double radius = 0.0;
  int nodes = 256;
  double inner = 0.0;  // max |s_i/xi_i|
  double outer = 0.0;  // min |1/(s_i xi_i)|
  double margin = 1e-3;
};

Contour build_contour(const ParameterBase<Complex>& base, double margin = 1e-3, int nodes = 256);

// k-fold trapezoidal rule, k = mu_1
Complex integral_F(const Partition& mu, const std::vector<Complex>& kappa, const ParameterBase<Complex>& base,
                   int nodes = 256, std::optional<double> radius = std::nullopt);

// L-fold orthogonality integral for HL labels lam, mu (l(mu) <= L).
// with_qq_factor keeps the factor (q;q)_{L-l(mu)} in front; it equals 1 when l(mu) = L and
// only then does the normalization with that factor give 1 on the diagonal.
Complex orthogonality_integral(const Partition& lamHL, const Partition& muHL, int L,
                               const ParameterBase<Complex>& base, int nodes = 256,
                               std::optional<double> radius = std::nullopt, bool invert_xi_in_phi = true,
                               bool with_qq_factor = true);

}  // namespace sqw
