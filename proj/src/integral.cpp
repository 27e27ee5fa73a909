#include "sqw/integral.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "sqw/functions.hpp"

namespace sqw {

namespace {

void require_positive_real(const Complex& z, const char* what) {
  if (z.imag() != 0.0 || !(z.real() > 0.0))
    throw PreconditionError(std::string("contour construction needs real positive ") + what);
}

std::vector<Complex> circle(double rho, int M) {
  std::vector<Complex> z(M);
  for (int m = 0; m < M; ++m) z[m] = std::polar(rho, 2.0 * std::numbers::pi * (m + 0.5) / M);
  return z;
}

// mean over the product grid of prod_a f[a][node] times the cross factor over pairs
Complex grid_mean(const std::vector<std::vector<Complex>>& f, const std::vector<Complex>& z, const Complex& q,
                  bool skip_diagonal) {
  const int k = static_cast<int>(f.size());
  const int M = static_cast<int>(z.size());
  if (k == 0) return Complex(1.0);
  std::vector<int> idx(k, 0);
  std::function<Complex(int, Complex)> rec = [&](int a, Complex acc) -> Complex {
    if (a == k) return acc;
    Complex sum(0.0);
    for (int m = 0; m < M; ++m) {
      Complex t = acc * f[a][m];
      bool diag = false;
      for (int b = 0; b < a; ++b) {
        if (idx[b] == m) {
          diag = true;
          break;
        }
        t *= (z[idx[b]] - z[m]) / (z[idx[b]] - q * z[m]);
      }
      if (diag && skip_diagonal) continue;
      if (diag) t = Complex(0.0);
      idx[a] = m;
      sum += rec(a + 1, t);
    }
    return sum / static_cast<double>(M);
  };
  Complex out = rec(0, Complex(1.0));
  if (!is_finite(out)) throw PoleError("quadrature node on a pole");
  return out;
}

}  // namespace

Contour build_contour(const ParameterBase<Complex>& base, double margin, int nodes) {
  View<Complex> v = make_view(base);
  if (!(std::abs(base.q) < 1.0) || std::abs(base.q) == 0.0) throw PreconditionError("contour needs 0 < |q| < 1");
  Contour c;
  c.nodes = nodes;
  c.margin = margin;
  c.inner = 0.0;
  c.outer = INFINITY;
  for (int i = 1; i <= base.horizon; ++i) {
    require_positive_real(v.s(i), "s_i");
    require_positive_real(v.xi(i), "xi_i");
    c.inner = std::max(c.inner, std::abs(v.s(i) / v.xi(i)));
    c.outer = std::min(c.outer, std::abs(1.0 / v.s_xi(i)));
  }
  if (base.horizon < 1) throw PreconditionError("contour needs horizon >= 1");
  if (c.outer - c.inner < margin) {
    std::ostringstream os;
    os << "contour inadmissible: max s_i/xi_i = " << c.inner << " is not separated from min 1/(s_i xi_i) = "
       << c.outer << " by margin " << margin;
    throw PreconditionError(os.str());
  }
  c.radius = std::sqrt(c.inner * c.outer);
  return c;
}

namespace {

Complex integral_F_at(const Partition& mu, const std::vector<Complex>& kappa, const View<Complex>& v, double rho,
                      int M) {
  const int k = mu[1];
  Partition mc = conjugate(mu);
  auto z = circle(rho, M);
  std::vector<std::vector<Complex>> f(k, std::vector<Complex>(M));
  for (int a = 0; a < k; ++a) {
    int m = mc[a + 1];
    for (int t = 0; t < M; ++t) {
      const Complex& x = z[t];
      Complex val = (1.0 / v.xi(0)) / (x - v.s(m) / v.xi(m));
      for (int j = 1; j < m; ++j) val *= (1.0 - v.s_xi(j) * x) / (x * v.xi(j) - v.s(j));
      for (std::size_t i = 1; i <= kappa.size(); ++i) val *= (1.0 - x * kappa[i - 1]) / (1.0 - x * v.s_xi(i));
      f[a][t] = val;
    }
  }
  return grid_mean(f, z, v.q(), false);
}

}  // namespace

Complex integral_F(const Partition& mu, const std::vector<Complex>& kappa, const ParameterBase<Complex>& base,
                   int nodes, std::optional<double> radius) {
  if (mu.empty()) return Complex(1.0);
  View<Complex> v = make_view(base);
  double rho = radius ? *radius : build_contour(base, 1e-3, nodes).radius;
  try {
    return integral_F_at(mu, kappa, v, rho, nodes);
  } catch (const PoleError&) {
    return integral_F_at(mu, kappa, v, rho * 1.001, nodes);
  }
}

namespace {

Complex ortho_at(const Partition& lamHL, const Partition& muHL, int L, const ParameterBase<Complex>& base,
                 double rho, int M, bool invert, bool with_qq_factor) {
  View<Complex> v = make_view(base);
  View<Complex> vbar = invert ? make_view(invert_xi(base)) : v;
  const Complex q = base.q;
  auto z = circle(rho, M);
  Partition lam = conjugate(lamHL);
  Complex pref = c_S(lam, v) / std::pow(1.0 - q, L);
  if (with_qq_factor) pref *= qpoch(q, q, L - muHL.length());
  if (L == 0) return pref * (lamHL.empty() ? Complex(1.0) : Complex(0.0));
  std::vector<std::vector<Complex>> f(L, std::vector<Complex>(M));
  for (int a = 0; a < L; ++a)
    for (int t = 0; t < M; ++t) f[a][t] = phi_tilde(muHL[a + 1], 1.0 / z[t], vbar);
  // F~_lam(z_1..z_L) does not factor, so the grid is walked directly
  std::vector<int> idx(L, 0);
  Complex sum(0.0);
  long count = 0;
  std::function<void(int)> rec = [&](int a) {
    if (a == L) {
      ++count;
      for (int x = 0; x < L; ++x)
        for (int y = x + 1; y < L; ++y)
          if (idx[x] == idx[y]) return;
      std::vector<Complex> u(L);
      Complex t(1.0);
      for (int x = 0; x < L; ++x) {
        u[x] = z[idx[x]];
        t *= f[x][idx[x]];
      }
      for (int x = 0; x < L; ++x)
        for (int y = x + 1; y < L; ++y) t *= (u[x] - u[y]) / (u[x] - q * u[y]);
      sum += t * FHL_symmetrized(lamHL, u, v);
      return;
    }
    for (int m = 0; m < M; ++m) {
      idx[a] = m;
      rec(a + 1);
    }
  };
  rec(0);
  Complex out = pref * sum / static_cast<double>(count);
  if (!is_finite(out)) throw PoleError("quadrature node on a pole");
  return out;
}

}  // namespace

Complex orthogonality_integral(const Partition& lamHL, const Partition& muHL, int L, const ParameterBase<Complex>& base,
                               int nodes, std::optional<double> radius, bool invert_xi_in_phi,
                               bool with_qq_factor) {
  if (muHL.length() > L) throw PreconditionError("orthogonality needs l(mu) <= L");
  double rho = radius ? *radius : build_contour(base, 1e-3, nodes).radius;
  try {
    return ortho_at(lamHL, muHL, L, base, rho, nodes, invert_xi_in_phi, with_qq_factor);
  } catch (const PoleError&) {
    return ortho_at(lamHL, muHL, L, base, rho * 1.001, nodes, invert_xi_in_phi, with_qq_factor);
  }
}

}  // namespace sqw
