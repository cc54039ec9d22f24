#pragma once

// The generalized spiked harmonic oscillator
//   v(r) = r^2 + A / r^2 + lambda / r^alpha
// and the radial problem [-1/2 d^2/dr^2 + l(l+1)/(2 r^2) + v(r)/2] psi = E psi.

#include <cmath>
#include <stdexcept>

namespace gps {

struct GshoParams {
  double A = 0.0;
  double lambda = 0.0;
  double alpha = 4.0;
};

inline void validate(const GshoParams& p) {
  if (!(p.A >= 0.0)) throw std::domain_error("GshoParams: A must be >= 0");
  if (!(p.lambda >= 0.0)) throw std::domain_error("GshoParams: lambda must be >= 0");
  if (!(p.alpha > 0.0)) throw std::domain_error("GshoParams: alpha must be > 0");
}

/// n counts interior nodes of the reduced radial function.
struct StateLabel {
  int n = 0;
  int ell = 0;
};

inline double gsho_v(const GshoParams& p, double r) {
  if (!(r > 0.0)) throw std::domain_error("gsho_v: r must be > 0");
  const double r2 = r * r;
  return r2 + p.A / r2 + (p.lambda == 0.0 ? 0.0 : p.lambda * std::pow(r, -p.alpha));
}

/// l(l+1)/(2 r^2) + v(r)/2
inline double effective_potential(const GshoParams& p, int ell, double r) {
  if (ell < 0) throw std::domain_error("effective_potential: ell must be >= 0");
  const double centrifugal = 0.5 * ell * (ell + 1.0) / (r * r);
  return centrifugal + 0.5 * gsho_v(p, r);
}

/// Solution l' >= 0 of l'(l'+1) = l(l+1) + A: the inverse-square coupling
/// absorbed into an effective angular momentum.
inline double effective_ell(double A, int ell) {
  if (!(A >= 0.0) || ell < 0) throw std::domain_error("effective_ell: need A >= 0, ell >= 0");
  const double c = ell * (ell + 1.0) + A;
  return 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * c));
}

/// Exact eigenvalue 2n + l' + 3/2 of the lambda = 0 problem.
inline double analytic_energy_lambda0(double A, int ell, int n) {
  if (n < 0) throw std::domain_error("analytic_energy_lambda0: n must be >= 0");
  return 2.0 * n + effective_ell(A, ell) + 1.5;
}

}  // namespace gps
