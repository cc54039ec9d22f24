#pragma once

// Independent eigenvalue oracle: Numerov shooting on a uniform radial grid.
// Shares nothing with the spectral path beyond the potential itself.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "gps/errors.hpp"
#include "gps/model.hpp"

namespace gps {

struct ShootingConfig {
  double r_min = 1e-6;
  double r_end = 20.0;
  double step = 1e-3;
  double e_tol = 1e-10;

  void validate() const {
    if (!(r_min > 0.0 && r_min < r_end) || !(step > 0.0) || !(e_tol > 0.0)) {
      throw std::invalid_argument("ShootingConfig: need 0 < r_min < r_end, step > 0, e_tol > 0");
    }
  }
};

namespace detail {

// One uniform-step shooting problem for fixed (p, ell, h).
class NumerovShooter {
 public:
  NumerovShooter(const GshoParams& p, int ell, int n, const ShootingConfig& cfg, double step)
      : h_(step) {
    const auto count = static_cast<std::size_t>((cfg.r_end - cfg.r_min) / step);
    r_.resize(count + 1);
    q_.resize(count + 1);
    for (std::size_t k = 0; k <= count; ++k) {
      r_[k] = cfg.r_min + static_cast<double>(k) * step;
      q_[k] = 2.0 * effective_potential(p, ell, r_[k]);
    }

    // Start where the Numerov recurrence resolves the local wavenumber;
    // closer to the origin psi is negligible.
    constexpr double kMaxStartStiffness = 0.5;  // h^2 q at the start point
    start_ = 0;
    while (start_ + 8 < r_.size() && h_ * h_ * q_[start_] > kMaxStartStiffness) ++start_;

    // Near-origin behaviour psi ~ r^{l'+1} exp(-S(r)); S is the WKB action
    // of a spike steeper than r^-2.
    const double absorbed = p.A + (p.alpha == 2.0 ? p.lambda : 0.0);
    const double ell_eff = effective_ell(absorbed, ell);
    auto log_psi = [&](double r) {
      double value = (ell_eff + 1.0) * std::log(r);
      if (p.lambda > 0.0 && p.alpha > 2.0) {
        value -= 2.0 * std::sqrt(p.lambda) / (p.alpha - 2.0) * std::pow(r, 1.0 - 0.5 * p.alpha);
      }
      return value;
    };
    start_ratio_ = std::exp(log_psi(r_[start_ + 1]) - log_psi(r_[start_]));

    // Match at the outer turning point of the lambda = 0 energy, a lower bound
    // for the sought level; fall back to the potential minimum.
    const double probe = analytic_energy_lambda0(p.A, ell, n);
    std::size_t argmin = start_;
    match_ = 0;
    for (std::size_t k = start_; k < r_.size(); ++k) {
      if (q_[k] < q_[argmin]) argmin = k;
      if (q_[k] <= 2.0 * probe) match_ = k;
    }
    if (match_ == 0) match_ = argmin;
    match_ = std::clamp(match_, start_ + 2, r_.size() - 3);
    potential_min_ = 0.5 * q_[argmin];
  }

  [[nodiscard]] double potential_minimum() const { return potential_min_; }

  // Normalized Wronskian of the outward and inward solutions at the matching
  // point. Continuous in E; vanishes exactly at the discrete eigenvalues.
  [[nodiscard]] double mismatch(double energy) const {
    const double h2 = h_ * h_ / 12.0;
    auto a = [&](std::size_t k) { return h2 * (q_[k] - 2.0 * energy); };
    constexpr double kRescale = 1e150;

    double prev = 1.0;
    double cur = start_ratio_;
    for (std::size_t k = start_ + 1; k < match_ + 1; ++k) {
      const double next = (2.0 * (1.0 + 5.0 * a(k)) * cur - (1.0 - a(k - 1)) * prev) / (1.0 - a(k + 1));
      prev = cur;
      cur = next;
      if (std::abs(cur) > kRescale) {
        prev /= kRescale;
        cur /= kRescale;
      }
    }
    const double out_m = prev;   // psi_out(match)
    const double out_m1 = cur;   // psi_out(match + 1)

    const std::size_t last = r_.size() - 1;
    double in_next = 0.0;  // psi(last) = 0
    double in_cur = 1.0;   // psi(last - 1)
    for (std::size_t k = last - 1; k > match_; --k) {
      const double next =
          (2.0 * (1.0 + 5.0 * a(k)) * in_cur - (1.0 - a(k + 1)) * in_next) / (1.0 - a(k - 1));
      in_next = in_cur;
      in_cur = next;
      if (std::abs(in_cur) > kRescale) {
        in_next /= kRescale;
        in_cur /= kRescale;
      }
    }
    const double in_m = in_cur;    // psi_in(match)
    const double in_m1 = in_next;  // psi_in(match + 1)

    const double w = out_m * in_m1 - out_m1 * in_m;
    return w / ((std::abs(out_m) + std::abs(out_m1)) * (std::abs(in_m) + std::abs(in_m1)));
  }

  [[nodiscard]] double refine(double lo, double hi, double tol) const {
    std::uintmax_t max_iter = 200;
    auto tolerance = [tol](double a, double b) { return std::abs(a - b) <= tol; };
    const auto [a, b] = boost::math::tools::toms748_solve(
        [this](double e) { return mismatch(e); }, lo, hi, tolerance, max_iter);
    return 0.5 * (a + b);
  }

 private:
  double h_;
  std::vector<double> r_;
  std::vector<double> q_;  // l(l+1)/r^2 + v(r)
  std::size_t start_ = 0;
  std::size_t match_ = 0;
  double start_ratio_ = 1.0;
  double potential_min_ = 0.0;
};

struct Bracket {
  double lo;
  double hi;
};

// Scans upward from the potential minimum in steps of 0.1 and returns the
// interval holding the (n+1)-th sign change of the mismatch function.
inline Bracket bracket_level(const NumerovShooter& shooter, int n) {
  constexpr double kScanStep = 0.1;
  constexpr int kMaxScanSteps = 5000;
  const double e0 = shooter.potential_minimum();
  double lo = e0;
  double f_lo = shooter.mismatch(lo);
  int found = 0;
  for (int s = 1; s <= kMaxScanSteps; ++s) {
    const double hi = e0 + kScanStep * s;
    const double f_hi = shooter.mismatch(hi);
    if (f_lo == 0.0 || (f_lo < 0.0) != (f_hi < 0.0)) {
      if (found == n) return {lo, hi};
      ++found;
    }
    lo = hi;
    f_lo = f_hi;
  }
  std::ostringstream msg;
  msg << "numerov_energy: found " << found << " of " << n + 1 << " levels in E window [" << e0
      << ", " << e0 + kScanStep * kMaxScanSteps << "]";
  throw NumericError(msg.str());
}

inline double shoot(const GshoParams& p, int ell, int n, const ShootingConfig& cfg, double step,
                    const Bracket* hint) {
  const NumerovShooter shooter(p, ell, n, cfg, step);
  const double tol = 0.01 * cfg.e_tol;
  if (hint != nullptr) {
    const double flo = shooter.mismatch(hint->lo);
    const double fhi = shooter.mismatch(hint->hi);
    if ((flo < 0.0) != (fhi < 0.0)) return shooter.refine(hint->lo, hint->hi, tol);
  }
  const Bracket b = bracket_level(shooter, n);
  return shooter.refine(b.lo, b.hi, tol);
}

}  // namespace detail

/// Eigenvalue E_{n,l} by Numerov shooting at steps h and h/2, combined by
/// Richardson extrapolation for the O(h^4) error.
inline double numerov_energy(const GshoParams& p, int ell, int n, const ShootingConfig& cfg = {}) {
  validate(p);
  cfg.validate();
  if (ell < 0 || n < 0) throw std::domain_error("numerov_energy: need ell >= 0, n >= 0");
  const double coarse = detail::shoot(p, ell, n, cfg, cfg.step, nullptr);
  const detail::Bracket near{coarse - 1e-3, coarse + 1e-3};
  const double fine = detail::shoot(p, ell, n, cfg, 0.5 * cfg.step, &near);
  return (16.0 * fine - coarse) / 15.0;
}

}  // namespace gps
