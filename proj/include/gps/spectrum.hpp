#pragma once

// End-to-end bound-state solves on the mapped LGL grid: labelled states,
// reduced radial wavefunctions, quadrature observables and convergence scans.

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "gps/collocation.hpp"
#include "gps/eigen.hpp"
#include "gps/errors.hpp"
#include "gps/hamiltonian.hpp"
#include "gps/model.hpp"

namespace gps {

struct NumericsConfig {
  int order = 200;       // N
  double r_max = 300.0;
  double scale = 25.0;   // L
  int states = 2;        // k, states requested per ell

  [[nodiscard]] double gamma() const { return 2.0 * scale / r_max; }

  void validate() const {
    if (states < 1) throw std::invalid_argument("NumericsConfig: at least one state required");
    if (order < 2 * states + 10) {
      throw std::invalid_argument("NumericsConfig: N must be >= 2k + 10 (N = " +
                                  std::to_string(order) + ", k = " + std::to_string(states) + ")");
    }
    make_map(scale, r_max);
  }
};

/// A normalized bound state sampled at the interior nodes of its grid.
/// psi holds the reduced radial function psi(r) = r R(r).
struct BoundState {
  StateLabel label;
  double energy = 0.0;
  GshoParams params;
  std::vector<double> r;             // interior radii
  std::vector<double> psi;           // psi(r_j), unit quadrature norm
  std::vector<double> measure;       // w_j r'_j, so that sum measure * F(r) ~ int F dr
  std::shared_ptr<const MappedGrid> grid;

  /// psi at an arbitrary radius, from the degree-N interpolant of
  /// psi(r(x)) sqrt(r'(x)), which vanishes at both ends of the grid.
  [[nodiscard]] double evaluate(double radius) const {
    if (radius <= 0.0 || radius >= grid->map.r_max) return 0.0;
    std::vector<double> g(grid->grid.size(), 0.0);
    for (std::size_t i = 0; i < psi.size(); ++i) g[i + 1] = psi[i] * std::sqrt(grid->rprime[i + 1]);
    const double x = map_inverse(grid->map, radius);
    return interpolate(grid->grid, g, x) / std::sqrt(map_point(grid->map, x).rprime);
  }
};

/// Samples below this fraction of the peak |psi| are rounding noise: the
/// dense eigenvectors carry absolute errors of order 1e-8 of the peak where
/// the true wavefunction is vanishingly small (deep in the core or tail).
inline constexpr double kNodeFloor = 1e-6;

/// Number of strict sign changes of psi over the interior samples, skipping
/// samples below kNodeFloor of the largest magnitude.
inline int count_nodes(const BoundState& s) {
  double peak = 0.0;
  for (double v : s.psi) peak = std::max(peak, std::abs(v));
  const double floor = kNodeFloor * peak;
  int changes = 0;
  int last_sign = 0;
  for (double v : s.psi) {
    if (std::abs(v) < floor) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return changes;
}

/// Quadrature estimate of <F(r)> = sum_j w_j r'_j F(r_j) psi_j^2.
template <typename F>
double expectation_of(const BoundState& s, F&& f) {
  double acc = 0.0;
  for (std::size_t j = 0; j < s.psi.size(); ++j) acc += s.measure[j] * f(s.r[j]) * s.psi[j] * s.psi[j];
  return acc;
}

/// <r^power>. Without a repulsive core steeper than r^-2, psi ~ r^{l'+1} at
/// the origin and the moment exists only for power > -(2 l' + 3).
inline double expectation_r_power(const BoundState& s, double power) {
  const GshoParams& p = s.params;
  const bool core_suppresses = p.lambda > 0.0 && p.alpha > 2.0;
  if (!core_suppresses) {
    const double absorbed = p.A + (p.alpha == 2.0 ? p.lambda : 0.0);
    const double ell_eff = effective_ell(absorbed, s.label.ell);
    if (power <= -(2.0 * ell_eff + 3.0)) {
      throw std::domain_error("expectation_r_power: <r^" + std::to_string(power) +
                              "> diverges for this state");
    }
  }
  return expectation_of(s, [power](double r) { return std::pow(r, power); });
}

struct DensitySample {
  double r;
  double value;  // psi(r)^2
};

/// |psi|^2 on the native grid, endpoints r = 0 and r = r_max included as zeros.
inline std::vector<DensitySample> radial_density(const BoundState& s) {
  std::vector<DensitySample> out;
  out.reserve(s.psi.size() + 2);
  out.push_back({0.0, 0.0});
  for (std::size_t j = 0; j < s.psi.size(); ++j) out.push_back({s.r[j], s.psi[j] * s.psi[j]});
  out.push_back({s.grid->map.r_max, 0.0});
  return out;
}

/// Location and height of the global maximum of |psi|^2, refined between the
/// neighbours of the best grid sample using the spectral interpolant.
inline DensitySample density_peak(const BoundState& s) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < s.psi.size(); ++j)
    if (std::abs(s.psi[j]) > std::abs(s.psi[best])) best = j;
  const double lo = best == 0 ? s.r[0] * 0.5 : s.r[best - 1];
  const double hi = best + 1 == s.r.size() ? s.r[best] : s.r[best + 1];
  auto negative_density = [&](double radius) {
    const double v = s.evaluate(radius);
    return -v * v;
  };
  const auto [radius, neg] = boost::math::tools::brent_find_minima(negative_density, lo, hi, 50);
  return {radius, -neg};
}

/// Builds the grid and differentiation matrix once and reuses them across
/// potentials and angular momenta.
class SpectralSolver {
 public:
  explicit SpectralSolver(const NumericsConfig& cfg) : cfg_(cfg) {
    cfg_.validate();
    grid_ = std::make_shared<const MappedGrid>(lgl_grid(cfg_.order), make_map(cfg_.scale, cfg_.r_max));
    d_ = second_derivative_matrix(*grid_);
  }

  [[nodiscard]] const NumericsConfig& config() const { return cfg_; }
  [[nodiscard]] const MappedGrid& grid() const { return *grid_; }

  [[nodiscard]] SpectralHamiltonian hamiltonian(const GshoParams& p, int ell) const {
    return assemble_hamiltonian(*grid_, d_, p, ell);
  }

  /// Lowest eigenvalues only.
  [[nodiscard]] std::vector<double> energies(const GshoParams& p, int ell, int count) const {
    const EigenDecomposition ed = eigh(hamiltonian(p, ell).entries, false);
    return {ed.values.begin(), ed.values.begin() + count};
  }

  /// The `states` lowest bound states, n assigned by energy rank and checked
  /// against the node count of each wavefunction unless check_nodes is off.
  [[nodiscard]] std::vector<BoundState> solve(const GshoParams& p, int ell, bool check_nodes = true) const {
    const EigenDecomposition ed = eigh(hamiltonian(p, ell).entries, true);
    const std::size_t dim = grid_->interior_count();
    const double n = cfg_.order;
    const double euclid_to_quadrature = std::sqrt(n * (n + 1.0) / 2.0);

    std::vector<double> measure(dim);
    std::vector<double> radii(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      measure[i] = grid_->grid.weights[i + 1] * grid_->rprime[i + 1];
      radii[i] = grid_->r[i + 1];
    }

    std::vector<BoundState> out;
    for (int k = 0; k < cfg_.states; ++k) {
      BoundState s;
      s.label = {k, ell};
      s.energy = ed.values[k];
      s.params = p;
      s.r = radii;
      s.measure = measure;
      s.grid = grid_;
      s.psi.resize(dim);
      double norm = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        const double chi = (*ed.vectors)(i, k);
        s.psi[i] = euclid_to_quadrature * chi * grid_->grid.pn_values[i + 1] /
                   std::sqrt(grid_->rprime[i + 1]);
        norm += measure[i] * s.psi[i] * s.psi[i];
      }
      const double rescale = 1.0 / std::sqrt(norm);
      for (double& v : s.psi) v *= rescale;

      const int nodes = check_nodes ? count_nodes(s) : k;
      if (nodes != k) {
        throw NumericError("solve_states: state " + std::to_string(k) + " (E = " +
                           std::to_string(s.energy) + ") has " + std::to_string(nodes) +
                           " nodes; increase N");
      }
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  NumericsConfig cfg_;
  std::shared_ptr<const MappedGrid> grid_;
  SquareMatrix d_;
};

inline std::vector<BoundState> solve_states(const GshoParams& p, int ell, const NumericsConfig& cfg) {
  return SpectralSolver(cfg).solve(p, ell);
}

/// Number of leading significant digits on which a and b agree (0..16).
inline int agreeing_digits(double a, double b) {
  if (a == b) return 16;
  const double scale = std::max(std::abs(a), std::abs(b));
  const double rel = std::abs(a - b) / scale;
  return std::clamp(static_cast<int>(std::floor(-std::log10(rel))), 0, 16);
}

struct ConvergenceRow {
  int order = 0;
  std::vector<double> energies;
  std::vector<int> digits;   // agreement with the previous row; empty for the first
  std::vector<bool> stable;  // digits >= 10
};

inline constexpr int kStableDigits = 10;

inline std::vector<ConvergenceRow> convergence_scan(const GshoParams& p, int ell,
                                                    const NumericsConfig& base,
                                                    std::span<const int> orders) {
  if (!std::is_sorted(orders.begin(), orders.end())) {
    throw std::invalid_argument("convergence_scan: N list must be ascending");
  }
  std::vector<ConvergenceRow> rows;
  for (int order : orders) {
    NumericsConfig cfg = base;
    cfg.order = order;
    ConvergenceRow row;
    row.order = order;
    row.energies = SpectralSolver(cfg).energies(p, ell, cfg.states);
    if (!rows.empty()) {
      const auto& prev = rows.back().energies;
      for (std::size_t k = 0; k < row.energies.size(); ++k) {
        const int d = agreeing_digits(prev[k], row.energies[k]);
        row.digits.push_back(d);
        row.stable.push_back(d >= kStableDigits);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct HellmannFeynmanCheck {
  double finite_difference;  // dE/dlambda
  double expectation;        // <r^-alpha> / 2
  [[nodiscard]] double residual() const { return std::abs(finite_difference - expectation); }
};

/// Compares dE/dlambda by central differences (second-order one-sided when
/// lambda < delta) with <dH/dlambda> = <r^-alpha>/2.
inline HellmannFeynmanCheck hellmann_feynman_check(const GshoParams& p, int ell, int n,
                                                   double delta = 1e-4,
                                                   NumericsConfig cfg = {}) {
  if (!(delta > 0.0)) throw std::invalid_argument("hellmann_feynman: delta must be > 0");
  cfg.states = std::max(cfg.states, n + 1);
  const SpectralSolver solver(cfg);
  auto energy_at = [&](double lambda) {
    GshoParams q = p;
    q.lambda = lambda;
    return solver.energies(q, ell, n + 1)[n];
  };

  double derivative = 0.0;
  if (p.lambda - delta >= 0.0) {
    derivative = (energy_at(p.lambda + delta) - energy_at(p.lambda - delta)) / (2.0 * delta);
  } else {
    derivative = (-3.0 * energy_at(p.lambda) + 4.0 * energy_at(p.lambda + delta) -
                  energy_at(p.lambda + 2.0 * delta)) /
                 (2.0 * delta);
  }
  const BoundState s = solver.solve(p, ell)[n];
  const double alpha = p.alpha;
  const double expect = 0.5 * expectation_of(s, [alpha](double r) { return std::pow(r, -alpha); });
  return {derivative, expect};
}

inline double hellmann_feynman_residual(const GshoParams& p, int ell, int n, double delta = 1e-4,
                                        const NumericsConfig& cfg = {}) {
  return hellmann_feynman_check(p, ell, n, delta, cfg).residual();
}

}  // namespace gps
