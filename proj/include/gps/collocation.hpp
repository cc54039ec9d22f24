#pragma once

// Legendre polynomials, Legendre-Gauss-Lobatto grids and the algebraic map
// of [-1, 1] onto the truncated half line [0, r_max].

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gps/errors.hpp"

namespace gps {

struct LegendreValue {
  double p;    // P_N(x)
  double dp;   // P_N'(x)
  double d2p;  // P_N''(x)
};

/// Evaluates P_N and its first two derivatives by the three-term recurrence.
/// The second derivative comes from the Legendre differential equation; at
/// x = +-1 the analytic endpoint limits are used instead.
inline LegendreValue legendre_eval(int order, double x) {
  if (order < 0) throw std::domain_error("legendre_eval: negative order");
  if (!(std::abs(x) <= 1.0)) throw std::domain_error("legendre_eval: |x| > 1");

  const double n = order;
  if (std::abs(x) == 1.0) {
    const double sign_p = (x < 0.0 && order % 2 == 1) ? -1.0 : 1.0;
    // P'_N(+-1) = (+-1)^{N-1} N(N+1)/2, P''_N(+-1) = (+-1)^N (N-1)N(N+1)(N+2)/8
    const double sign_dp = (x < 0.0 && order % 2 == 0) ? -1.0 : 1.0;
    return {sign_p, sign_dp * n * (n + 1.0) / 2.0,
            sign_p * (n - 1.0) * n * (n + 1.0) * (n + 2.0) / 8.0};
  }
  if (order == 0) return {1.0, 0.0, 0.0};

  double p_prev = 1.0;
  double p = x;
  for (int k = 2; k <= order; ++k) {
    const double p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
    p_prev = p;
    p = p_next;
  }
  const double one_minus_x2 = 1.0 - x * x;
  const double dp = n * (p_prev - x * p) / one_minus_x2;
  const double d2p = (2.0 * x * dp - n * (n + 1.0) * p) / one_minus_x2;
  return {p, dp, d2p};
}

/// Endpoint-inclusive Legendre-Gauss-Lobatto grid of order N (N + 1 nodes).
struct CollocationGrid {
  int order = 0;
  std::vector<double> nodes;      // ascending, nodes.front() == -1, nodes.back() == 1
  std::vector<double> pn_values;  // P_N(x_j)
  std::vector<double> weights;    // 2 / [N(N+1) P_N(x_j)^2]

  [[nodiscard]] std::size_t size() const { return nodes.size(); }
};

/// Builds the LGL grid. Interior nodes are the roots of P'_N, located by
/// Newton iteration on P'_N seeded with the Chebyshev-Gauss-Lobatto points.
inline CollocationGrid lgl_grid(int order) {
  if (order < 2) throw std::domain_error("lgl_grid: order must be >= 2");
  constexpr int kMaxIterations = 100;
  constexpr double kTolerance = 1e-15;

  CollocationGrid grid;
  grid.order = order;
  grid.nodes.resize(order + 1);
  grid.nodes.front() = -1.0;
  grid.nodes.back() = 1.0;

  // Roots come in +- pairs; only the upper half is iterated and mirrored.
  for (int j = 1; j <= order / 2; ++j) {
    double x = std::cos(std::numbers::pi * j / order);
    bool converged = false;
    for (int it = 0; it < kMaxIterations; ++it) {
      const LegendreValue v = legendre_eval(order, x);
      const double step = v.dp / v.d2p;
      x -= step;
      if (std::abs(step) <= kTolerance) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw NumericError("lgl_grid: Newton iteration did not converge for order " +
                         std::to_string(order));
    }
    grid.nodes[order - j] = x;
    grid.nodes[j] = -x;
  }
  if (order % 2 == 0) grid.nodes[order / 2] = 0.0;

  const double n = order;
  grid.pn_values.resize(order + 1);
  grid.weights.resize(order + 1);
  for (int j = 0; j <= order; ++j) {
    const double p = legendre_eval(order, grid.nodes[j]).p;
    grid.pn_values[j] = p;
    grid.weights[j] = 2.0 / (n * (n + 1.0) * p * p);
  }
  return grid;
}

/// Parameters of r(x) = L (1 + x) / (1 - x + gamma) with gamma = 2 L / r_max.
struct MapParams {
  double scale = 0.0;  // L
  double r_max = 0.0;
  double gamma = 0.0;
};

inline MapParams make_map(double scale, double r_max) {
  if (!(scale > 0.0) || !(r_max > 0.0)) {
    throw std::domain_error("make_map: L and r_max must be positive");
  }
  return {scale, r_max, 2.0 * scale / r_max};
}

struct MappedPoint {
  double r;
  double rprime;  // dr/dx
};

inline MappedPoint map_point(const MapParams& m, double x) {
  if (!(std::abs(x) <= 1.0)) throw std::domain_error("map_point: |x| > 1");
  if (x == 1.0) return {m.r_max, m.scale * (2.0 + m.gamma) / (m.gamma * m.gamma)};
  const double denom = 1.0 - x + m.gamma;
  return {m.scale * (1.0 + x) / denom, m.scale * (2.0 + m.gamma) / (denom * denom)};
}

/// Cardinal (Lagrange) function of node j on the LGL grid:
///   g_j(x) = -(1 - x^2) P'_N(x) / [N(N+1) P_N(x_j) (x - x_j)],  g_j(x_i) = delta_ij.
inline double cardinal_function(const CollocationGrid& grid, std::size_t j, double x) {
  const double xj = grid.nodes.at(j);
  if (x == xj) return 1.0;
  const double n = grid.order;
  const double dp = legendre_eval(grid.order, x).dp;
  return -(1.0 - x * x) * dp / (n * (n + 1.0) * grid.pn_values[j] * (x - xj));
}

/// Evaluates the degree-N interpolant through (x_j, values[j]).
inline double interpolate(const CollocationGrid& grid, std::span<const double> values, double x) {
  if (values.size() != grid.size()) throw std::invalid_argument("interpolate: size mismatch");
  for (std::size_t j = 0; j < grid.size(); ++j)
    if (x == grid.nodes[j]) return values[j];
  const double n = grid.order;
  const double scale = -(1.0 - x * x) * legendre_eval(grid.order, x).dp / (n * (n + 1.0));
  double acc = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j)
    acc += values[j] / (grid.pn_values[j] * (x - grid.nodes[j]));
  return scale * acc;
}

/// Inverse of r(x): x = [r (1 + gamma) - L] / (r + L).
inline double map_inverse(const MapParams& m, double r) {
  if (!(r >= 0.0) || r > m.r_max) throw std::domain_error("map_inverse: r outside [0, r_max]");
  if (r == m.r_max) return 1.0;
  return (r * (1.0 + m.gamma) - m.scale) / (r + m.scale);
}

}  // namespace gps
