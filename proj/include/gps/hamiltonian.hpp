#pragma once

// Symmetrized Legendre pseudospectral discretization of the mapped radial
// Hamiltonian. Only interior collocation points carry unknowns, which builds
// the Dirichlet conditions psi(0) = psi(r_max) = 0 into the matrix.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gps/collocation.hpp"
#include "gps/matrix.hpp"
#include "gps/model.hpp"

namespace gps {

/// A collocation grid together with its image under the radial map.
/// Vectors are indexed over all N + 1 nodes; interior node i of the
/// Hamiltonian is node i + 1 here.
struct MappedGrid {
  CollocationGrid grid;
  MapParams map;
  std::vector<double> r;
  std::vector<double> rprime;

  MappedGrid(CollocationGrid g, const MapParams& m) : grid(std::move(g)), map(m) {
    r.resize(grid.size());
    rprime.resize(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const MappedPoint pt = map_point(map, grid.nodes[j]);
      r[j] = pt.r;
      rprime[j] = pt.rprime;
    }
  }

  [[nodiscard]] int order() const { return grid.order; }
  [[nodiscard]] std::size_t interior_count() const { return grid.size() - 2; }
};

/// D_ij = -2 / [r'_i (x_i - x_j)^2 r'_j] for i != j,
/// D_ii = -N(N+1) / [3 r'_i^2 (1 - x_i^2)], over interior nodes.
inline SquareMatrix second_derivative_matrix(const MappedGrid& mg) {
  if (mg.order() < 2) throw std::domain_error("second_derivative_matrix: order must be >= 2");
  const std::size_t dim = mg.interior_count();
  const double n = mg.order();
  const auto& x = mg.grid.nodes;
  const auto& rp = mg.rprime;
  SquareMatrix d(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t a = i + 1;
    d(i, i) = -n * (n + 1.0) / (3.0 * rp[a] * rp[a] * (1.0 - x[a] * x[a]));
    for (std::size_t j = 0; j < i; ++j) {
      const std::size_t b = j + 1;
      const double dx = x[a] - x[b];
      const double value = -2.0 / (rp[a] * dx * dx * rp[b]);
      d(i, j) = value;
      d(j, i) = value;
    }
  }
  return d;
}

struct SpectralHamiltonian {
  SquareMatrix entries;       // (N-1) x (N-1)
  std::vector<double> diagonal_potential;  // u_i
  GshoParams params;
  int ell = 0;

  [[nodiscard]] std::size_t dim() const { return entries.dim(); }
};

/// H_ij = -D_ij / 2 + u_i delta_ij with u_i = l(l+1)/(2 r_i^2) + v(r_i)/2.
inline SpectralHamiltonian assemble_hamiltonian(const MappedGrid& mg, const SquareMatrix& d,
                                                const GshoParams& p, int ell) {
  validate(p);
  if (ell < 0) throw std::domain_error("assemble_hamiltonian: ell must be >= 0");
  const std::size_t dim = mg.interior_count();
  if (d.dim() != dim) throw std::invalid_argument("assemble_hamiltonian: D has wrong size");

  SpectralHamiltonian h{SquareMatrix(dim), std::vector<double>(dim), p, ell};
  for (std::size_t i = 0; i < dim; ++i) {
    h.diagonal_potential[i] = effective_potential(p, ell, mg.r[i + 1]);
    for (std::size_t j = 0; j < dim; ++j) h.entries(i, j) = -0.5 * d(i, j);
    h.entries(i, i) += h.diagonal_potential[i];
  }
  return h;
}

inline SpectralHamiltonian assemble_hamiltonian(const MappedGrid& mg, const GshoParams& p,
                                                int ell) {
  return assemble_hamiltonian(mg, second_derivative_matrix(mg), p, ell);
}

}  // namespace gps
