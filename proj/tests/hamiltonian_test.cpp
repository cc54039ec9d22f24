#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gps/eigen.hpp"
#include "gps/hamiltonian.hpp"
#include "support/grid_functions.hpp"

namespace gps {
namespace {

MappedGrid default_grid(int order = 200, double r_max = 300.0, double scale = 25.0) {
  return MappedGrid(lgl_grid(order), make_map(scale, r_max));
}

double lowest(const MappedGrid& mg, const GshoParams& p, int ell, std::size_t k = 0) {
  return eigh(assemble_hamiltonian(mg, p, ell).entries, false).values.at(k);
}

TEST(SecondDerivative, SymmetricWithNegativeDiagonal) {
  const MappedGrid mg = default_grid(60);
  const SquareMatrix d = second_derivative_matrix(mg);
  ASSERT_EQ(d.dim(), 59u);
  EXPECT_TRUE(d.is_symmetric());
  for (std::size_t i = 0; i < d.dim(); ++i) EXPECT_LT(d(i, i), 0.0);
}

TEST(SecondDerivative, SineModeOnUnitGamma) {
  const double r_max = 10.0;
  const MappedGrid mg = default_grid(30, r_max, r_max / 2);
  ASSERT_DOUBLE_EQ(mg.map.gamma, 1.0);
  const double k = std::numbers::pi / r_max;
  const auto chi = testing::sample_chi(mg, [k](double r) { return std::sin(k * r); });
  const auto dchi = second_derivative_matrix(mg).multiply(chi);
  double err = 0.0;
  for (std::size_t i = 0; i < chi.size(); ++i) err = std::max(err, std::abs(-0.5 * dchi[i] - 0.5 * k * k * chi[i]));
  EXPECT_LE(err, 1e-6 * 0.5 * k * k * testing::max_abs(chi));
}

TEST(Hamiltonian, SymmetricAndSized) {
  const MappedGrid mg = default_grid(80);
  const auto h = assemble_hamiltonian(mg, {12, 1, 4}, 2);
  EXPECT_EQ(h.dim(), 79u);
  EXPECT_TRUE(h.entries.is_symmetric());
  EXPECT_EQ(h.ell, 2);
  EXPECT_THROW(assemble_hamiltonian(mg, {12, 1, 4}, -1), std::domain_error);
  EXPECT_THROW(assemble_hamiltonian(mg, SquareMatrix(3), {12, 1, 4}, 0), std::invalid_argument);
}

TEST(Hamiltonian, OscillatorGroundStateResidual) {
  const MappedGrid mg = default_grid();
  const auto h = assemble_hamiltonian(mg, {0, 0, 4}, 0);
  const auto chi = testing::sample_chi(mg, [](double r) { return r * std::exp(-0.5 * r * r); });
  const auto hchi = h.entries.multiply(chi);
  double err = 0.0;
  for (std::size_t i = 0; i < chi.size(); ++i) err = std::max(err, std::abs(hchi[i] - 1.5 * chi[i]));
  EXPECT_LE(err / testing::max_abs(chi), 1e-9);
}

TEST(Hamiltonian, OscillatorSpectrum) {
  const MappedGrid mg = default_grid();
  const auto values = eigh(assemble_hamiltonian(mg, {0, 0, 4}, 0).entries, false).values;
  EXPECT_NEAR(values[0], 1.5, 1e-10);
  EXPECT_NEAR(values[1], 3.5, 1e-10);
  EXPECT_NEAR(values[2], 5.5, 1e-10);
}

TEST(Hamiltonian, PureInverseSquareShift) {
  const MappedGrid mg = default_grid();
  EXPECT_NEAR(lowest(mg, {20, 0, 4}, 0), 5.5, 1e-10);
}

TEST(Hamiltonian, SpikedGroundState) {
  EXPECT_NEAR(lowest(default_grid(), {12, 1, 4}, 0), 4.55432930375, 1e-8);
}

TEST(Hamiltonian, InsensitiveToTruncationRadius) {
  const GshoParams p{12, 1, 4};
  const double a = lowest(default_grid(200, 300.0), p, 0);
  const double b = lowest(default_grid(200, 200.0), p, 0);
  EXPECT_NEAR(a, b, 1e-10);
}

TEST(Hamiltonian, StableUnderRefinement) {
  const GshoParams p{12, 10, 4};
  for (int ell : {0, 3}) {
    EXPECT_NEAR(lowest(default_grid(160), p, ell), lowest(default_grid(200), p, ell), 1e-10);
    EXPECT_NEAR(lowest(default_grid(160), p, ell, 1), lowest(default_grid(200), p, ell, 1), 1e-10);
  }
}

TEST(Hamiltonian, GershgorinLowerBound) {
  const auto h = assemble_hamiltonian(default_grid(120), {5, 2, 6}, 1);
  double bound = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < h.dim(); ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (j != i) off += std::abs(h.entries(i, j));
    bound = std::min(bound, h.entries(i, i) - off);
  }
  EXPECT_GE(eigh(h.entries, false).values[0], bound);
}

}  // namespace
}  // namespace gps
