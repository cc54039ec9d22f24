#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "gps/model.hpp"

namespace gps {
namespace {

TEST(Potential, PointValues) {
  EXPECT_DOUBLE_EQ(gsho_v({12, 1, 4}, 1.0), 14.0);
  EXPECT_DOUBLE_EQ(gsho_v({0, 0, 7}, 2.0), 4.0);
  EXPECT_DOUBLE_EQ(gsho_v({20, 50, 4}, 2.0), 12.125);
  EXPECT_THROW(gsho_v({12, 1, 4}, 0.0), std::domain_error);
}

TEST(Potential, EffectivePotentialHalvesV) {
  EXPECT_DOUBLE_EQ(effective_potential({12, 1, 4}, 0, 1.0), 7.0);
  EXPECT_DOUBLE_EQ(effective_potential({0, 0, 4}, 1, 1.0), 1.5);
  EXPECT_DOUBLE_EQ(effective_potential({12, 0.001, 4}, 0, 2.0), 3.50003125);
}

TEST(Potential, PositiveAndConfining) {
  const GshoParams sets[] = {{0, 0, 4}, {12, 1, 4}, {5, 0.005, 6}, {25, 50, 6}, {0, 3, 1.5}};
  for (const GshoParams& p : sets) {
    for (double r : {1e-3, 0.1, 1.0, 10.0, 100.0}) EXPECT_GT(gsho_v(p, r), 0.0);
    EXPECT_GT(effective_potential(p, 1, 1e-4), 1e6);
    EXPECT_GT(effective_potential(p, 0, 1e3), 1e5);
  }
}

TEST(Parameters, Validation) {
  EXPECT_NO_THROW(validate({0, 0, 4}));
  EXPECT_THROW(validate({-1, 0, 4}), std::domain_error);
  EXPECT_THROW(validate({0, -1, 4}), std::domain_error);
  EXPECT_THROW(validate({0, 0, 0}), std::domain_error);
}

TEST(EffectiveEll, ClosedForms) {
  EXPECT_DOUBLE_EQ(effective_ell(12, 0), 3.0);
  EXPECT_DOUBLE_EQ(effective_ell(0, 2), 2.0);
  EXPECT_NEAR(effective_ell(12, 1), (-1 + std::sqrt(57.0)) / 2, 1e-15);
  EXPECT_NEAR(effective_ell(12, 1), 3.274917218, 1e-9);
  const double l = effective_ell(7.3, 2);
  EXPECT_NEAR(l * (l + 1), 6 + 7.3, 1e-13);
}

TEST(AnalyticLimit, Energies) {
  EXPECT_DOUBLE_EQ(analytic_energy_lambda0(12, 0, 0), 4.5);
  EXPECT_DOUBLE_EQ(analytic_energy_lambda0(12, 0, 1), 6.5);
  EXPECT_DOUBLE_EQ(analytic_energy_lambda0(0, 0, 0), 1.5);
  EXPECT_NEAR(analytic_energy_lambda0(12, 1, 0), (2 + std::sqrt(57.0)) / 2, 1e-15);
  EXPECT_NEAR(analytic_energy_lambda0(12, 1, 0), 4.774917218, 1e-9);
  for (int n = 0; n < 4; ++n)
    for (int l = 0; l < 4; ++l) EXPECT_DOUBLE_EQ(analytic_energy_lambda0(0, l, n), 2 * n + l + 1.5);
}

TEST(AnalyticLimit, StrictlyIncreasing) {
  for (int n = 0; n < 4; ++n) {
    for (int l = 0; l < 4; ++l) {
      for (double A : {0.0, 5.0, 12.0, 30.0}) {
        const double e = analytic_energy_lambda0(A, l, n);
        EXPECT_LT(e, analytic_energy_lambda0(A, l, n + 1));
        EXPECT_LT(e, analytic_energy_lambda0(A, l + 1, n));
        EXPECT_LT(e, analytic_energy_lambda0(A + 1, l, n));
      }
    }
  }
}

}  // namespace
}  // namespace gps
