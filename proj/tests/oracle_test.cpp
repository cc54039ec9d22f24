#include <cmath>

#include <gtest/gtest.h>

#include "gps/oracle.hpp"
#include "gps/spectrum.hpp"

namespace gps {
namespace {

TEST(Numerov, OscillatorLevels) {
  EXPECT_NEAR(numerov_energy({0, 0, 4}, 0, 0), 1.5, 1e-8);
  EXPECT_NEAR(numerov_energy({0, 0, 4}, 2, 1), 5.5, 1e-8);
}

TEST(Numerov, InverseSquareLevels) {
  EXPECT_NEAR(numerov_energy({12, 0, 4}, 0, 1), 6.5, 1e-8);
}

TEST(Numerov, SpikedGroundState) {
  EXPECT_NEAR(numerov_energy({12, 1, 4}, 0, 0), 4.55432930, 1e-7);
}

TEST(Numerov, AgreesWithSpectralSolver) {
  const SpectralSolver spectral(NumericsConfig{});
  for (double lambda : {0.001, 0.01, 0.1, 1.0, 10.0, 100.0}) {
    const GshoParams p{12, lambda, 4};
    EXPECT_NEAR(numerov_energy(p, 0, 0), spectral.energies(p, 0, 1)[0], 1e-7) << "lambda=" << lambda;
  }
  const GshoParams steep{5, 50, 6};
  EXPECT_NEAR(numerov_energy(steep, 1, 1), spectral.energies(steep, 1, 2)[1], 1e-7);
}

TEST(Numerov, StepHalvingIsInvariant) {
  ShootingConfig fine;
  fine.step = 5e-4;
  const GshoParams p{12, 10, 4};
  EXPECT_NEAR(numerov_energy(p, 0, 0), numerov_energy(p, 0, 0, fine), 1e-9);
}

TEST(Numerov, RejectsBadConfig) {
  ShootingConfig c;
  c.step = 0.0;
  EXPECT_THROW(numerov_energy({12, 1, 4}, 0, 0, c), std::invalid_argument);
  c = {};
  c.r_min = 30.0;
  EXPECT_THROW(numerov_energy({12, 1, 4}, 0, 0, c), std::invalid_argument);
  EXPECT_THROW(numerov_energy({12, 1, 4}, -1, 0), std::domain_error);
}

}  // namespace
}  // namespace gps
