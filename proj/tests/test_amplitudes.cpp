#include <gtest/gtest.h>

#include <cmath>

#include "mzsim/amplitudes.hpp"
#include "test_support.hpp"

using namespace mzsim;

TEST(Superpose, ComponentwiseAddition) {
  const TwoModeState a{{1, 0}, {0, 0}};
  const TwoModeState b{{0, 0}, {1, 0}};
  EXPECT_EQ(superpose(a, b), (TwoModeState{{1, 0}, {1, 0}}));
}

TEST(Superpose, ZeroIsIdentity) {
  const TwoModeState x{{0.3, -0.2}, {1.5, 0.25}};
  EXPECT_EQ(superpose(x, TwoModeState::zero()), x);
}

TEST(Superpose, DestructiveCancellation) {
  const TwoModeState a{{0.5, 0}, {0, 0}};
  const TwoModeState b{{-0.5, 0}, {0, 0}};
  EXPECT_EQ(superpose(a, b), TwoModeState::zero());
}

TEST(Superpose, CommutativeAndAssociative) {
  proptest::Gen gen(1);
  for (int i = 0; i < 1000; ++i) {
    const auto a = gen.state(), b = gen.state(), c = gen.state();
    EXPECT_LE(max_abs_diff(superpose(a, b), superpose(b, a)), 1e-12);
    EXPECT_LE(max_abs_diff(superpose(superpose(a, b), c), superpose(a, superpose(b, c))), 1e-12);
  }
}

TEST(PortIntensities, ModulusSquared) {
  const auto [pI, pII] = port_intensities({{kInvSqrt2, 0}, {0, kInvSqrt2}});
  EXPECT_NEAR(pI, 0.5, 1e-15);
  EXPECT_NEAR(pII, 0.5, 1e-15);

  const auto single = port_intensities(TwoModeState::unit(Port::I));
  EXPECT_EQ(single.prob_I, 1.0);
  EXPECT_EQ(single.prob_II, 0.0);
}

TEST(PortIntensities, EqualPhasePhasorsOnOnePort) {
  // two 1/sqrt2 contributions with zero relative phase: intensity 2 cos^2(0) = 2
  const ComplexAmp sum = kInvSqrt2 * phasor(0.3) + kInvSqrt2 * phasor(0.3);
  const auto [pI, pII] = port_intensities({sum, {}});
  EXPECT_NEAR(pI, 2.0, 1e-14);
  EXPECT_NEAR(pI / (pI + pII), 1.0, 1e-15);
}

TEST(PortIntensities, NonNegativeForFiniteStates) {
  proptest::Gen gen(2);
  for (int i = 0; i < 1000; ++i) {
    const auto s = gen.state(1e3);
    const auto [a, b] = port_intensities(s);
    EXPECT_GE(a, 0.0);
    EXPECT_GE(b, 0.0);
    EXPECT_TRUE(std::isfinite(total_intensity(s)));
  }
}

TEST(PhaseDifference, Examples) {
  EXPECT_DOUBLE_EQ(phase_difference(kPi, 0.0).radians(), kPi);
  EXPECT_EQ(phase_difference(0.0, 0.0).radians(), 0.0);
  // 0.5 - 3.0 = -2.5, reduced by one full turn
  EXPECT_NEAR(phase_difference(0.5, 3.0).radians(), 3.7831853071795862, 1e-15);
}

TEST(PhaseDifference, CanonicalRange) {
  proptest::Gen gen(3);
  for (int i = 0; i < 10000; ++i) {
    const double d = phase_difference(gen.uniform(-100, 100), gen.uniform(-100, 100)).radians();
    EXPECT_GE(d, 0.0);
    EXPECT_LT(d, kTwoPi);
  }
  EXPECT_EQ(canonical_angle(-1e-300), 0.0);
  EXPECT_EQ(canonical_angle(kTwoPi), 0.0);
}

TEST(PhasorAlgebra, TwoPhasorIntensity) {
  // |e^{i chi1} + e^{i chi2}|^2 = 2 + 2 cos(delta) = 4 cos^2(delta/2)
  for (int k = 0; k < 100; ++k) {
    const double chi1 = 0.37 * k - 5.0;
    const double chi2 = -0.21 * k + 1.3;
    const double delta = phase_difference(chi1, chi2).radians();
    const double lhs = std::norm(phasor(chi1) + phasor(chi2));
    EXPECT_NEAR(lhs, 2.0 + 2.0 * std::cos(delta), 1e-12);
    EXPECT_NEAR(lhs, 4.0 * std::pow(std::cos(delta / 2.0), 2), 1e-12);
  }
}
