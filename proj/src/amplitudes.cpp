#include "mzsim/amplitudes.hpp"

#include <algorithm>
#include <cmath>

namespace mzsim {

TwoModeState superpose(const TwoModeState& a, const TwoModeState& b) noexcept {
  return {a.amp_I + b.amp_I, a.amp_II + b.amp_II};
}

TwoModeState operator+(const TwoModeState& a, const TwoModeState& b) noexcept {
  return superpose(a, b);
}

TwoModeState operator-(const TwoModeState& a, const TwoModeState& b) noexcept {
  return {a.amp_I - b.amp_I, a.amp_II - b.amp_II};
}

TwoModeState operator*(ComplexAmp c, const TwoModeState& s) noexcept {
  return {c * s.amp_I, c * s.amp_II};
}

PortIntensities port_intensities(const TwoModeState& s) noexcept {
  return {std::norm(s.amp_I), std::norm(s.amp_II)};
}

double total_intensity(const TwoModeState& s) noexcept {
  const auto [a, b] = port_intensities(s);
  return a + b;
}

bool is_finite(ComplexAmp a) noexcept {
  return std::isfinite(a.real()) && std::isfinite(a.imag());
}

bool is_finite(const TwoModeState& s) noexcept { return is_finite(s.amp_I) && is_finite(s.amp_II); }

double max_abs_diff(const TwoModeState& a, const TwoModeState& b) noexcept {
  return std::max({std::abs(a.amp_I.real() - b.amp_I.real()), std::abs(a.amp_I.imag() - b.amp_I.imag()),
                   std::abs(a.amp_II.real() - b.amp_II.real()),
                   std::abs(a.amp_II.imag() - b.amp_II.imag())});
}

double canonical_angle(double radians) noexcept {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi
  if (r >= kTwoPi) r = 0.0;
  return r;
}

PhaseDifference::PhaseDifference(double radians) noexcept : radians_(canonical_angle(radians)) {}

PhaseDifference phase_difference(double chi1, double chi2) noexcept { return PhaseDifference(chi1 - chi2); }

ComplexAmp phasor(double theta) noexcept { return std::polar(1.0, theta); }

}  // namespace mzsim
