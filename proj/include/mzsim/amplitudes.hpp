#pragma once

#include <complex>
#include <numbers>
#include <utility>

namespace mzsim {

using ComplexAmp = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInvSqrt2 = 0.70710678118654752440;

enum class Port { I, II };

constexpr Port other(Port p) noexcept { return p == Port::I ? Port::II : Port::I; }
constexpr const char* to_string(Port p) noexcept { return p == Port::I ? "I" : "II"; }

// Complex amplitudes on the two output ports of a two-port element.
// Amplitudes are dimensionless and normalized so that intensity is probability.
struct TwoModeState {
  ComplexAmp amp_I{};
  ComplexAmp amp_II{};

  static TwoModeState zero() noexcept { return {}; }
  static TwoModeState unit(Port p) noexcept {
    return p == Port::I ? TwoModeState{{1.0, 0.0}, {}} : TwoModeState{{}, {1.0, 0.0}};
  }

  ComplexAmp& operator[](Port p) noexcept { return p == Port::I ? amp_I : amp_II; }
  const ComplexAmp& operator[](Port p) const noexcept { return p == Port::I ? amp_I : amp_II; }

  bool operator==(const TwoModeState&) const = default;
};

TwoModeState superpose(const TwoModeState& a, const TwoModeState& b) noexcept;
TwoModeState operator+(const TwoModeState& a, const TwoModeState& b) noexcept;
TwoModeState operator-(const TwoModeState& a, const TwoModeState& b) noexcept;
TwoModeState operator*(ComplexAmp c, const TwoModeState& s) noexcept;

struct PortIntensities {
  double prob_I;
  double prob_II;
};

// (|amp_I|^2, |amp_II|^2). For a unit-norm state these are the Born
// probabilities of the two ports.
PortIntensities port_intensities(const TwoModeState& s) noexcept;
double total_intensity(const TwoModeState& s) noexcept;

bool is_finite(ComplexAmp a) noexcept;
bool is_finite(const TwoModeState& s) noexcept;

// Max componentwise distance, used for the exactness checks.
double max_abs_diff(const TwoModeState& a, const TwoModeState& b) noexcept;

// Phase difference chi1 - chi2, stored canonically in [0, 2pi).
class PhaseDifference {
 public:
  constexpr PhaseDifference() = default;
  explicit PhaseDifference(double radians) noexcept;

  double radians() const noexcept { return radians_; }

  bool operator==(const PhaseDifference&) const = default;

 private:
  double radians_ = 0.0;
};

// Reduce an arbitrary angle into [0, 2pi).
double canonical_angle(double radians) noexcept;

PhaseDifference phase_difference(double chi1, double chi2) noexcept;

// e^{i theta}
ComplexAmp phasor(double theta) noexcept;

}  // namespace mzsim
