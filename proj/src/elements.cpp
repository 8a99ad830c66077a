#include "mzsim/elements.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mzsim/errors.hpp"

namespace mzsim {

TwoModeState Transfer2::apply(const TwoModeState& s) const noexcept {
  return {m00 * s.amp_I + m01 * s.amp_II, m10 * s.amp_I + m11 * s.amp_II};
}

Transfer2 Transfer2::operator*(const Transfer2& r) const noexcept {
  return {m00 * r.m00 + m01 * r.m10, m00 * r.m01 + m01 * r.m11,
          m10 * r.m00 + m11 * r.m10, m10 * r.m01 + m11 * r.m11};
}

Transfer2 Transfer2::adjoint() const noexcept {
  return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

double max_abs_diff(const Transfer2& a, const Transfer2& b) noexcept {
  return std::max({std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01), std::abs(a.m10 - b.m10),
                   std::abs(a.m11 - b.m11)});
}

BeamSplitterSpec::BeamSplitterSpec(double transmittance, double reflection_phase)
    : transmittance_(transmittance), reflection_phase_(reflection_phase) {
  if (!(transmittance >= 0.0 && transmittance <= 1.0)) {
    throw DomainError("beam splitter transmittance must lie in [0, 1], got " + std::to_string(transmittance));
  }
  if (!std::isfinite(reflection_phase)) throw DomainError("beam splitter reflection phase must be finite");
}

Transfer2 BeamSplitterSpec::transfer() const noexcept {
  const double t = std::sqrt(transmittance_);
  const double r = std::sqrt(reflectance());
  return {ComplexAmp(t, 0.0), -std::conj(phasor(reflection_phase_)) * r, phasor(reflection_phase_) * r,
          ComplexAmp(t, 0.0)};
}

TwoModeState BeamSplitterSpec::path_superposition() const noexcept {
  return {ComplexAmp(std::sqrt(transmittance_), 0.0), ComplexAmp(std::sqrt(reflectance()), 0.0)};
}

TwoModeState BeamSplitterSpec::to_port_amplitudes(const TwoModeState& path_coeffs) const noexcept {
  return {path_coeffs.amp_I, path_coeffs.amp_II * phasor(reflection_phase_)};
}

TwoModeState bs_transfer(ComplexAmp input_port_amp, const BeamSplitterSpec& spec) noexcept {
  return spec.transfer().apply({input_port_amp, {}});
}

ApparatusResponse apparatus_response(Port taken, const BeamSplitterSpec& spec) noexcept {
  const TwoModeState r = spec.path_superposition() - TwoModeState::unit(taken);
  return {r.amp_I, r.amp_II};
}

TwoModeState reconstruct(Port taken, const ApparatusResponse& response, const BeamSplitterSpec& spec) {
  TwoModeState combined = TwoModeState::unit(taken) + response.as_state();
  if (max_abs_diff(combined, spec.path_superposition()) > 1e-12) {
    throw ContractViolation(std::string("apparatus response does not complement path ") + to_string(taken));
  }
  return combined;
}

TwoModeState phase_shift(const TwoModeState& s, Port port, double delta) noexcept {
  TwoModeState out = s;
  out[port] *= phasor(delta);
  return out;
}

Transfer2 phase_shift_transfer(Port port, double delta) noexcept {
  Transfer2 t = Transfer2::identity();
  (port == Port::I ? t.m00 : t.m11) = phasor(delta);
  return t;
}

JonesVector JonesVector::linear(double theta) noexcept {
  return {ComplexAmp(std::cos(theta), 0.0), ComplexAmp(std::sin(theta), 0.0)};
}

JonesVector JonesVector::circular(int helicity) noexcept {
  return {ComplexAmp(kInvSqrt2, 0.0), ComplexAmp(0.0, helicity >= 0 ? kInvSqrt2 : -kInvSqrt2)};
}

Transfer2 waveplate_transfer(const WaveplateSpec& spec) noexcept {
  const double c = std::cos(spec.fast_axis);
  const double s = std::sin(spec.fast_axis);
  const Transfer2 to_lab{c, -s, s, c};
  const Transfer2 to_axes{c, s, -s, c};
  const Transfer2 retard{1.0, 0.0, 0.0, phasor(spec.retardation)};
  return to_lab * retard * to_axes;
}

JonesVector waveplate_apply(const JonesVector& pol, const WaveplateSpec& spec) noexcept {
  const TwoModeState out = waveplate_transfer(spec).apply({pol.h, pol.v});
  return {out.amp_I, out.amp_II};
}

double spin_component(const JonesVector& pol) noexcept {
  const double n = pol.norm2();
  if (n == 0.0) return 0.0;
  return 2.0 * (std::conj(pol.h) * pol.v).imag() / n;
}

SpinProbabilities stern_gerlach_probs(double phi) noexcept {
  const double c = std::cos(phi / 2.0);
  const double s = std::sin(phi / 2.0);
  return {c * c, s * s};
}

}  // namespace mzsim
