#pragma once

#include "mzsim/amplitudes.hpp"

namespace mzsim {

// General 2x2 complex transfer acting on a TwoModeState (or a Jones vector).
//   [out_I ]   [m00 m01] [in_I ]
//   [out_II] = [m10 m11] [in_II]
struct Transfer2 {
  ComplexAmp m00{1.0, 0.0}, m01{}, m10{}, m11{1.0, 0.0};

  static Transfer2 identity() noexcept { return {}; }

  TwoModeState apply(const TwoModeState& s) const noexcept;
  Transfer2 operator*(const Transfer2& rhs) const noexcept;
  Transfer2 adjoint() const noexcept;

  bool operator==(const Transfer2&) const = default;
};

double max_abs_diff(const Transfer2& a, const Transfer2& b) noexcept;

// Lossless two-port splitter. Port I is the transmitted port, port II the
// reflected one; R is always derived as 1 - T.
class BeamSplitterSpec {
 public:
  static constexpr double kDefaultReflectionPhase = kPi / 2.0;

  // Throws DomainError unless T is in [0, 1].
  explicit BeamSplitterSpec(double transmittance, double reflection_phase = kDefaultReflectionPhase);

  static BeamSplitterSpec balanced() { return BeamSplitterSpec(0.5); }

  double transmittance() const noexcept { return transmittance_; }
  double reflectance() const noexcept { return 1.0 - transmittance_; }
  double reflection_phase() const noexcept { return reflection_phase_; }

  // [[sqrt T, -e^{-i phi} sqrt R], [e^{i phi} sqrt R, sqrt T]]; unitary for
  // every phi and symmetric for phi = +-pi/2.
  Transfer2 transfer() const noexcept;

  // Real path-basis coefficients (sqrt T, sqrt R) of the undivided state.
  TwoModeState path_superposition() const noexcept;

  // Attach the mode phasors (1 on the transmitted port, e^{i phi} on the
  // reflected port) to path-basis coefficients.
  TwoModeState to_port_amplitudes(const TwoModeState& path_coeffs) const noexcept;

  bool operator==(const BeamSplitterSpec&) const = default;

 private:
  double transmittance_;
  double reflection_phase_;
};

TwoModeState bs_transfer(ComplexAmp input_port_amp, const BeamSplitterSpec& spec) noexcept;

// Reaction of the splitting medium when the photon commits to one path,
// expressed in the path basis {|psi_I>, |psi_II>}.
struct ApparatusResponse {
  ComplexAmp resp_I{};
  ComplexAmp resp_II{};

  TwoModeState as_state() const noexcept { return {resp_I, resp_II}; }
  bool operator==(const ApparatusResponse&) const = default;
};

// The complement of the committed path relative to the undivided state:
// response = path_superposition(spec) - |psi_taken>. The co-propagating
// component is negative (opposite phase to the photon) whenever T, R > 0.
ApparatusResponse apparatus_response(Port taken, const BeamSplitterSpec& spec = BeamSplitterSpec::balanced()) noexcept;

// |psi_taken> + response. Throws ContractViolation when the response does
// not belong to `taken` (the sum misses the undivided state by > 1e-12).
TwoModeState reconstruct(Port taken, const ApparatusResponse& response,
                         const BeamSplitterSpec& spec = BeamSplitterSpec::balanced());

// Multiply the amplitude on `port` by e^{i delta}.
TwoModeState phase_shift(const TwoModeState& s, Port port, double delta) noexcept;
Transfer2 phase_shift_transfer(Port port, double delta) noexcept;

// ---------------------------------------------------------------------------
// Polarization (kept separate from the path state; no path coupling)

struct JonesVector {
  ComplexAmp h{};
  ComplexAmp v{};

  static JonesVector linear(double theta) noexcept;
  // Helicity +1 is (1, i)/sqrt2, -1 is (1, -i)/sqrt2.
  static JonesVector circular(int helicity) noexcept;

  double norm2() const noexcept { return std::norm(h) + std::norm(v); }
};

struct WaveplateSpec {
  double retardation = 0.0;  // phase of the slow axis relative to the fast axis
  double fast_axis = 0.0;    // angle of the fast axis from H
};

Transfer2 waveplate_transfer(const WaveplateSpec& spec) noexcept;
JonesVector waveplate_apply(const JonesVector& pol, const WaveplateSpec& spec) noexcept;

// Normalized circular component S3/S0 in hbar units: +1, -1 for the two
// circular states, 0 for any linear state.
double spin_component(const JonesVector& pol) noexcept;

// ---------------------------------------------------------------------------
// Stern-Gerlach analyzer for spin 1/2

struct SpinState {
  double polar_angle_phi = 0.0;  // spin axis relative to the field
};

struct SpinProbabilities {
  double p_up;
  double p_down;
};

SpinProbabilities stern_gerlach_probs(double phi) noexcept;

// Angular momentum (hbar) left in the apparatus when the photon spin
// component changes from spin_in to spin_out.
constexpr double beth_transfer(double spin_in, double spin_out) noexcept { return spin_in - spin_out; }

}  // namespace mzsim
