#pragma once

// Macroscopic grounding of the splitter: induced dipole moment, boundary
// conditions at a dielectric interface, normal-incidence Fresnel
// coefficients. SI units throughout this header; the rest of the library is
// dimensionless.

#include <array>

#include "mzsim/elements.hpp"

namespace mzsim::fresnel {

inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kSpeedOfLight = 299792458.0;              // m/s

using Vec3 = std::array<double, 3>;

struct DipoleParams {
  double q = 0.0;      // C
  double m = 0.0;      // kg, > 0
  double omega = 0.0;  // rad/s, > 0
  double E = 0.0;      // V/m
};

// Bound-electron oscillator response -q^2 E / (m omega^2), in C m.
// Throws DomainError for omega == 0 or m <= 0.
double dipole_moment(const DipoleParams& p);

struct FieldTriple {
  Vec3 E{};  // V/m
  Vec3 B{};  // T
  Vec3 P{};  // C/m^2
  double epsilon0 = kVacuumPermittivity;
};

// Mismatches of the three interface conditions for a boundary with normal z.
struct BoundaryResidual {
  double normal_displacement = 0.0;  // |(eps0 E + P)_z| jump
  double tangential_E = 0.0;         // max over x, y of the E jump
  double magnetic = 0.0;             // max-norm of the B jump

  double max() const noexcept;
};

BoundaryResidual check_boundary(const FieldTriple& side1, const FieldTriple& side2) noexcept;

struct InterfaceSpec {
  double n1 = 1.0;
  double n2 = 1.0;
  bool operator==(const InterfaceSpec&) const = default;
};

struct FresnelCoefficients {
  double r;  // amplitude reflection
  double t;  // amplitude transmission
  double R;  // energy reflectance, r^2
  double T;  // energy transmittance, (n2/n1) t^2
};

// Normal incidence from medium 1 into medium 2. Throws DomainError unless
// n1, n2 >= 1.
FresnelCoefficients fresnel_coeffs(const InterfaceSpec& iface);

// Fields just either side of the interface for an x-polarized wave of
// amplitude e0 incident from medium 1 along +z; side 1 carries the incident
// plus reflected wave, side 2 the transmitted wave.
std::array<FieldTriple, 2> normal_incidence_fields(const InterfaceSpec& iface, const FresnelCoefficients& c,
                                                   double e0 = 1.0);

// Splitter with T from the Fresnel coefficients. The reflected port carries
// the pi/2 splitter convention, plus pi when r < 0 (reflection off the
// denser medium).
BeamSplitterSpec bs_from_interface(const InterfaceSpec& iface);

}  // namespace mzsim::fresnel
