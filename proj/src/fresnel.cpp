#include "mzsim/fresnel.hpp"

#include <algorithm>
#include <cmath>

#include "mzsim/errors.hpp"

namespace mzsim::fresnel {

double dipole_moment(const DipoleParams& p) {
  if (p.omega == 0.0) throw DomainError("dipole_moment: omega = 0 is a singularity");
  if (!(p.m > 0.0)) throw DomainError("dipole_moment: mass must be positive");
  return -p.q * p.q * p.E / (p.m * p.omega * p.omega);
}

double BoundaryResidual::max() const noexcept { return std::max({normal_displacement, tangential_E, magnetic}); }

BoundaryResidual check_boundary(const FieldTriple& side1, const FieldTriple& side2) noexcept {
  BoundaryResidual res;
  const double d1 = side1.epsilon0 * side1.E[2] + side1.P[2];
  const double d2 = side2.epsilon0 * side2.E[2] + side2.P[2];
  res.normal_displacement = std::abs(d1 - d2);
  res.tangential_E = std::max(std::abs(side1.E[0] - side2.E[0]), std::abs(side1.E[1] - side2.E[1]));
  for (int k = 0; k < 3; ++k) res.magnetic = std::max(res.magnetic, std::abs(side1.B[k] - side2.B[k]));
  return res;
}

FresnelCoefficients fresnel_coeffs(const InterfaceSpec& iface) {
  if (!(iface.n1 >= 1.0) || !(iface.n2 >= 1.0) || !std::isfinite(iface.n1) || !std::isfinite(iface.n2)) {
    throw DomainError("refractive indices must be finite and >= 1");
  }
  const double sum = iface.n1 + iface.n2;
  const double r = (iface.n1 - iface.n2) / sum;
  const double t = 2.0 * iface.n1 / sum;
  return {r, t, r * r, (iface.n2 / iface.n1) * t * t};
}

std::array<FieldTriple, 2> normal_incidence_fields(const InterfaceSpec& iface, const FresnelCoefficients& c,
                                                   double e0) {
  const auto medium = [](double n, double ex, double by) {
    FieldTriple f;
    f.E = {ex, 0.0, 0.0};
    f.B = {0.0, by, 0.0};
    f.P = {kVacuumPermittivity * (n * n - 1.0) * ex, 0.0, 0.0};
    return f;
  };
  // B = n E / c, with the reflected wave travelling along -z
  const FieldTriple side1 = medium(iface.n1, e0 * (1.0 + c.r), iface.n1 * e0 * (1.0 - c.r) / kSpeedOfLight);
  const FieldTriple side2 = medium(iface.n2, e0 * c.t, iface.n2 * e0 * c.t / kSpeedOfLight);
  return {side1, side2};
}

BeamSplitterSpec bs_from_interface(const InterfaceSpec& iface) {
  const FresnelCoefficients c = fresnel_coeffs(iface);
  const double phase = BeamSplitterSpec::kDefaultReflectionPhase + (c.r < 0.0 ? kPi : 0.0);
  return BeamSplitterSpec(std::clamp(c.T, 0.0, 1.0), canonical_angle(phase));
}

}  // namespace mzsim::fresnel
