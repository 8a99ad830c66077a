#pragma once

// Line-oriented experiment description:
//
//   # comment to end of line
//   experiment mach_zehnder | single_bs | stern_gerlach
//   engine born | rebalance_greedy | rebalance_biased [kappa]
//   photons 100000
//   seed 42
//   delta 1.5707963267948966          (mach_zehnder)
//   phi 2.0943951023931957            (stern_gerlach)
//   transmittance 0.5                 (single_bs)
//   splitter from_interface 1 1.5     (single_bs, instead of transmittance)
//   arrival fixed 1.0 | arrival poisson 1000
//   tau inf
//   sweep delta 0 6.283185307 16      (half-open grid start + k (stop-start)/steps)
//   replicas 1
//   output results.csv

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mzsim/experiments.hpp"
#include "mzsim/fresnel.hpp"

namespace mzsim {

enum class SweepParam { delta, phi, tau };

std::string_view to_string(SweepParam p) noexcept;

struct SweepSpec {
  SweepParam param = SweepParam::delta;
  double start = 0.0;
  double stop = 1.0;
  std::uint64_t steps = 2;

  std::vector<double> points() const;
  bool operator==(const SweepSpec&) const = default;
};

struct ConfigDocument {
  ExperimentKind experiment = ExperimentKind::mach_zehnder;
  EngineKind engine = BornEngine{};
  std::uint64_t photons = 10000;
  std::uint64_t seed = 0;
  std::optional<double> delta;
  std::optional<double> phi;
  std::optional<double> transmittance;
  std::optional<fresnel::InterfaceSpec> splitter;
  ArrivalProcess arrival = FixedArrival{1.0};
  double tau = std::numeric_limits<double>::infinity();
  std::optional<SweepSpec> sweep;
  std::uint64_t replicas = 1;
  std::optional<std::string> output;

  bool operator==(const ConfigDocument&) const = default;
};

// Throws ConfigError (with the offending line number where there is one).
ConfigDocument parse_config(std::string_view text);

// Checks the cross-directive rules: required parameter present for the
// experiment kind, parameters valid for it, sweep consistent. parse_config
// already calls this; overrides applied afterwards should be re-validated.
void validate(const ConfigDocument& doc);

// Canonical text: fixed directive order, defaults explicit, shortest
// round-trip decimals, no comments.
std::string serialize_config(const ConfigDocument& doc);

// Parse an engine name as used by the `engine` directive, with an optional
// ":kappa" suffix ("rebalance_biased:0.5"). Throws ConfigError.
EngineKind parse_engine(std::string_view spec);

struct RunPoint {
  std::string param;  // swept (or primary) parameter name
  double value = 0.0;
  ExperimentConfig config;  // seed not yet split per replica
};

// One point per sweep step, or a single point labelled with the primary
// parameter of the experiment kind (delta, phi or transmittance).
std::vector<RunPoint> expand_points(const ConfigDocument& doc);

}  // namespace mzsim
