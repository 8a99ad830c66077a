#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mzsim/elements.hpp"
#include "mzsim/rng.hpp"
#include "mzsim/selection.hpp"

namespace mzsim {

enum class ExperimentKind { single_bs, mach_zehnder, stern_gerlach };

std::string_view to_string(ExperimentKind kind) noexcept;

struct FixedArrival {
  double interval = 1.0;
  bool operator==(const FixedArrival&) const = default;
};
struct PoissonArrival {
  double rate = 1.0;
  bool operator==(const PoissonArrival&) const = default;
};
using ArrivalProcess = std::variant<FixedArrival, PoissonArrival>;

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::mach_zehnder;
  EngineKind engine = BornEngine{};
  std::uint64_t photons = 10000;
  std::uint64_t seed = 0;
  double delta = 0.0;                                  // mach_zehnder
  double phi = 0.0;                                    // stern_gerlach
  BeamSplitterSpec splitter = BeamSplitterSpec::balanced();  // single_bs
  ArrivalProcess arrival = FixedArrival{};
  double tau = std::numeric_limits<double>::infinity();

  // Throws ConfigError on the first violated invariant.
  void validate() const;
};

// Photon arrival clock. Times are strictly increasing.
class ArrivalClock {
 public:
  ArrivalClock(ArrivalProcess process, std::uint64_t seed);
  double next();

 private:
  ArrivalProcess process_;
  Rng rng_;
  double now_ = 0.0;
  std::uint64_t emitted_ = 0;
};

std::vector<double> arrival_times(const ArrivalProcess& process, std::size_t n, Rng& rng);

// Element and outcome labels used in event logs.
namespace labels {
inline constexpr std::string_view kSplitter = "bs";
inline constexpr std::string_view kFirstSplitter = "bs1";
inline constexpr std::string_view kSecondSplitter = "bs2";
inline constexpr std::string_view kAnalyzer = "sg";
}  // namespace labels

struct EventRecord {
  std::uint64_t photon_id = 0;
  double time = 0.0;
  std::string_view element;
  std::string_view chosen;  // "I"/"II", "D1"/"D2" or "up"/"down"
  Port port = Port::I;      // committed port of the element
  double imbalance_before = 0.0;
  double imbalance_after = 0.0;
  std::optional<ApparatusResponse> response_emitted;
};

using EventSink = std::function<void(const EventRecord&)>;

struct RunSummary {
  std::uint64_t photons = 0;
  std::array<std::uint64_t, 2> counts{};  // D1/D2, I/II or up/down
  std::array<double, 2> frequencies{};
  std::array<double, 2> expected{};
  std::vector<std::pair<std::string, double>> final_imbalances;
  double accumulated_beth_L = 0.0;  // hbar
};

// Output port of the second splitter that receives every photon at delta = 0
// with the pi/2 reflection convention; labelled D1.
inline constexpr Port kD1Port = Port::II;

struct DetectorProbabilities {
  double p_D1;
  double p_D2;
};

// Closed form (cos^2(delta/2), sin^2(delta/2)).
DetectorProbabilities mz_ideal_probs(double delta) noexcept;

// Same quantity from the transfer-matrix chain BS1 -> phase shifter on arm I
// -> BS2 with the splitter convention of `splitter`.
DetectorProbabilities mz_pipeline_probs(double delta,
                                        const BeamSplitterSpec& splitter = BeamSplitterSpec::balanced()) noexcept;

// Each run fires cfg.photons photons sequentially and optionally streams one
// EventRecord per commit to `sink`. Throws ConfigError before firing any
// photon when cfg is invalid or of the wrong kind.
RunSummary run_mach_zehnder(const ExperimentConfig& cfg, const EventSink& sink = {});
RunSummary run_single_bs(const ExperimentConfig& cfg, const EventSink& sink = {});
RunSummary run_stern_gerlach(const ExperimentConfig& cfg, const EventSink& sink = {});
RunSummary run_experiment(const ExperimentConfig& cfg, const EventSink& sink = {});

// Expected port-I / D1 / up probability of a configuration.
double expected_primary_probability(const ExperimentConfig& cfg) noexcept;

// ---------------------------------------------------------------------------
// Angular-momentum bookkeeping for polarization-changing elements

struct PolarizationEvent {
  std::uint64_t photon_id = 0;
  double spin_in = 0.0;
  double spin_out = 0.0;
};

std::vector<PolarizationEvent> run_waveplate(const JonesVector& input, const WaveplateSpec& plate,
                                             std::uint64_t photons);

// Sum of beth_transfer over the events (hbar).
double accumulate_beth(std::span<const PolarizationEvent> events) noexcept;

}  // namespace mzsim
