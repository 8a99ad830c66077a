#pragma once

#include <limits>
#include <string>
#include <variant>

#include "mzsim/amplitudes.hpp"
#include "mzsim/rng.hpp"

namespace mzsim {

// Accumulated deficit at one path-committing element: realized indicator of
// port I minus its target probability, summed over commits, relaxed in time.
struct ImbalanceState {
  double b = 0.0;
  double last_event_time = 0.0;
  double tau = std::numeric_limits<double>::infinity();
};

struct BornEngine {
  bool operator==(const BornEngine&) const = default;
};
struct GreedyEngine {
  bool operator==(const GreedyEngine&) const = default;
};
struct BiasedEngine {
  double kappa = 1.0;
  bool operator==(const BiasedEngine&) const = default;
};

using EngineKind = std::variant<BornEngine, GreedyEngine, BiasedEngine>;

// "born", "rebalance_greedy", "rebalance_biased"
std::string engine_name(const EngineKind& kind);

struct Outcome {
  Port port;
  double imbalance_before;
  double imbalance_after;
};

// Intensities within this distance of 0 or 1 are snapped before they are
// used as target probabilities, so fully destructive ports never fire.
inline constexpr double kDestructiveThreshold = 1e-12;
double snap_probability(double p) noexcept;

// Each chooser validates p_I in [0, 1] (DomainError otherwise) and advances
// `imb.b` by indicator(port == I) - p_I.
Outcome born_choose(double p_I, ImbalanceState& imb, Rng& rng);
Outcome rebalance_choose_greedy(double p_I, ImbalanceState& imb);
Outcome rebalance_choose_biased(double p_I, ImbalanceState& imb, double kappa, Rng& rng);

// Relax b exponentially to `now`. Throws TimeOrderError if now < last_event_time.
ImbalanceState dissipate(const ImbalanceState& imb, double now);

// Engine kind plus its random stream. One instance per run; movable between
// threads, never shared.
class SelectionEngine {
 public:
  SelectionEngine(EngineKind kind, std::uint64_t seed);

  Outcome choose(double p_I, ImbalanceState& imb);

  const EngineKind& kind() const noexcept { return kind_; }
  Rng& rng() noexcept { return rng_; }

 private:
  EngineKind kind_;
  Rng rng_;
};

}  // namespace mzsim
