#include "mzsim/selection.hpp"

#include <algorithm>
#include <cmath>

#include "mzsim/errors.hpp"

namespace mzsim {
namespace {

// Ties in the greedy rule are decided with this slack so that accumulated
// rounding in b cannot flip the documented tie-break toward port I.
constexpr double kTieSlack = 1e-12;

void check_probability(double p_I) {
  if (!(p_I >= 0.0 && p_I <= 1.0)) {
    throw DomainError("target probability must lie in [0, 1], got " + std::to_string(p_I));
  }
}

Outcome commit(Port port, double p_I, ImbalanceState& imb) {
  const double before = imb.b;
  imb.b = before + ((port == Port::I ? 1.0 : 0.0) - p_I);
  return {port, before, imb.b};
}

}  // namespace

std::string engine_name(const EngineKind& kind) {
  struct Visitor {
    std::string operator()(const BornEngine&) const { return "born"; }
    std::string operator()(const GreedyEngine&) const { return "rebalance_greedy"; }
    std::string operator()(const BiasedEngine&) const { return "rebalance_biased"; }
  };
  return std::visit(Visitor{}, kind);
}

double snap_probability(double p) noexcept {
  if (p < kDestructiveThreshold) return 0.0;
  if (p > 1.0 - kDestructiveThreshold) return 1.0;
  return p;
}

Outcome born_choose(double p_I, ImbalanceState& imb, Rng& rng) {
  check_probability(p_I);
  return commit(rng.uniform() < p_I ? Port::I : Port::II, p_I, imb);
}

Outcome rebalance_choose_greedy(double p_I, ImbalanceState& imb) {
  check_probability(p_I);
  const double if_I = std::abs(imb.b + (1.0 - p_I));
  const double if_II = std::abs(imb.b - p_I);
  return commit(if_I <= if_II + kTieSlack ? Port::I : Port::II, p_I, imb);
}

Outcome rebalance_choose_biased(double p_I, ImbalanceState& imb, double kappa, Rng& rng) {
  check_probability(p_I);
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("biased engine gain must be positive");
  const double p = std::clamp(p_I - kappa * imb.b, 0.0, 1.0);
  return commit(rng.uniform() < p ? Port::I : Port::II, p_I, imb);
}

ImbalanceState dissipate(const ImbalanceState& imb, double now) {
  if (now < imb.last_event_time) {
    throw TimeOrderError("dissipate: time " + std::to_string(now) + " precedes last event at " +
                         std::to_string(imb.last_event_time));
  }
  ImbalanceState out = imb;
  const double dt = now - imb.last_event_time;
  if (std::isfinite(imb.tau) && dt > 0.0) out.b = imb.b * std::exp(-dt / imb.tau);
  out.last_event_time = now;
  return out;
}

SelectionEngine::SelectionEngine(EngineKind kind, std::uint64_t seed) : kind_(kind), rng_(seed) {
  if (const auto* biased = std::get_if<BiasedEngine>(&kind_)) {
    if (!(biased->kappa > 0.0) || !std::isfinite(biased->kappa)) {
      throw DomainError("biased engine gain must be positive");
    }
  }
}

Outcome SelectionEngine::choose(double p_I, ImbalanceState& imb) {
  struct Visitor {
    double p_I;
    ImbalanceState& imb;
    Rng& rng;
    Outcome operator()(const BornEngine&) const { return born_choose(p_I, imb, rng); }
    Outcome operator()(const GreedyEngine&) const { return rebalance_choose_greedy(p_I, imb); }
    Outcome operator()(const BiasedEngine& e) const { return rebalance_choose_biased(p_I, imb, e.kappa, rng); }
  };
  return std::visit(Visitor{p_I, imb, rng_}, kind_);
}

}  // namespace mzsim
