#include "mzsim/experiments.hpp"

#include <cmath>

#include "mzsim/errors.hpp"

namespace mzsim {
namespace {

constexpr std::uint64_t kEngineStream = 0;
constexpr std::uint64_t kArrivalStream = 1;

void require_kind(const ExperimentConfig& cfg, ExperimentKind kind) {
  if (cfg.kind != kind) {
    throw ConfigError("expected a " + std::string(to_string(kind)) + " configuration, got " +
                      std::string(to_string(cfg.kind)));
  }
  cfg.validate();
}

// Per-run bookkeeping shared by all experiment kinds.
class RunLoop {
 public:
  explicit RunLoop(const ExperimentConfig& cfg)
      : engine_(cfg.engine, derive_seed(cfg.seed, kEngineStream)),
        clock_(cfg.arrival, derive_seed(cfg.seed, kArrivalStream)),
        tau_(cfg.tau) {}

  ImbalanceState fresh_element() const {
    ImbalanceState s;
    s.tau = tau_;
    return s;
  }

  double next_arrival() { return clock_.next(); }
  SelectionEngine& engine() { return engine_; }

 private:
  SelectionEngine engine_;
  ArrivalClock clock_;
  double tau_;
};

void finish(RunSummary& summary) {
  const double n = static_cast<double>(summary.photons);
  summary.frequencies = {static_cast<double>(summary.counts[0]) / n, static_cast<double>(summary.counts[1]) / n};
}

}  // namespace

std::string_view to_string(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::single_bs:
      return "single_bs";
    case ExperimentKind::mach_zehnder:
      return "mach_zehnder";
    case ExperimentKind::stern_gerlach:
      return "stern_gerlach";
  }
  return "unknown";
}

void ExperimentConfig::validate() const {
  if (photons < 1) throw ConfigError("photons must be at least 1");
  if (!std::isfinite(delta)) throw ConfigError("delta must be finite");
  if (!std::isfinite(phi)) throw ConfigError("phi must be finite");
  if (!(tau > 0.0)) throw ConfigError("tau must be positive (or inf)");
  if (const auto* biased = std::get_if<BiasedEngine>(&engine)) {
    if (!(biased->kappa > 0.0) || !std::isfinite(biased->kappa)) throw ConfigError("kappa must be positive");
  }
  if (const auto* fixed = std::get_if<FixedArrival>(&arrival)) {
    if (!(fixed->interval > 0.0) || !std::isfinite(fixed->interval)) {
      throw ConfigError("arrival interval must be positive");
    }
  } else if (const auto* poisson = std::get_if<PoissonArrival>(&arrival)) {
    if (!(poisson->rate > 0.0) || !std::isfinite(poisson->rate)) throw ConfigError("arrival rate must be positive");
  }
}

ArrivalClock::ArrivalClock(ArrivalProcess process, std::uint64_t seed) : process_(process), rng_(seed) {}

double ArrivalClock::next() {
  double t = 0.0;
  if (const auto* fixed = std::get_if<FixedArrival>(&process_)) {
    // k * interval rather than a running sum keeps fixed grids exact
    t = static_cast<double>(++emitted_) * fixed->interval;
  } else {
    t = now_ + rng_.exponential(std::get<PoissonArrival>(process_).rate);
    ++emitted_;
  }
  if (t <= now_) t = std::nextafter(now_, std::numeric_limits<double>::infinity());
  now_ = t;
  return t;
}

std::vector<double> arrival_times(const ArrivalProcess& process, std::size_t n, Rng& rng) {
  ArrivalClock clock(process, rng.next_u64());
  std::vector<double> out(n);
  for (auto& t : out) t = clock.next();
  return out;
}

DetectorProbabilities mz_ideal_probs(double delta) noexcept {
  const double c = std::cos(delta / 2.0);
  const double s = std::sin(delta / 2.0);
  return {c * c, s * s};
}

DetectorProbabilities mz_pipeline_probs(double delta, const BeamSplitterSpec& splitter) noexcept {
  const Transfer2 chain = splitter.transfer() * phase_shift_transfer(Port::I, delta) * splitter.transfer();
  const TwoModeState out = chain.apply(TwoModeState::unit(Port::I));
  return {std::norm(out[kD1Port]), std::norm(out[other(kD1Port)])};
}

double expected_primary_probability(const ExperimentConfig& cfg) noexcept {
  switch (cfg.kind) {
    case ExperimentKind::single_bs:
      return cfg.splitter.transmittance();
    case ExperimentKind::mach_zehnder:
      return mz_ideal_probs(cfg.delta).p_D1;
    case ExperimentKind::stern_gerlach:
      return stern_gerlach_probs(cfg.phi).p_up;
  }
  return 0.0;
}

RunSummary run_mach_zehnder(const ExperimentConfig& cfg, const EventSink& sink) {
  require_kind(cfg, ExperimentKind::mach_zehnder);
  const BeamSplitterSpec splitter = BeamSplitterSpec::balanced();
  const Transfer2 recombiner = splitter.transfer();

  RunLoop loop(cfg);
  ImbalanceState bs1 = loop.fresh_element();
  ImbalanceState bs2 = loop.fresh_element();

  RunSummary summary;
  summary.photons = cfg.photons;
  const auto ideal = mz_ideal_probs(cfg.delta);
  summary.expected = {ideal.p_D1, ideal.p_D2};

  for (std::uint64_t id = 0; id < cfg.photons; ++id) {
    const double t = loop.next_arrival();
    bs1 = dissipate(bs1, t);
    bs2 = dissipate(bs2, t);

    // BS1: the photon commits to one arm, the medium emits the complement.
    const Outcome first = loop.engine().choose(splitter.transmittance(), bs1);
    const ApparatusResponse response = apparatus_response(first.port, splitter);
    if (sink) {
      sink({id, t, labels::kFirstSplitter, to_string(first.port), first.port, first.imbalance_before,
            first.imbalance_after, response});
    }

    // Photon and response travel the same arms and meet at BS2.
    TwoModeState photon = splitter.to_port_amplitudes(TwoModeState::unit(first.port));
    TwoModeState reaction = splitter.to_port_amplitudes(response.as_state());
    photon = phase_shift(photon, Port::I, cfg.delta);
    reaction = phase_shift(reaction, Port::I, cfg.delta);
    const auto [i_I, i_II] = port_intensities(recombiner.apply(photon + reaction));
    const double p_D1 = snap_probability((kD1Port == Port::I ? i_I : i_II) / (i_I + i_II));

    // BS2 outcome port I is D1 from the engine's point of view.
    const Outcome second = loop.engine().choose(p_D1, bs2);
    const bool at_D1 = second.port == Port::I;
    ++summary.counts[at_D1 ? 0 : 1];
    if (sink) {
      sink({id, t, labels::kSecondSplitter, at_D1 ? "D1" : "D2", second.port, second.imbalance_before,
            second.imbalance_after, std::nullopt});
    }
  }

  summary.final_imbalances = {{std::string(labels::kFirstSplitter), bs1.b},
                              {std::string(labels::kSecondSplitter), bs2.b}};
  finish(summary);
  return summary;
}

RunSummary run_single_bs(const ExperimentConfig& cfg, const EventSink& sink) {
  require_kind(cfg, ExperimentKind::single_bs);
  const BeamSplitterSpec& splitter = cfg.splitter;
  const double p_I = splitter.transmittance();

  RunLoop loop(cfg);
  ImbalanceState bs = loop.fresh_element();

  RunSummary summary;
  summary.photons = cfg.photons;
  summary.expected = {p_I, splitter.reflectance()};

  for (std::uint64_t id = 0; id < cfg.photons; ++id) {
    const double t = loop.next_arrival();
    bs = dissipate(bs, t);
    const Outcome o = loop.engine().choose(p_I, bs);
    ++summary.counts[o.port == Port::I ? 0 : 1];
    if (sink) {
      sink({id, t, labels::kSplitter, to_string(o.port), o.port, o.imbalance_before, o.imbalance_after,
            apparatus_response(o.port, splitter)});
    }
  }

  summary.final_imbalances = {{std::string(labels::kSplitter), bs.b}};
  finish(summary);
  return summary;
}

RunSummary run_stern_gerlach(const ExperimentConfig& cfg, const EventSink& sink) {
  require_kind(cfg, ExperimentKind::stern_gerlach);
  const SpinProbabilities probs = stern_gerlach_probs(cfg.phi);
  const double p_up = snap_probability(probs.p_up);
  // incident spin component along the field, in units of hbar/2
  const double incident = std::cos(cfg.phi);

  RunLoop loop(cfg);
  ImbalanceState magnet = loop.fresh_element();

  RunSummary summary;
  summary.photons = cfg.photons;
  summary.expected = {probs.p_up, probs.p_down};

  for (std::uint64_t id = 0; id < cfg.photons; ++id) {
    const double t = loop.next_arrival();
    magnet = dissipate(magnet, t);
    const Outcome o = loop.engine().choose(p_up, magnet);
    const bool up = o.port == Port::I;
    ++summary.counts[up ? 0 : 1];
    summary.accumulated_beth_L += beth_transfer(0.5 * incident, up ? 0.5 : -0.5);
    if (sink) {
      sink({id, t, labels::kAnalyzer, up ? "up" : "down", o.port, o.imbalance_before, o.imbalance_after,
            std::nullopt});
    }
  }

  summary.final_imbalances = {{std::string(labels::kAnalyzer), magnet.b}};
  finish(summary);
  return summary;
}

RunSummary run_experiment(const ExperimentConfig& cfg, const EventSink& sink) {
  switch (cfg.kind) {
    case ExperimentKind::single_bs:
      return run_single_bs(cfg, sink);
    case ExperimentKind::mach_zehnder:
      return run_mach_zehnder(cfg, sink);
    case ExperimentKind::stern_gerlach:
      return run_stern_gerlach(cfg, sink);
  }
  throw ConfigError("unknown experiment kind");
}

std::vector<PolarizationEvent> run_waveplate(const JonesVector& input, const WaveplateSpec& plate,
                                             std::uint64_t photons) {
  const double spin_in = spin_component(input);
  const double spin_out = spin_component(waveplate_apply(input, plate));
  std::vector<PolarizationEvent> events;
  events.reserve(photons);
  for (std::uint64_t id = 0; id < photons; ++id) events.push_back({id, spin_in, spin_out});
  return events;
}

double accumulate_beth(std::span<const PolarizationEvent> events) noexcept {
  double total = 0.0;
  for (const auto& e : events) total += beth_transfer(e.spin_in, e.spin_out);
  return total;
}

}  // namespace mzsim
