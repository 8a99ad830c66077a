// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Tolerances are fixed here, not taken from flags.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mzsim/cli.hpp"
#include "mzsim/config.hpp"
#include "mzsim/elements.hpp"
#include "mzsim/experiments.hpp"
#include "mzsim/fresnel.hpp"
#include "mzsim/stats.hpp"
#include "test_support.hpp"

using namespace mzsim;

namespace {

struct Result {
  bool pass;
  std::string detail;
};

double sweep_point(int k, int steps) { return kTwoPi * k / steps; }

double expected_d1(double delta) {
  const double c = std::cos(delta / 2);
  return c * c;
}

RunSummary mz_run(const EngineKind& engine, double delta, std::uint64_t n, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::mach_zehnder;
  cfg.engine = engine;
  cfg.delta = delta;
  cfg.photons = n;
  cfg.seed = seed;
  return run_experiment(cfg);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Result reconstruction_identity() {
  double worst = 0.0;
  for (Port p : {Port::I, Port::II}) {
    const TwoModeState s = reconstruct(p, apparatus_response(p));
    worst = std::max({worst, std::abs(s.amp_I.real() - kInvSqrt2), std::abs(s.amp_I.imag()),
                      std::abs(s.amp_II.real() - kInvSqrt2), std::abs(s.amp_II.imag())});
  }
  return {worst <= 1e-15, fmt("max componentwise error %.3g (tol 1e-15)", worst)};
}

Result mz_limits() {
  constexpr std::uint64_t n = 10000;
  bool ok = true;
  std::string detail;
  const std::vector<EngineKind> engines{BornEngine{}, GreedyEngine{}, BiasedEngine{1.0}};
  for (const auto& e : engines) {
    const auto bright = mz_run(e, 0.0, n, 1);
    const auto dark = mz_run(e, kPi, n, 1);
    ok = ok && bright.counts[0] == n && bright.counts[1] == 0 && dark.counts[0] == 0 && dark.counts[1] == n;
    detail += engine_name(e) + " (" + std::to_string(bright.counts[0]) + "," + std::to_string(bright.counts[1]) +
              ")/(" + std::to_string(dark.counts[0]) + "," + std::to_string(dark.counts[1]) + ") ";
  }
  return {ok, detail + "at delta 0 / pi"};
}

Result sweep(const EngineKind& engine, const std::function<double(double)>& tol) {
  constexpr std::uint64_t n = 100000;
  constexpr int steps = 16;
  bool ok = true;
  double worst_ratio = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double delta = sweep_point(k, steps);
    const double p = expected_d1(delta);
    const auto s = mz_run(engine, delta, n, 1000 + k);
    const double dev = std::abs(s.frequencies[0] - p);
    ok = ok && dev <= tol(p);
    worst_ratio = std::max(worst_ratio, dev / tol(p));
  }
  return {ok, fmt("16 points, N=1e5, worst deviation %.3f of tolerance", worst_ratio)};
}

Result born_sweep() {
  return sweep(BornEngine{}, [](double p) { return 4 * std::sqrt(p * (1 - p) / 1e5) + 1e-3; });
}

Result greedy_sweep() {
  return sweep(GreedyEngine{}, [](double) { return 1.0 / 1e5 + 1e-9; });
}

Result variance_contrast() {
  const std::vector<std::uint64_t> lengths{100, 1000, 10000};
  constexpr std::size_t replicas = 200;
  const auto born = variance_curve(BornEngine{}, 0.5, lengths, replicas, 11);
  const auto greedy = variance_curve(GreedyEngine{}, 0.5, lengths, replicas, 12);
  const auto biased = variance_curve(BiasedEngine{1.0}, 0.5, lengths, replicas, 13);
  bool ok = true;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const double target = 0.25 * static_cast<double>(lengths[i]);
    ok = ok && std::abs(born.variance_of_deviation[i] - target) <= 0.2 * target;
    ok = ok && greedy.variance_of_deviation[i] <= 0.25;
  }
  ok = ok && biased.variance_of_deviation[2] < 0.05 * born.variance_of_deviation[2];
  return {ok, fmt("born %.1f / %.1f / %.1f", born.variance_of_deviation[0], born.variance_of_deviation[1],
                  born.variance_of_deviation[2]) +
                  fmt(", greedy max %.3g, biased(1) at 1e4 %.3g", *std::max_element(greedy.variance_of_deviation.begin(),
                                                                                     greedy.variance_of_deviation.end()),
                      biased.variance_of_deviation[2])};
}

Result stern_gerlach() {
  constexpr std::uint64_t n = 100000;
  const double phis[] = {0.0, kPi / 2, 2 * kPi / 3, kPi};
  const double targets[] = {1.0, 0.5, 0.25, 0.0};
  bool ok = true;
  std::string detail = "freq up";
  for (int i = 0; i < 4; ++i) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::stern_gerlach;
    cfg.phi = phis[i];
    cfg.photons = n;
    cfg.seed = 77 + i;
    const auto s = run_experiment(cfg);
    const double band = 4 * std::sqrt(targets[i] * (1 - targets[i]) / n);
    ok = ok && std::abs(s.frequencies[0] - targets[i]) <= band + 1e-12;
    detail += fmt(" %.4f", s.frequencies[0]);
  }
  double identity = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double phi = kTwoPi * k / 1000;
    const auto pr = stern_gerlach_probs(phi);
    identity = std::max(identity, std::abs(std::cos(phi) - (pr.p_up - pr.p_down)));
  }
  ok = ok && identity < 1e-12;
  return {ok, detail + fmt(", identity residual %.3g", identity)};
}

Result fresnel_layer() {
  using namespace fresnel;
  const InterfaceSpec glass{1.0, 1.5};
  const auto c = fresnel_coeffs(glass);
  bool ok = std::abs(c.r + 0.2) <= 1e-12 && std::abs(c.R - 0.04) <= 1e-12 && std::abs(c.T - 0.96) <= 1e-12;
  const auto [s1, s2] = normal_incidence_fields(glass, c);
  const auto res = check_boundary(s1, s2);
  double worst_residual = std::max(res.max(), res.magnetic * kSpeedOfLight);
  proptest::Gen gen(7);
  double worst_sum = 0.0;
  for (int i = 0; i < 100; ++i) {
    const InterfaceSpec iface{gen.uniform(1, 4), gen.uniform(1, 4)};
    const auto ci = fresnel_coeffs(iface);
    worst_sum = std::max(worst_sum, std::abs(ci.R + ci.T - 1));
    const auto [a, b] = normal_incidence_fields(iface, ci);
    const auto ri = check_boundary(a, b);
    worst_residual = std::max({worst_residual, ri.max(), ri.magnetic * kSpeedOfLight});
  }
  ok = ok && worst_residual < 1e-12 && worst_sum < 1e-12;
  return {ok, fmt("r=%.15g R=%.15g T=%.15g", c.r, c.R, c.T) +
                  fmt(", residual %.3g, |R+T-1| %.3g", worst_residual, worst_sum)};
}

Result oracle_equivalence() {
  // Explicit matrices: BS * diag(e^{i delta}, 1) * BS acting on a photon in port I.
  const ComplexAmp i(0, 1);
  const double h = kInvSqrt2;
  double worst = 0.0;
  for (int k = 0; k < 256; ++k) {
    const double delta = kTwoPi * k / 256;
    const ComplexAmp a0 = h, a1 = i * h;  // after BS1
    const ComplexAmp b0 = std::exp(i * delta) * a0, b1 = a1;
    const ComplexAmp d_II = i * h * b0 + h * b1;
    const auto ideal = mz_ideal_probs(delta);
    const auto pipe = mz_pipeline_probs(delta);
    worst = std::max({worst, std::abs(ideal.p_D1 - pipe.p_D1), std::abs(ideal.p_D2 - pipe.p_D2),
                      std::abs(ideal.p_D1 - std::norm(d_II))});
  }
  return {worst <= 1e-12, fmt("256 points, max difference %.3g", worst)};
}

Result dissipation_limit() {
  const std::vector<std::uint64_t> lengths{10000};
  VarianceOptions opts;
  opts.arrival = FixedArrival{1.0};
  opts.tau = 1e-6;
  const auto biased = variance_curve(BiasedEngine{1.0}, 0.5, lengths, 200, 21, opts);
  const double v = biased.variance_of_deviation[0];
  return {std::abs(v - 2500.0) <= 0.25 * 2500.0, fmt("biased variance %.1f vs binomial 2500 (tol 25%%)", v)};
}

ConfigDocument random_document(proptest::Gen& gen) {
  ConfigDocument doc;
  doc.experiment = static_cast<ExperimentKind>(gen.integer(0, 2));
  const int e = static_cast<int>(gen.integer(0, 2));
  doc.engine = e == 0 ? EngineKind(BornEngine{}) : e == 1 ? EngineKind(GreedyEngine{}) : EngineKind(BiasedEngine{gen.uniform(0.01, 5)});
  doc.photons = gen.integer(1, 1000000);
  doc.seed = gen.integer(0, ~std::uint64_t{0});
  switch (doc.experiment) {
    case ExperimentKind::mach_zehnder:
      if (gen.coin()) doc.delta = gen.uniform(-10, 10);
      else doc.sweep = SweepSpec{SweepParam::delta, 0.0, gen.uniform(0.5, 10), gen.integer(2, 32)};
      break;
    case ExperimentKind::stern_gerlach:
      if (gen.coin()) doc.phi = gen.uniform(-10, 10);
      else doc.sweep = SweepSpec{SweepParam::phi, 0.0, gen.uniform(0.5, 10), gen.integer(2, 32)};
      break;
    case ExperimentKind::single_bs:
      if (gen.coin()) doc.transmittance = gen.uniform(0, 1);
      else doc.splitter = fresnel::InterfaceSpec{gen.uniform(1, 3), gen.uniform(1, 3)};
      break;
  }
  if (gen.coin()) doc.arrival = PoissonArrival{gen.uniform(0.1, 1e4)};
  if (gen.coin()) doc.tau = gen.uniform(1e-6, 100);
  doc.replicas = gen.integer(1, 50);
  return doc;
}

Result determinism_and_round_trip() {
  namespace fs = std::filesystem;
  const fs::path cfg = fs::temp_directory_path() / "mzsim_acceptance_determinism.cfg";
  std::ofstream(cfg) << "experiment mach_zehnder\nengine rebalance_biased 0.5\nsweep delta 0 6.283185307 16\n"
                        "photons 20000\nseed 42\narrival poisson 100\ntau 0.05\nreplicas 3\n";
  const std::vector<std::string> args{"run", cfg.string()};
  std::ostringstream a, b, err;
  const int rc_a = cli_main(args, a, err);
  const int rc_b = cli_main(args, b, err);
  fs::remove(cfg);
  bool ok = rc_a == 0 && rc_b == 0 && !a.str().empty() && a.str() == b.str();

  proptest::Gen gen(2024);
  int round_trips = 0;
  for (int i = 0; i < 500; ++i) {
    const auto doc = random_document(gen);
    const auto text = serialize_config(doc);
    try {
      if (parse_config(text) == doc && serialize_config(parse_config(text)) == text) ++round_trips;
    } catch (const std::exception&) {
    }
  }
  ok = ok && round_trips == 500;
  return {ok, std::string("CSV runs ") + (a.str() == b.str() ? "identical" : "differ") + ", " +
                  std::to_string(round_trips) + "/500 configs round-trip"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Result (*)()>> criteria{
      {"AC1 reconstruction identity", reconstruction_identity},
      {"AC2 Mach-Zehnder limits", mz_limits},
      {"AC3 Born-rule sweep", born_sweep},
      {"AC4 rebalancing reproduces Born means", greedy_sweep},
      {"AC5 random walk vs self-limiting", variance_contrast},
      {"AC6 Stern-Gerlach proportions", stern_gerlach},
      {"AC7 Fresnel layer", fresnel_layer},
      {"AC8 oracle equivalence", oracle_equivalence},
      {"AC9 dissipation limit", dissipation_limit},
      {"AC10 determinism and round-trip", determinism_and_round_trip},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Result r{false, ""};
    try {
      r = check();
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    failures += r.pass ? 0 : 1;
    std::printf("%s  %-40s %s\n", r.pass ? "PASS" : "FAIL", name, r.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
