#include "mzsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mzsim/errors.hpp"
#include "mzsim/parallel.hpp"

namespace mzsim {

FrequencyEstimate estimate_frequency(std::uint64_t successes, std::uint64_t failures) {
  const std::uint64_t n = successes + failures;
  if (n == 0) throw DomainError("estimate_frequency: no observations");
  FrequencyEstimate est;
  est.n = n;
  est.successes = successes;
  est.p_hat = static_cast<double>(successes) / static_cast<double>(n);
  est.sigma = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(n));
  est.lo = std::max(0.0, est.p_hat - 4.0 * est.sigma);
  est.hi = std::min(1.0, est.p_hat + 4.0 * est.sigma);
  return est;
}

VarianceCurve variance_curve(const EngineKind& engine, double p, std::span<const std::uint64_t> run_lengths,
                             std::size_t replicas, std::uint64_t base_seed, const VarianceOptions& options) {
  if (replicas < 30) throw DomainError("variance_curve: need at least 30 replicas");
  if (run_lengths.empty()) throw DomainError("variance_curve: no run lengths");
  for (std::size_t k = 0; k < run_lengths.size(); ++k) {
    if (run_lengths[k] == 0 || (k > 0 && run_lengths[k] <= run_lengths[k - 1])) {
      throw DomainError("variance_curve: run lengths must be positive and strictly ascending");
    }
  }

  VarianceCurve curve;
  curve.run_lengths.assign(run_lengths.begin(), run_lengths.end());
  curve.replicas = replicas;

  const std::size_t points = run_lengths.size();
  std::vector<double> squared(points * replicas, 0.0);
  parallel_for(points * replicas, [&](std::size_t job) {
    const std::size_t k = job / replicas;
    const std::size_t r = job % replicas;
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::single_bs;
    cfg.engine = engine;
    cfg.photons = run_lengths[k];
    cfg.seed = derive_seed(base_seed, k, r);
    cfg.splitter = BeamSplitterSpec(p);
    cfg.arrival = options.arrival;
    cfg.tau = options.tau;
    const RunSummary s = run_single_bs(cfg);
    const double deviation = static_cast<double>(s.counts[0]) - static_cast<double>(cfg.photons) * p;
    squared[job] = deviation * deviation;
  });

  for (std::size_t k = 0; k < points; ++k) {
    const auto first = squared.begin() + static_cast<std::ptrdiff_t>(k * replicas);
    const double sum = std::accumulate(first, first + static_cast<std::ptrdiff_t>(replicas), 0.0);
    curve.variance_of_deviation.push_back(sum / static_cast<double>(replicas));
  }
  return curve;
}

double variance_slope(const VarianceCurve& curve) {
  const std::size_t n = curve.run_lengths.size();
  if (n < 2) throw DomainError("variance_slope: need at least two run lengths");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += static_cast<double>(curve.run_lengths[i]);
    my += curve.variance_of_deviation[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = static_cast<double>(curve.run_lengths[i]) - mx;
    sxy += dx * (curve.variance_of_deviation[i] - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

double visibility(std::span<const std::pair<double, double>> sweep) {
  if (sweep.empty()) throw DomainError("visibility: empty sweep");
  const auto [lo, hi] = std::minmax_element(sweep.begin(), sweep.end(),
                                            [](const auto& a, const auto& b) { return a.second < b.second; });
  const double denom = hi->second + lo->second;
  if (denom == 0.0) throw DomainError("visibility: undefined for max + min = 0");
  return (hi->second - lo->second) / denom;
}

double chi_square_gof(std::span<const std::uint64_t> counts, std::span<const double> expected_probs) {
  if (counts.size() != expected_probs.size() || counts.empty()) {
    throw DomainError("chi_square_gof: counts and probabilities differ in length");
  }
  const double n = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = n * expected_probs[i];
    if (expected < 5.0) throw InsufficientSample("chi_square_gof: expected count below 5");
    const double d = static_cast<double>(counts[i]) - expected;
    stat += d * d / expected;
  }
  return stat;
}

}  // namespace mzsim
