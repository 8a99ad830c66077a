#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "mzsim/experiments.hpp"
#include "mzsim/selection.hpp"

namespace mzsim {

struct FrequencyEstimate {
  std::uint64_t n = 0;
  std::uint64_t successes = 0;
  double p_hat = 0.0;
  double sigma = 0.0;  // sqrt(p_hat (1 - p_hat) / n)
  double lo = 0.0;     // p_hat - 4 sigma, clamped to [0, 1]
  double hi = 0.0;     // p_hat + 4 sigma, clamped to [0, 1]
};

// From (successes, failures). Throws DomainError when both are zero.
FrequencyEstimate estimate_frequency(std::uint64_t successes, std::uint64_t failures);

struct VarianceCurve {
  std::vector<std::uint64_t> run_lengths;
  // Mean over replicas of (count_I - N p)^2, the spread of the deviation
  // around its expected value of zero.
  std::vector<double> variance_of_deviation;
  std::size_t replicas = 0;
};

struct VarianceOptions {
  double tau = std::numeric_limits<double>::infinity();
  ArrivalProcess arrival = FixedArrival{};
};

// Runs `replicas` independent single-splitter experiments (T = p) at every
// run length. Replica r at length index k uses seed derive_seed(base_seed, k, r).
// Throws DomainError unless run_lengths is strictly ascending and replicas >= 30.
VarianceCurve variance_curve(const EngineKind& engine, double p, std::span<const std::uint64_t> run_lengths,
                             std::size_t replicas, std::uint64_t base_seed, const VarianceOptions& options = {});

// Least-squares slope of variance against run length.
double variance_slope(const VarianceCurve& curve);

// Fringe visibility (max - min) / (max + min) over (delta, freq_D1) points.
// Throws DomainError on an empty sweep or max + min == 0.
double visibility(std::span<const std::pair<double, double>> sweep);

// Pearson statistic sum (obs - exp)^2 / exp. Throws InsufficientSample when
// any expected count is below 5 and DomainError on a size mismatch.
double chi_square_gof(std::span<const std::uint64_t> counts, std::span<const double> expected_probs);

}  // namespace mzsim
