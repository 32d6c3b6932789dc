#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "moddev/counters.hpp"
#include "moddev/hypergraph.hpp"
#include "moddev/statistics.hpp"

namespace moddev {

inline constexpr std::uint64_t kDefaultSeed = 20240611ULL;

struct UniformModel {
  std::size_t m = 0;
};
struct BinomialModel {
  double p = 0.5;
};
using SamplingModel = std::variant<UniformModel, BinomialModel>;

struct SimulationConfig {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 100000;
  unsigned workers = 1;
  SamplingModel model = UniformModel{};
  std::vector<double> thresholds;  // ascending, positive; +inf allowed
  std::uint64_t batch_size = 4096;
  bool use_fast_counter = true;
  /// Called from the coordinating thread with the fraction of samples done.
  std::function<void(double)> progress;
};

void validate(const SimulationConfig& config, const WeightedHypergraph& h);

enum class Tail { kUpper, kLower };
std::string to_string(Tail t);

struct TailEstimate {
  Tail side = Tail::kUpper;
  double threshold = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double neg_log_p = 0.0;
  bool neg_log_p_is_lower_bound = false;  // zero hits: -log of the CI upper end
  double predicted_exponent = 0.0;        // NaN when the model gives no prediction
  double ratio = 0.0;                     // neg_log_p / predicted_exponent
  bool underpowered = false;              // fewer than 10 hits expected from the prediction
};

struct SimulationResult {
  double model_mean = 0.0;  // the mean subtracted from each count
  std::vector<std::uint64_t> upper_hits;
  std::vector<std::uint64_t> lower_hits;
  MomentAccumulator moments;
  std::vector<double> deviations;  // per sample, in sample order, when requested
  std::string counter;
};

/// Draws `samples` independent B (sample s uses stream s of the seed) and
/// tallies D = N^H(B) - mean. Batches are merged in index order, so every
/// output is bit-identical for any worker count.
SimulationResult simulate(const WeightedHypergraph& h, const SimulationConfig& config,
                          bool keep_deviations = false);

/// Upper tails (D >= a) then lower tails (D <= -a), one per threshold.
std::vector<TailEstimate> estimate_tail(const WeightedHypergraph& h, const SimulationConfig& config);

/// Builds estimates from a finished simulation.
std::vector<TailEstimate> tail_estimates(const WeightedHypergraph& h, const SimulationConfig& config,
                                         const SimulationResult& result);

/// Predicted standard deviation of D under the model (the CLT normaliser).
double predicted_normalizer(const WeightedHypergraph& h, const SamplingModel& model);

/// Predicted -log P(D >= a), NaN if the model has no prediction here.
double predicted_exponent(const WeightedHypergraph& h, const SamplingModel& model, double a);

struct MomentsReport {
  std::uint64_t samples = 0;
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double normalizer = 0.0;      // predicted standard deviation
  double variance_ratio = 0.0;  // variance / normalizer^2
  double ks_distance = 0.0;     // NaN unless requested; D standardised by sample mean and sd
};

MomentsReport empirical_moments(const WeightedHypergraph& h, const SimulationConfig& config,
                                bool with_ks = false);

/// estimate_tail plus CSV output; thresholds are absolute deviations.
std::vector<TailEstimate> rate_ratio_sweep(const WeightedHypergraph& h,
                                           const SimulationConfig& config);

std::string tail_csv(const std::vector<TailEstimate>& rows);

}  // namespace moddev
