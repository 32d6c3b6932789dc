#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace moddev {

/// Streaming mean and central moments up to order four. Updates follow
/// Welford/Terriberry; merge() uses the pairwise formulas of Chan et al. and
/// Pebay, so summing per-batch accumulators in a fixed order is reproducible.
class MomentAccumulator {
 public:
  void add(double x);
  void merge(const MomentAccumulator& other);

  std::uint64_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  /// Population variance (divides by n).
  double variance() const;
  /// Unbiased sample variance (divides by n - 1).
  double sample_variance() const;
  double skewness() const;
  double excess_kurtosis() const;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double m3_ = 0.0;
  double m4_ = 0.0;
};

struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;
};

/// 95% Wilson score interval for hits out of samples.
WilsonInterval wilson_interval(std::uint64_t hits, std::uint64_t samples, double z = 1.959963984540054);

double standard_normal_cdf(double x);

/// Kolmogorov-Smirnov distance between the empirical law of `values` and N(0, 1).
/// Sorts its argument.
double ks_distance_to_normal(std::vector<double>& values);

}  // namespace moddev
