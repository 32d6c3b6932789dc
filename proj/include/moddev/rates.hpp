#pragma once

#include <map>
#include <optional>
#include <string>

#include "moddev/hypergraph.hpp"
#include "moddev/rational.hpp"

namespace moddev {

/// Where a deviation sits relative to the admissible window. The boundaries
/// are asymptotic ("much less than") so the check is advisory: ratios are
/// always reported and nothing is refused.
struct WindowCheck {
  double lower_boundary = 0.0;
  double upper_boundary = 0.0;
  double value = 0.0;
  double ratio_low = 0.0;   // value / lower_boundary; below 1 means under the window
  double ratio_high = 0.0;  // upper_boundary / value; below 1 means above the window
  bool inside = false;
};

enum class Model { kUniformM, kBinomialP };

struct RatePrediction {
  Model model = Model::kUniformM;
  double exponent = 0.0;    // predicted -log P(D >= threshold)
  double normalizer = 0.0;  // predicted standard deviation of D
  double threshold = 0.0;   // the deviation, in edge-weight units
  WindowCheck window;
};

/// Uniform model: exponent a^2 / (2 (1-t) t^{2k-1} sigma^2 N), normaliser
/// sqrt((1-t) t^{2k-1} sigma^2 N). Throws DomainError when sigma^2 = 0.
/// `r` only feeds the window check.
RatePrediction rate_m(const DegreeStats& stats, std::size_t n, int k, double t, double a, int r = 2,
                      double slack_low = 1.0, double slack_high = 1.0);

/// Binomial model: threshold delta p^k e(H), exponent
/// delta^2 p e(H)^2 / (2 (1-p) (dbar^2 + sigma^2) N).
RatePrediction rate_p(const DegreeStats& stats, std::size_t n, int k, double p, double delta,
                      int r = 2, double slack_low = 1.0, double slack_high = 1.0);

/// Limit of sigma^2 / N^2 for the k-AP hypergraph, evaluated exactly.
Rational theta_k_exact(int k);
double theta_k(int k);

/// Limit of N^2 (dbar^2 + sigma^2) / e^2 for the k-AP hypergraph.
Rational gamma_k_exact(int k);
double gamma_k(int k);

/// The double sum shared by theta_k and gamma_k.
Rational ap_pair_sum(int k);

enum class Regime { kNormal, kPoisson, kLocalized };
std::string to_string(Regime r);

struct RegimeClassification {
  double normal_term = 0.0;
  double poisson_term = 0.0;
  double localized_term = 0.0;
  double value = 0.0;
  Regime label = Regime::kNormal;
  bool conjectural = true;  // the Poisson/localised constants are believed, not proven
};

/// The three candidate rates for 3-AP counts in B_p: 3 d^2 p N / (56 (1-p)),
/// d^2 p^3 N^2 / 8 and d^{1/2} p^{3/2} N log(1/p). Ties resolve Normal, then Poisson.
RegimeClassification w3_regime(double n, double p, double delta);

/// exp(-alpha^2 / (2 (beta + R alpha))).
double freedman_bound(double alpha, double beta, double r);

/// exp(-a^2 / (2 sum c_i^2)); a = 0 gives 1.
double hoeffding_azuma_bound(double a, double sum_c_sq);

struct ConverseFreedman {
  bool applicable = false;
  double delta = 0.0;  // the minimal admissible delta
  double bound = 0.0;  // (1/2) exp(-alpha^2 (1 + 4 delta) / (2 beta))
};

/// Lower bound on P(T_alpha <= beta). delta is the least value with
/// beta/alpha >= 9 R delta^-2 and alpha^2/beta >= 16 delta^-2 log(64 delta^-2);
/// not applicable when that needs delta > 1.
ConverseFreedman freedman_converse_factor(double alpha, double beta, double r);

struct OptimalSplit {
  double eta_star = 0.0;
  double combined_exponent = 0.0;
  std::map<double, double> m_eta;  // eta -> (1 + eta delta / k) p N
};

/// Cost of routing a fraction eta of a B_p deviation through |B_p| and the rest
/// through B_m: delta^2 p N / (2 q k^2 sigma^2) (sigma^2 eta^2 + dbar^2 (1-eta)^2).
double split_exponent(const DegreeStats& stats, std::size_t n, int k, double p, double delta,
                      double eta);

OptimalSplit optimal_split(const DegreeStats& stats, std::size_t n, int k, double p, double delta,
                           int grid_points = 11);

/// x(m) = (m - pN) / sqrt(pqN).
double binomial_x(std::size_t n, double p, double m);

/// Gaussian estimate -x(m)^2 / 2 of log b_{N,p}(m).
double log_binomial_pmf_gaussian(std::size_t n, double p, double m);

/// log b_{N,p}(m) via log-gamma.
double log_binomial_pmf(std::size_t n, double p, std::size_t m);

WindowCheck window_check_m(std::size_t n, int k, int r, double t, double a, double slack_low = 1.0,
                           double slack_high = 1.0);

WindowCheck window_check_p(std::size_t n, int k, int r, double p, double delta,
                           double slack_low = 1.0, double slack_high = 1.0);

}  // namespace moddev
