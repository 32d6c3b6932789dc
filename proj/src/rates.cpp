#include "moddev/rates.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "moddev/errors.hpp"

namespace moddev {

namespace {

void require_r(int k, int r) {
  if (r < 2 || r > k) {
    throw InputError("window check: r = " + std::to_string(r) + " outside 2.." + std::to_string(k));
  }
}

WindowCheck make_window(double lower, double upper, double value, double slack_low,
                        double slack_high) {
  WindowCheck w;
  w.lower_boundary = lower;
  w.upper_boundary = upper;
  w.value = value;
  w.ratio_low = value / lower;
  w.ratio_high = value > 0.0 ? upper / value : std::numeric_limits<double>::infinity();
  w.inside = value >= lower * slack_low && value <= upper * slack_high;
  return w;
}

}  // namespace

WindowCheck window_check_m(std::size_t n, int k, int r, double t, double a, double slack_low,
                           double slack_high) {
  require_r(k, r);
  const double nn = static_cast<double>(n);
  const double lower = std::pow(t, k - 0.5) * std::pow(nn, r - 0.5) * std::sqrt(std::log(nn));
  const double upper = std::pow(t, k - 0.5 + (k - 1) / (2.0 * (r - 1))) * std::pow(nn, r);
  return make_window(lower, upper, a, slack_low, slack_high);
}

WindowCheck window_check_p(std::size_t n, int k, int r, double p, double delta, double slack_low,
                           double slack_high) {
  require_r(k, r);
  const double nn = static_cast<double>(n);
  const double lower = std::sqrt(std::log(nn) / (p * nn));
  const double upper = std::pow(p, (k - r) / (2.0 * (r - 1)));
  return make_window(lower, upper, delta, slack_low, slack_high);
}

RatePrediction rate_m(const DegreeStats& stats, std::size_t n, int k, double t, double a, int r,
                      double slack_low, double slack_high) {
  if (!(t > 0.0 && t <= 0.5)) throw InputError("rate_m: t must lie in (0, 1/2]");
  if (!(a >= 0.0)) throw InputError("rate_m: threshold a must be non-negative");
  if (!(stats.degree_variance > 0.0)) {
    throw DomainError("rate_m: degree variance is zero, the degree process vanishes");
  }
  const double var = (1.0 - t) * std::pow(t, 2 * k - 1) * stats.degree_variance *
                     static_cast<double>(n);
  RatePrediction out;
  out.model = Model::kUniformM;
  out.threshold = a;
  out.exponent = a * a / (2.0 * var);
  out.normalizer = std::sqrt(var);
  out.window = window_check_m(n, k, r, t, a, slack_low, slack_high);
  return out;
}

RatePrediction rate_p(const DegreeStats& stats, std::size_t n, int k, double p, double delta, int r,
                      double slack_low, double slack_high) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("rate_p: p must lie in (0, 1)");
  if (!(delta >= 0.0)) throw InputError("rate_p: delta must be non-negative");
  const double spread = stats.mean_degree * stats.mean_degree + stats.degree_variance;
  if (!(spread > 0.0)) throw DomainError("rate_p: dbar^2 + sigma^2 is zero");
  const double nn = static_cast<double>(n);
  const double e = stats.total_weight;
  RatePrediction out;
  out.model = Model::kBinomialP;
  out.threshold = delta * std::pow(p, k) * e;
  out.exponent = delta * delta * p * e * e / (2.0 * (1.0 - p) * spread * nn);
  out.normalizer = std::sqrt((1.0 - p) * std::pow(p, 2 * k - 1) * spread * nn);
  out.window = window_check_p(n, k, r, p, delta, slack_low, slack_high);
  return out;
}

Rational ap_pair_sum(int k) {
  if (k < 3) throw InputError("k-AP constants need k >= 3");
  Rational sum(0);
  const Rational km1(k - 1);
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      const Rational num = km1 * km1 - Rational(k - j) * (k - j) - Rational(i - 1) * (i - 1);
      sum += num / (Rational(j - 1) * (k - i));
    }
  }
  return sum;
}

Rational theta_k_exact(int k) {
  const Rational s = ap_pair_sum(k);
  const Rational kk(k);
  return (kk - Rational(3) * kk * kk / 4 + s) / (Rational(3) * (k - 1) * (k - 1));
}

double theta_k(int k) { return to_double(theta_k_exact(k)); }

Rational gamma_k_exact(int k) { return Rational(4, 3) * (Rational(k) + ap_pair_sum(k)); }

double gamma_k(int k) { return to_double(gamma_k_exact(k)); }

std::string to_string(Regime r) {
  switch (r) {
    case Regime::kNormal:
      return "Normal";
    case Regime::kPoisson:
      return "Poisson";
    case Regime::kLocalized:
      return "Localized";
  }
  return "unknown";
}

RegimeClassification w3_regime(double n, double p, double delta) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("w3_regime: p must lie in (0, 1)");
  if (!(delta > 0.0)) throw InputError("w3_regime: delta must be positive");
  RegimeClassification c;
  c.normal_term = 3.0 * delta * delta * p * n / (56.0 * (1.0 - p));
  c.poisson_term = delta * delta * p * p * p * n * n / 8.0;
  c.localized_term = std::sqrt(delta) * std::pow(p, 1.5) * n * std::log(1.0 / p);
  c.value = c.normal_term;
  c.label = Regime::kNormal;
  if (c.poisson_term < c.value) {
    c.value = c.poisson_term;
    c.label = Regime::kPoisson;
  }
  if (c.localized_term < c.value) {
    c.value = c.localized_term;
    c.label = Regime::kLocalized;
  }
  return c;
}

double freedman_bound(double alpha, double beta, double r) {
  if (!(alpha > 0.0 && beta > 0.0 && r > 0.0)) {
    throw InputError("freedman_bound: alpha, beta and R must be positive");
  }
  return std::exp(-alpha * alpha / (2.0 * (beta + r * alpha)));
}

double hoeffding_azuma_bound(double a, double sum_c_sq) {
  if (!(a >= 0.0) || !(sum_c_sq > 0.0)) {
    throw InputError("hoeffding_azuma_bound: need a >= 0 and sum c_i^2 > 0");
  }
  return std::exp(-a * a / (2.0 * sum_c_sq));
}

ConverseFreedman freedman_converse_factor(double alpha, double beta, double r) {
  if (!(alpha > 0.0 && beta > 0.0 && r > 0.0)) {
    throw InputError("freedman_converse_factor: alpha, beta and R must be positive");
  }
  ConverseFreedman out;
  // beta / alpha >= 9 R / delta^2
  const double from_range = std::sqrt(9.0 * r * alpha / beta);
  // alpha^2 / beta >= g(delta) = 16 delta^-2 log(64 delta^-2); g decreases on (0, 1].
  const double target = alpha * alpha / beta;
  auto g = [](double d) { return 16.0 / (d * d) * std::log(64.0 / (d * d)); };
  if (g(1.0) > target) return out;
  double lo = 1e-150;
  double hi = 1.0;
  if (g(lo) <= target) {
    hi = lo;
  } else {
    for (int it = 0; it < 200; ++it) {
      const double mid = std::sqrt(lo * hi);
      if (g(mid) <= target) {
        hi = mid;
      } else {
        lo = mid;
      }
      if (hi / lo < 1.0 + 1e-15) break;
    }
  }
  const double delta = std::max(from_range, hi);
  if (delta > 1.0) return out;
  out.applicable = true;
  out.delta = delta;
  out.bound = 0.5 * std::exp(-alpha * alpha * (1.0 + 4.0 * delta) / (2.0 * beta));
  return out;
}

double split_exponent(const DegreeStats& stats, std::size_t n, int k, double p, double delta,
                      double eta) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("split_exponent: p must lie in (0, 1)");
  const double scale =
      delta * delta * p * static_cast<double>(n) / (2.0 * (1.0 - p) * static_cast<double>(k * k));
  const double s2 = stats.degree_variance;
  const double d2 = stats.mean_degree * stats.mean_degree;
  if (s2 == 0.0) {
    // Only eta = 1 avoids a deviation of the (degenerate) B_m count.
    return eta == 1.0 ? scale : std::numeric_limits<double>::infinity();
  }
  return scale * (eta * eta + d2 * (1.0 - eta) * (1.0 - eta) / s2);
}

OptimalSplit optimal_split(const DegreeStats& stats, std::size_t n, int k, double p, double delta,
                           int grid_points) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("optimal_split: p must lie in (0, 1)");
  const double d2 = stats.mean_degree * stats.mean_degree;
  const double s2 = stats.degree_variance;
  if (!(d2 + s2 > 0.0)) throw DomainError("optimal_split: dbar^2 + sigma^2 is zero");
  OptimalSplit out;
  out.eta_star = d2 / (d2 + s2);
  out.combined_exponent = split_exponent(stats, n, k, p, delta, out.eta_star);
  const double pn = p * static_cast<double>(n);
  auto m_of = [&](double eta) { return (1.0 + eta * delta / k) * pn; };
  for (int g = 0; g < grid_points; ++g) {
    const double eta = grid_points > 1 ? static_cast<double>(g) / (grid_points - 1) : 0.0;
    out.m_eta[eta] = m_of(eta);
  }
  out.m_eta[out.eta_star] = m_of(out.eta_star);
  return out;
}

double binomial_x(std::size_t n, double p, double m) {
  const double nn = static_cast<double>(n);
  return (m - p * nn) / std::sqrt(p * (1.0 - p) * nn);
}

double log_binomial_pmf_gaussian(std::size_t n, double p, double m) {
  const double x = binomial_x(n, p, m);
  return -0.5 * x * x;
}

double log_binomial_pmf(std::size_t n, double p, std::size_t m) {
  if (m > n) return -std::numeric_limits<double>::infinity();
  const double nn = static_cast<double>(n);
  const double mm = static_cast<double>(m);
  return std::lgamma(nn + 1.0) - std::lgamma(mm + 1.0) - std::lgamma(nn - mm + 1.0) +
         mm * std::log(p) + (nn - mm) * std::log1p(-p);
}

}  // namespace moddev
