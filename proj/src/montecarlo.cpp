#include "moddev/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#include "moddev/errors.hpp"
#include "moddev/random.hpp"
#include "moddev/rates.hpp"

namespace moddev {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct BatchResult {
  std::vector<std::uint64_t> upper;
  std::vector<std::uint64_t> lower;
  MomentAccumulator moments;
};

double model_mean(const WeightedHypergraph& h, const SamplingModel& model) {
  if (const auto* u = std::get_if<UniformModel>(&model)) return expected_count<double>(h, u->m);
  const double p = std::get<BinomialModel>(model).p;
  return std::pow(p, h.k()) * h.total_weight();
}

// Number of thresholds t with value >= t, thresholds ascending.
std::size_t count_at_or_below(const std::vector<double>& thresholds, double value) {
  return static_cast<std::size_t>(
      std::upper_bound(thresholds.begin(), thresholds.end(), value) - thresholds.begin());
}

}  // namespace

std::string to_string(Tail t) { return t == Tail::kUpper ? "upper" : "lower"; }

void validate(const SimulationConfig& config, const WeightedHypergraph& h) {
  if (config.samples < 1) throw InputError("samples must be at least 1");
  if (config.batch_size < 1) throw InputError("batch size must be at least 1");
  if (!std::is_sorted(config.thresholds.begin(), config.thresholds.end()))
    throw InputError("thresholds must be sorted ascending");
  for (double a : config.thresholds)
    if (!(a >= 0.0)) throw InputError("thresholds must be nonnegative");
  if (const auto* u = std::get_if<UniformModel>(&config.model)) {
    if (u->m > h.n()) throw InputError("m exceeds the number of vertices");
  } else {
    const double p = std::get<BinomialModel>(config.model).p;
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("p must lie in [0, 1]");
  }
}

SimulationResult simulate(const WeightedHypergraph& h, const SimulationConfig& config,
                          bool keep_deviations) {
  validate(config, h);
  const auto counter = make_counter(h, config.use_fast_counter);
  const double mean = model_mean(h, config.model);
  const std::size_t n = h.n();
  const std::size_t words = (n + 63) / 64;
  const std::size_t nt = config.thresholds.size();
  const std::uint64_t batches = (config.samples + config.batch_size - 1) / config.batch_size;
  const unsigned workers =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(config.workers, batches)));

  std::vector<BatchResult> results(batches);
  std::vector<double> deviations(keep_deviations ? config.samples : 0);
  std::atomic<std::uint64_t> done{0};

  auto work = [&](unsigned w) {
    std::vector<std::uint64_t> mask(words, 0);
    std::vector<Vertex> members;
    members.reserve(n);
    PrefixSampler sampler(std::get_if<UniformModel>(&config.model) ? n : 0);
    for (std::uint64_t b = w; b < batches; b += workers) {
      BatchResult& r = results[b];
      r.upper.assign(nt, 0);
      r.lower.assign(nt, 0);
      const std::uint64_t first = b * config.batch_size;
      const std::uint64_t last = std::min(config.samples, first + config.batch_size);
      for (std::uint64_t s = first; s < last; ++s) {
        CounterRng rng(config.seed, s);
        if (const auto* u = std::get_if<UniformModel>(&config.model)) {
          sampler.draw(u->m, rng, members);
          std::sort(members.begin(), members.end());
        } else {
          const double p = std::get<BinomialModel>(config.model).p;
          members.clear();
          for (std::size_t v = 1; v <= n; ++v)
            if (rng.uniform() < p) members.push_back(static_cast<Vertex>(v));
        }
        for (Vertex v : members) mask[(v - 1) >> 6] |= std::uint64_t{1} << ((v - 1) & 63);
        const double d = counter->count(mask, members) - mean;
        for (Vertex v : members) mask[(v - 1) >> 6] = 0;
        r.moments.add(d);
        // upper: thresholds a <= d; lower: thresholds a <= -d
        const std::size_t up = count_at_or_below(config.thresholds, d);
        for (std::size_t j = 0; j < up; ++j) ++r.upper[j];
        const std::size_t lo = count_at_or_below(config.thresholds, -d);
        for (std::size_t j = 0; j < lo; ++j) ++r.lower[j];
        if (keep_deviations) deviations[s] = d;
      }
      done.fetch_add(last - first, std::memory_order_relaxed);
    }
  };

  if (workers == 1 && !config.progress) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<unsigned> finished{0};
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        work(w);
        finished.fetch_add(1);
      });
    if (config.progress) {
      while (finished.load() < workers) {
        std::this_thread::sleep_for(std::chrono::milliseconds(250));
        config.progress(static_cast<double>(done.load()) / static_cast<double>(config.samples));
      }
    }
    for (auto& t : pool) t.join();
  }

  SimulationResult out;
  out.model_mean = mean;
  out.counter = counter->name();
  out.upper_hits.assign(nt, 0);
  out.lower_hits.assign(nt, 0);
  for (const BatchResult& r : results) {
    for (std::size_t j = 0; j < nt; ++j) {
      out.upper_hits[j] += r.upper[j];
      out.lower_hits[j] += r.lower[j];
    }
    out.moments.merge(r.moments);
  }
  out.deviations = std::move(deviations);
  return out;
}

double predicted_normalizer(const WeightedHypergraph& h, const SamplingModel& model) {
  const DegreeStats stats = degree_stats_from_degrees(h.degrees(), h.k());
  const double n = static_cast<double>(h.n());
  if (const auto* u = std::get_if<UniformModel>(&model)) {
    const double t = static_cast<double>(u->m) / n;
    return std::sqrt((1 - t) * std::pow(t, 2 * h.k() - 1) * stats.degree_variance * n);
  }
  const double p = std::get<BinomialModel>(model).p;
  return std::sqrt((1 - p) * std::pow(p, 2 * h.k() - 1) *
                   (stats.mean_degree * stats.mean_degree + stats.degree_variance) * n);
}

double predicted_exponent(const WeightedHypergraph& h, const SamplingModel& model, double a) {
  if (std::isinf(a)) return std::numeric_limits<double>::infinity();
  const double sd = predicted_normalizer(h, model);
  if (!(sd > 0.0)) return kNaN;
  return a * a / (2 * sd * sd);
}

std::vector<TailEstimate> tail_estimates(const WeightedHypergraph& h, const SimulationConfig& config,
                                         const SimulationResult& result) {
  std::vector<TailEstimate> rows;
  rows.reserve(2 * config.thresholds.size());
  for (Tail side : {Tail::kUpper, Tail::kLower}) {
    const auto& hits = side == Tail::kUpper ? result.upper_hits : result.lower_hits;
    for (std::size_t j = 0; j < config.thresholds.size(); ++j) {
      TailEstimate e;
      e.side = side;
      e.threshold = config.thresholds[j];
      e.hits = hits[j];
      e.samples = config.samples;
      e.p_hat = static_cast<double>(e.hits) / static_cast<double>(e.samples);
      const WilsonInterval ci = wilson_interval(e.hits, e.samples);
      e.ci_low = ci.low;
      e.ci_high = ci.high;
      if (e.hits == 0) {
        e.ci_low = 0.0;
        e.neg_log_p = -std::log(e.ci_high);
        e.neg_log_p_is_lower_bound = true;
      } else {
        e.neg_log_p = -std::log(e.p_hat);
      }
      e.predicted_exponent = predicted_exponent(h, config.model, e.threshold);
      e.ratio = e.predicted_exponent > 0.0 ? e.neg_log_p / e.predicted_exponent : kNaN;
      const double expected_hits = std::isnan(e.predicted_exponent)
                                       ? static_cast<double>(e.hits)
                                       : static_cast<double>(e.samples) * std::exp(-e.predicted_exponent);
      e.underpowered = expected_hits < 10.0;
      rows.push_back(e);
    }
  }
  return rows;
}

std::vector<TailEstimate> estimate_tail(const WeightedHypergraph& h, const SimulationConfig& config) {
  return tail_estimates(h, config, simulate(h, config));
}

MomentsReport empirical_moments(const WeightedHypergraph& h, const SimulationConfig& config,
                                bool with_ks) {
  SimulationConfig c = config;
  c.thresholds.clear();
  SimulationResult r = simulate(h, c, with_ks);
  MomentsReport out;
  out.samples = r.moments.count();
  out.mean = r.moments.mean();
  out.variance = r.moments.variance();
  out.skewness = r.moments.skewness();
  out.excess_kurtosis = r.moments.excess_kurtosis();
  out.normalizer = predicted_normalizer(h, c.model);
  out.variance_ratio = out.normalizer > 0.0 ? out.variance / (out.normalizer * out.normalizer) : kNaN;
  out.ks_distance = kNaN;
  if (with_ks && out.variance > 0.0) {
    const double sd = std::sqrt(out.variance);
    for (double& d : r.deviations) d = (d - out.mean) / sd;
    out.ks_distance = ks_distance_to_normal(r.deviations);
  }
  return out;
}

std::vector<TailEstimate> rate_ratio_sweep(const WeightedHypergraph& h,
                                           const SimulationConfig& config) {
  return estimate_tail(h, config);
}

std::string tail_csv(const std::vector<TailEstimate>& rows) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "side,threshold,hits,samples,p_hat,ci_low,ci_high,neg_log_p,neg_log_p_is_lower_bound,"
        "predicted_exponent,ratio,underpowered\n";
  for (const TailEstimate& e : rows)
    os << to_string(e.side) << ',' << e.threshold << ',' << e.hits << ',' << e.samples << ','
       << e.p_hat << ',' << e.ci_low << ',' << e.ci_high << ',' << e.neg_log_p << ','
       << (e.neg_log_p_is_lower_bound ? 1 : 0) << ',' << e.predicted_exponent << ',' << e.ratio
       << ',' << (e.underpowered ? 1 : 0) << '\n';
  return os.str();
}

}  // namespace moddev
