// moddev: command-line front end for the moderate-deviation toolkit.
//
// Standard output carries exactly one result document (JSON or CSV); progress
// and warnings go to standard error. Exit codes: 0 success, 1 verification
// failure, 2 usage or input error, 3 resource-limit refusal.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "moddev/counters.hpp"
#include "moddev/errors.hpp"
#include "moddev/generators.hpp"
#include "moddev/hypergraph.hpp"
#include "moddev/io.hpp"
#include "moddev/montecarlo.hpp"
#include "moddev/oracle.hpp"
#include "moddev/process.hpp"
#include "moddev/random.hpp"
#include "moddev/rates.hpp"
#include "moddev/verify.hpp"

using nlohmann::json;
using namespace moddev;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

// Above this many edges the stats path works from the degree sequence alone.
constexpr std::uint64_t kMaterializeLimit = 20'000'000;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

// JSON cannot hold NaN or infinity; they become null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw InputError(std::string("environment variable ") + name + " is not an integer");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("invalid " + what + ": '" + s + "'");
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw InputError("invalid " + what + ": '" + s + "'");
  return v;
}

struct GenSpec {
  std::string family;
  std::vector<std::uint64_t> args;
};

GenSpec parse_gen(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("--gen expects family:args, e.g. ap:300,3");
  GenSpec g{spec.substr(0, colon), {}};
  for (const auto& part : split(spec.substr(colon + 1), ','))
    g.args.push_back(parse_u64(part, "--gen argument"));
  const std::size_t want = g.family == "ap" ? 2 : g.family == "sidon" ? 1 : g.family == "random" ? 3 : 0;
  if (want == 0) throw InputError("unknown generator '" + g.family + "' (ap, sidon, random)");
  if (g.family == "random" ? (g.args.size() < 3 || g.args.size() > 4) : g.args.size() != want)
    throw InputError("wrong number of arguments for --gen " + g.family);
  return g;
}

struct Common {
  std::string gen;
  std::string input;
  std::string format = "json";
  std::string seed = "default";
  unsigned workers = 0;
  bool quiet = false;

  std::uint64_t seed_value = kDefaultSeed;
};

WeightedHypergraph materialize(const GenSpec& g, std::uint64_t seed) {
  if (g.family == "ap") return gen_ap(g.args[0], static_cast<int>(g.args[1]));
  if (g.family == "sidon") return gen_sidon(g.args[0]);
  return gen_random(g.args[0], static_cast<int>(g.args[1]), g.args[2], g.args.size() > 3 ? g.args[3] : seed);
}

WeightedHypergraph load_source(const Common& c) {
  if (c.gen.empty() == c.input.empty()) throw InputError("give exactly one of --gen or --input");
  if (!c.gen.empty()) return materialize(parse_gen(c.gen), c.seed_value);
  WeightedHypergraph h = load(c.input);
  if (h.merged_duplicates() > 0)
    std::cerr << "warning: merged " << h.merged_duplicates() << " duplicate edges\n";
  return h;
}

struct StatsSource {
  DegreeStats stats;
  Family family = Family::kGeneric;
  bool from_degree_sequence = false;
  std::size_t merged_duplicates = 0;
};

StatsSource stats_for(const Common& c, int max_r) {
  StatsSource s;
  if (!c.gen.empty()) {
    const GenSpec g = parse_gen(c.gen);
    const bool big_ap = g.family == "ap" && ap_edge_count(g.args[0], static_cast<int>(g.args[1])) > kMaterializeLimit;
    const bool big_sidon = g.family == "sidon" && sidon_edge_count(g.args[0]) > kMaterializeLimit;
    if (big_ap || big_sidon) {
      const int k = big_ap ? static_cast<int>(g.args[1]) : 4;
      const auto degrees = big_ap ? ap_degree_sequence(g.args[0], k) : sidon_degree_sequence(g.args[0]);
      s.stats = degree_stats_from_degrees(degrees, k);
      s.family = big_ap ? Family::kArithmeticProgression : Family::kSidon;
      s.from_degree_sequence = true;
      return s;
    }
  }
  const WeightedHypergraph h = load_source(c);
  s.stats = degree_stats_from_degrees(h.degrees(), h.k());
  for (int r = 1; r <= std::min(max_r, h.k()); ++r) s.stats.max_r_degree[r] = max_r_degree(h, r);
  s.family = detect_family(h);
  s.merged_duplicates = h.merged_duplicates();
  return s;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kArithmeticProgression: return "ap";
    case Family::kSidon: return "sidon";
    default: return "generic";
  }
}

SamplingModel parse_model(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw InputError("--model expects m:<count> or p:<probability>");
  const std::string kind = s.substr(0, colon), value = s.substr(colon + 1);
  if (kind == "m") return UniformModel{static_cast<std::size_t>(parse_u64(value, "m"))};
  if (kind == "p") {
    const double p = parse_double(value, "p");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("p must lie in [0, 1]");
    return BinomialModel{p};
  }
  throw InputError("--model kind must be m or p");
}

json model_json(const SamplingModel& m) {
  if (const auto* u = std::get_if<UniformModel>(&m)) return {{"kind", "m"}, {"m", u->m}};
  return {{"kind", "p"}, {"p", std::get<BinomialModel>(m).p}};
}

json stats_json(const DegreeStats& s) {
  json delta = json::object();
  for (const auto& [r, v] : s.max_r_degree) delta[std::to_string(r)] = v;
  return {{"n", s.n},
          {"k", s.k},
          {"total_weight", s.total_weight},
          {"mean_degree", s.mean_degree},
          {"degree_variance", s.degree_variance},
          {"degree_second_moment", s.degree_second_moment},
          {"max_r_degree", delta}};
}

json window_json(const WindowCheck& w) {
  return {{"lower_boundary", num(w.lower_boundary)},
          {"upper_boundary", num(w.upper_boundary)},
          {"value", num(w.value)},
          {"ratio_low", num(w.ratio_low)},
          {"ratio_high", num(w.ratio_high)},
          {"inside", w.inside}};
}

// Flattens a JSON document to "path,value" rows for --format csv.
void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_number_float()) {
    out << prefix << ',' << fmt(j.get<double>()) << '\n';
  } else if (j.is_string()) {
    out << prefix << ',' << j.get<std::string>() << '\n';
  } else {
    out << prefix << ',' << j.dump() << '\n';
  }
}

void emit(const Common& c, const json& doc) {
  if (c.format == "csv") {
    std::cout << "key,value\n";
    flatten(doc, "", std::cout);
  } else {
    std::cout << doc.dump(2) << '\n';
  }
}

std::function<void(double)> progress_reporter(const Common& c, const std::string& task) {
  if (c.quiet) return {};
  return [task](double f) {
    std::cerr << json{{"task", task}, {"progress", std::round(f * 1000) / 1000}}.dump() << '\n';
  };
}

void add_common(CLI::App* app, Common& c, bool needs_graph = true) {
  if (needs_graph) {
    app->add_option("--gen", c.gen, "generator: ap:N,k | sidon:N | random:N,k,edges[,seed]");
    app->add_option("--input", c.input, "hypergraph file (.json or text)");
  }
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--seed", c.seed, "64-bit seed, or 'random'");
  app->add_option("--workers", c.workers, "worker threads (default: available cores)");
  app->add_flag("--quiet", c.quiet, "no progress on standard error");
}

void resolve_common(Common& c) {
  if (c.seed == "random") {
    std::random_device rd;
    c.seed_value = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  } else if (c.seed != "default") {
    c.seed_value = parse_u64(c.seed, "--seed");
  }
  const std::uint64_t cap = env_u64("MODDEV_MAX_WORKERS", 0);
  unsigned w = c.workers != 0 ? c.workers : std::max(1u, std::thread::hardware_concurrency());
  if (cap > 0 && w > cap) w = static_cast<unsigned>(cap);
  c.workers = w;
}

// ---- subcommands ----------------------------------------------------------

int cmd_gen(const Common& c, const std::string& output) {
  const WeightedHypergraph h = load_source(c);
  if (!output.empty()) {
    save(h, output);
    return kExitOk;
  }
  if (c.format == "csv") {
    save(h, std::cout, FileFormat::kText);
  } else {
    std::cout << to_json(h).dump() << '\n';
  }
  return kExitOk;
}

int cmd_stats(const Common& c, int max_r) {
  const StatsSource s = stats_for(c, max_r);
  json doc = stats_json(s.stats);
  doc["family"] = family_name(s.family);
  doc["from_degree_sequence"] = s.from_degree_sequence;
  doc["merged_duplicates"] = s.merged_duplicates;
  emit(c, doc);
  return kExitOk;
}

int cmd_decompose(const Common& c, std::size_t m, bool exact) {
  const WeightedHypergraph h = load_source(c);
  if (m < 1 || m > h.n()) throw InputError("--m must lie in 1..N");
  if (2 * m > h.n()) std::cerr << "warning: m > N/2; the rate theory assumes t <= 1/2\n";
  CounterRng rng(c.seed_value, 0);
  const OrderedPrefix prefix = sample_prefix(h.n(), m, rng);
  const VertexSet b(h.n(), prefix.order);

  struct Row {
    std::size_t i;
    int l;
    double a, cond_mean, x, y, kappa, kappa_prime, lambda_partial, qvar_partial;
  };
  std::vector<Row> rows;
  double reconstruction = std::nan(""), deviation = 0.0;
  std::string exact_reconstruction, exact_deviation;
  auto fill = [&](const auto& d) {
    for (std::size_t i = 1; i <= m; ++i)
      for (int l = 1; l <= h.k(); ++l) {
        auto get = [&](const auto& v) { return v.empty() ? std::nan("") : to_double(v[i - 1]); };
        rows.push_back({i, l, to_double(d.a[l - 1][i - 1]), to_double(d.cond_mean[l - 1][i - 1]),
                        to_double(d.x[l - 1][i - 1]), to_double(d.y[l - 1][i - 1]), get(d.kappa),
                        get(d.kappa_prime), get(d.lambda_partial), get(d.qvar_partial)});
      }
    if (m + static_cast<std::size_t>(h.k()) <= h.n()) reconstruction = to_double(martingale_reconstruction(d));
  };
  if (exact) {
    const auto d = decompose<Rational>(h, prefix);
    fill(d);
    const Rational dev = deviation_m<Rational>(h, b);
    deviation = to_double(dev);
    exact_deviation = dev.str();
    if (m + static_cast<std::size_t>(h.k()) <= h.n()) exact_reconstruction = martingale_reconstruction(d).str();
  } else {
    fill(decompose<double>(h, prefix));
    deviation = deviation_m<double>(h, b);
  }

  if (c.format == "csv") {
    std::cout << "i,l,A,condmean,X,Y,kappa,kappa_prime,lambda_partial,qvar_partial\n";
    for (const Row& r : rows)
      std::cout << r.i << ',' << r.l << ',' << fmt(r.a) << ',' << fmt(r.cond_mean) << ',' << fmt(r.x)
                << ',' << fmt(r.y) << ',' << fmt(r.kappa) << ',' << fmt(r.kappa_prime) << ','
                << fmt(r.lambda_partial) << ',' << fmt(r.qvar_partial) << '\n';
    return kExitOk;
  }
  json table = json::array();
  for (const Row& r : rows)
    table.push_back({{"i", r.i}, {"l", r.l}, {"A", r.a}, {"condmean", r.cond_mean}, {"X", r.x},
                     {"Y", r.y}, {"kappa", num(r.kappa)}, {"kappa_prime", num(r.kappa_prime)},
                     {"lambda_partial", num(r.lambda_partial)}, {"qvar_partial", num(r.qvar_partial)}});
  json doc = {{"n", h.n()},
              {"k", h.k()},
              {"m", m},
              {"seed", c.seed_value},
              {"exact", exact},
              {"order", prefix.order},
              {"deviation", deviation},
              {"reconstruction", num(reconstruction)},
              {"rows", table}};
  if (exact) {
    doc["deviation_exact"] = exact_deviation;
    doc["reconstruction_exact"] = exact_reconstruction.empty() ? json(nullptr) : json(exact_reconstruction);
  }
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_rate(const Common& c, const std::string& model_text, std::optional<double> a,
             std::optional<double> delta, std::optional<int> r_opt, double slack_low, double slack_high) {
  const SamplingModel model = parse_model(model_text);
  const StatsSource s = stats_for(c, 3);
  const DegreeStats& st = s.stats;
  const std::size_t n = st.n;
  const int k = st.k;
  // Sidon 4-sets have bounded triple degrees but linear pair degrees, so r = 3.
  const int r = r_opt.value_or(s.family == Family::kSidon ? 3 : 2);
  if (r < 2 || r > k) throw InputError("--r must lie in 2..k");
  json doc;
  doc["family"] = family_name(s.family);
  doc["stats"] = stats_json(st);
  doc["model"] = model_json(model);
  doc["r"] = r;
  if (const auto* u = std::get_if<UniformModel>(&model)) {
    if (!a) throw InputError("the m model needs --a");
    const double t = static_cast<double>(u->m) / static_cast<double>(n);
    const RatePrediction pr = rate_m(st, n, k, t, *a, r, slack_low, slack_high);
    doc["t"] = t;
    doc["a"] = *a;
    doc["exponent"] = pr.exponent;
    doc["normalizer"] = pr.normalizer;
    doc["threshold"] = pr.threshold;
    doc["window"] = window_json(pr.window);
    if (s.family == Family::kSidon)
      doc["sidon_constant_form"] = 360.0 * *a * *a /
                                   ((1 - t) * std::pow(t, 7) * std::pow(static_cast<double>(n), 5));
    if (s.family == Family::kArithmeticProgression)
      doc["ap_constant_form"] = *a * *a / (2 * theta_k(k) * (1 - t) * std::pow(t, 2 * k - 1) *
                                           std::pow(static_cast<double>(n), 3));
  } else {
    if (!delta) throw InputError("the p model needs --delta");
    const double p = std::get<BinomialModel>(model).p;
    const RatePrediction pr = rate_p(st, n, k, p, *delta, r, slack_low, slack_high);
    const OptimalSplit split = optimal_split(st, n, k, p, *delta);
    doc["p"] = p;
    doc["delta"] = *delta;
    doc["exponent"] = pr.exponent;
    doc["normalizer"] = pr.normalizer;
    doc["threshold"] = pr.threshold;
    doc["window"] = window_json(pr.window);
    json m_eta = json::array();
    for (const auto& [eta, m] : split.m_eta)
      m_eta.push_back({{"eta", eta}, {"m", m}, {"x", binomial_x(n, p, m)},
                       {"log_pmf_gaussian", log_binomial_pmf_gaussian(n, p, m)},
                       {"log_pmf", log_binomial_pmf(n, p, static_cast<std::size_t>(std::llround(m)))}});
    doc["split"] = {{"eta_star", split.eta_star}, {"combined_exponent", split.combined_exponent},
                    {"m_eta", m_eta}};
    if (s.family == Family::kArithmeticProgression)
      doc["ap_constant_form"] = *delta * *delta * p * static_cast<double>(n) /
                                (2 * gamma_k(k) * (1 - p));
    if (s.family == Family::kSidon)
      doc["sidon_constant_form"] = 5.0 * *delta * *delta * p * static_cast<double>(n) / (162.0 * (1 - p));
  }
  if (s.family == Family::kSidon)
    doc["note"] = "Sidon default r = 3 (pair degrees grow linearly); upper window p^(1/4) for B_p. "
                  "The generic r = 2 formula would give p instead";
  emit(c, doc);
  return kExitOk;
}

int cmd_regimes(const Common& c, double n, double p, double delta) {
  const RegimeClassification rc = w3_regime(n, p, delta);
  json doc = {{"n", n},
              {"p", p},
              {"delta", delta},
              {"normal_term", rc.normal_term},
              {"poisson_term", rc.poisson_term},
              {"localized_term", rc.localized_term},
              {"value", rc.value},
              {"label", to_string(rc.label)},
              {"conjectural", rc.conjectural}};
  emit(c, doc);
  return kExitOk;
}

std::vector<double> parse_thresholds(const std::string& s) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) {
    if (part == "inf") {
      out.push_back(std::numeric_limits<double>::infinity());
    } else {
      out.push_back(parse_double(part, "threshold"));
    }
  }
  return out;
}

SimulationConfig make_config(const Common& c, const WeightedHypergraph& h, const std::string& model,
                             std::uint64_t samples, std::uint64_t batch) {
  SimulationConfig cfg;
  cfg.seed = c.seed_value;
  cfg.samples = samples;
  cfg.workers = c.workers;
  cfg.model = parse_model(model);
  cfg.batch_size = batch;
  (void)h;
  return cfg;
}

int cmd_tail(const Common& c, const std::string& model, const std::string& thresholds, bool in_sd,
             std::uint64_t samples, std::uint64_t batch) {
  const WeightedHypergraph h = load_source(c);
  SimulationConfig cfg = make_config(c, h, model, samples, batch);
  cfg.thresholds = parse_thresholds(thresholds);
  const double sd = predicted_normalizer(h, cfg.model);
  if (in_sd)
    for (double& a : cfg.thresholds) a *= sd;
  std::sort(cfg.thresholds.begin(), cfg.thresholds.end());
  cfg.progress = progress_reporter(c, "tail");
  const SimulationResult result = simulate(h, cfg);
  const auto rows = tail_estimates(h, cfg, result);
  for (const TailEstimate& e : rows)
    if (e.underpowered)
      std::cerr << "warning: " << to_string(e.side) << " tail at " << fmt(e.threshold)
                << " is underpowered (fewer than 10 expected hits)\n";
  if (c.format == "csv") {
    std::cout << tail_csv(rows);
    return kExitOk;
  }
  json table = json::array();
  for (const TailEstimate& e : rows)
    table.push_back({{"side", to_string(e.side)},
                     {"threshold", num(e.threshold)},
                     {"hits", e.hits},
                     {"samples", e.samples},
                     {"p_hat", e.p_hat},
                     {"ci_low", e.ci_low},
                     {"ci_high", e.ci_high},
                     {"neg_log_p", num(e.neg_log_p)},
                     {"neg_log_p_is_lower_bound", e.neg_log_p_is_lower_bound},
                     {"predicted_exponent", num(e.predicted_exponent)},
                     {"ratio", num(e.ratio)},
                     {"underpowered", e.underpowered}});
  json doc = {{"n", h.n()},         {"k", h.k()},           {"model", model_json(cfg.model)},
              {"seed", cfg.seed},   {"samples", cfg.samples}, {"normalizer", num(sd)},
              {"model_mean", result.model_mean}, {"counter", result.counter}, {"tails", table}};
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_moments(const Common& c, const std::string& model, bool ks, std::uint64_t samples,
                std::uint64_t batch) {
  const WeightedHypergraph h = load_source(c);
  SimulationConfig cfg = make_config(c, h, model, samples, batch);
  if (samples < 1000) throw InputError("moments need at least 1000 samples");
  cfg.progress = progress_reporter(c, "moments");
  const MomentsReport r = empirical_moments(h, cfg, ks);
  json doc = {{"n", h.n()},
              {"k", h.k()},
              {"model", model_json(cfg.model)},
              {"seed", cfg.seed},
              {"samples", r.samples},
              {"mean", r.mean},
              {"variance", r.variance},
              {"skewness", num(r.skewness)},
              {"excess_kurtosis", num(r.excess_kurtosis)},
              {"normalizer", num(r.normalizer)},
              {"variance_ratio", num(r.variance_ratio)},
              {"ks_distance", num(r.ks_distance)}};
  emit(c, doc);
  return kExitOk;
}

int cmd_enumerate(const Common& c, std::optional<std::size_t> m, std::optional<std::string> p,
                  std::vector<std::string> thresholds) {
  const WeightedHypergraph h = load_source(c);
  if (m.has_value() == p.has_value()) throw InputError("give exactly one of --m or --p");
  EnumerationOptions opt;
  opt.limit = env_u64("MODDEV_ENUMERATION_LIMIT", kDefaultEnumerationLimit);
  opt.workers = c.workers;
  const Pmf pmf = m ? exact_distribution_m(h, *m, opt) : exact_distribution_p(h, parse_rational(*p), opt);
  if (c.format == "csv") {
    std::cout << "value,probability,probability_float\n";
    for (const auto& [v, pr] : pmf) std::cout << v.str() << ',' << pr.str() << ',' << fmt(to_double(pr)) << '\n';
    return kExitOk;
  }
  json pj = json::object();
  for (const auto& [v, pr] : pmf) pj[v.str()] = pr.str();
  json doc = {{"n", h.n()},
              {"k", h.k()},
              {"pmf", pj},
              {"total", pmf_total(pmf).str()},
              {"mean", pmf_mean(pmf).str()},
              {"variance", pmf_variance(pmf).str()}};
  if (m) {
    doc["m"] = *m;
  } else {
    doc["p"] = parse_rational(*p).str();
  }
  json tails = json::array();
  for (const auto& t : thresholds) {
    const Rational a = parse_rational(t);
    tails.push_back({{"threshold", a.str()},
                     {"upper", exact_tail(pmf, a, Side::kUpper).str()},
                     {"lower", exact_tail(pmf, a, Side::kLower).str()}});
  }
  doc["tails"] = tails;
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const Common& c, bool quick) {
  const VerifyReport report = run_identity_suite(quick, c.seed_value);
  json checks = json::array();
  for (const CheckResult& r : report.checks) {
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    if (!c.quiet)
      std::cerr << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)"
                << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
  }
  emit(c, json{{"passed", report.passed()}, {"quick", quick}, {"checks", checks}});
  return report.passed() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moddev: moderate deviations of subhypergraph counts"};
  app.require_subcommand(1);
  Common c;

  auto* gen = app.add_subcommand("gen", "emit a hypergraph");
  add_common(gen, c);
  std::string output;
  gen->add_option("--output", output, "write to file (.json or text) instead of stdout");

  auto* stats = app.add_subcommand("stats", "degree statistics");
  add_common(stats, c);
  int max_r = 0;
  stats->add_option("--max-r", max_r, "largest r for the set-degree profile (default k)");

  auto* dec = app.add_subcommand("decompose", "martingale decomposition along a random prefix");
  add_common(dec, c);
  std::size_t dec_m = 0;
  bool exact = false;
  dec->add_option("--m", dec_m, "prefix length")->required();
  dec->add_flag("--exact", exact, "exact rational arithmetic");

  auto* rate = app.add_subcommand("rate", "predicted rate, normaliser and window");
  add_common(rate, c);
  std::string model;
  std::optional<double> a, delta;
  std::optional<int> r;
  double slack_low = 1.0, slack_high = 1.0;
  rate->add_option("--model", model, "m:<count> or p:<probability>")->required();
  rate->add_option("--a", a, "deviation (m model)");
  rate->add_option("--delta", delta, "relative deviation (p model)");
  rate->add_option("--r", r, "window parameter r");
  rate->add_option("--slack-low", slack_low, "lower window slack factor");
  rate->add_option("--slack-high", slack_high, "upper window slack factor");

  auto* reg = app.add_subcommand("regimes", "three candidate rates for 3-AP counts in B_p");
  add_common(reg, c, false);
  double reg_n = 0, reg_p = 0, reg_delta = 0;
  reg->add_option("--n", reg_n, "N")->required();
  reg->add_option("--p", reg_p, "p")->required();
  reg->add_option("--delta", reg_delta, "delta")->required();

  auto* tail = app.add_subcommand("tail", "Monte Carlo tail probabilities");
  add_common(tail, c);
  std::string thresholds;
  bool in_sd = false;
  std::uint64_t samples = 100000, batch = 4096;
  tail->add_option("--model", model, "m:<count> or p:<probability>")->required();
  tail->add_option("--thresholds", thresholds, "a1,a2,... ('inf' allowed)")->required();
  tail->add_flag("--in-normalizers", in_sd, "thresholds are multiples of the predicted normaliser");
  tail->add_option("--samples", samples, "sample count");
  tail->add_option("--batch-size", batch, "samples per batch");

  auto* mom = app.add_subcommand("moments", "Monte Carlo moments and normality diagnostics");
  add_common(mom, c);
  bool ks = false;
  mom->add_option("--model", model, "m:<count> or p:<probability>")->required();
  mom->add_option("--samples", samples, "sample count");
  mom->add_option("--batch-size", batch, "samples per batch");
  mom->add_flag("--ks", ks, "Kolmogorov-Smirnov distance of the standardised sample");

  auto* en = app.add_subcommand("enumerate", "exact law by exhaustive enumeration");
  add_common(en, c);
  std::optional<std::size_t> en_m;
  std::optional<std::string> en_p;
  std::vector<std::string> en_thresholds;
  en->add_option("--m", en_m, "subset size");
  en->add_option("--p", en_p, "inclusion probability (exact, e.g. 1/3)");
  en->add_option("--threshold", en_thresholds, "report exact tails at these values");

  auto* ver = app.add_subcommand("verify", "exact-identity suite");
  add_common(ver, c, false);
  bool quick = false;
  ver->add_flag("--quick", quick, "small case counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    resolve_common(c);
    if (*gen) return cmd_gen(c, output);
    if (*stats) return cmd_stats(c, max_r > 0 ? max_r : 64);
    if (*dec) return cmd_decompose(c, dec_m, exact);
    if (*rate) return cmd_rate(c, model, a, delta, r, slack_low, slack_high);
    if (*reg) return cmd_regimes(c, reg_n, reg_p, reg_delta);
    if (*tail) return cmd_tail(c, model, thresholds, in_sd, samples, batch);
    if (*mom) return cmd_moments(c, model, ks, samples, batch);
    if (*en) return cmd_enumerate(c, en_m, en_p, en_thresholds);
    if (*ver) return cmd_verify(c, quick);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
