#include "sparse_evolve/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "sparse_evolve/calculus.hpp"
#include "sparse_evolve/census.hpp"
#include "sparse_evolve/errors.hpp"
#include "sparse_evolve/evolve.hpp"
#include "sparse_evolve/expectation.hpp"
#include "sparse_evolve/rng.hpp"

#ifndef SPARSE_EVOLVE_BUILD_TAG
#define SPARSE_EVOLVE_BUILD_TAG "unknown"
#endif

namespace sparse_evolve {

namespace {

constexpr std::uint64_t kRootStream = 0x524f4f5400000000ull;

struct TrialOutcome {
  std::vector<TrialRow> rows;
  Json extra;
};

struct Moments {
  double mean = 0.0;
  double stderr_ = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  double sum = 0.0;
  for (double x : xs) sum += x;
  m.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    const double var = ss / static_cast<double>(xs.size() - 1);
    m.stderr_ = std::sqrt(var / static_cast<double>(xs.size()));
  }
  return m;
}

class Clock {
 public:
  explicit Clock(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    if (!enabled_) return 0.0;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

Json vertex_array(std::span<const Vertex> vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(v);
  return a;
}

EvolvingGraph warm_up(const ExperimentSpec& spec, std::uint64_t seed) {
  EvolvingGraph g(spec.alpha, seed);
  grow(g, static_cast<Vertex>(spec.tau0), EdgeSchedule::power_law(spec.alpha));
  return g;
}

std::vector<Vertex> complement_prefix(Vertex n, std::span<const Vertex> keep) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v)
    if (std::find(keep.begin(), keep.end(), v) == keep.end()) out.push_back(v);
  return out;
}

TrialOutcome slope_trial(const ExperimentSpec& spec, int trial, bool timing) {
  Clock clock(timing);
  const std::uint64_t seed = trial_seed(spec.master_seed, trial);
  const RootedExtension& ext = *spec.extension;
  const EdgeSchedule schedule = EdgeSchedule::power_law(spec.alpha);
  EvolvingGraph g = warm_up(spec, seed);
  const std::vector<Vertex> roots =
      sample_roots(seed, static_cast<Vertex>(spec.tau0), ext.root_size());
  const std::vector<Vertex> old = complement_prefix(static_cast<Vertex>(spec.tau0), roots);
  TrialOutcome out;
  out.extra["roots"] = vertex_array(roots);
  Json fresh = Json::array();
  for (std::uint64_t t : spec.checkpoints) {
    grow(g, static_cast<Vertex>(t), schedule);
    const std::uint64_t total = count_embeddings(g, ext, roots).embeddings;
    fresh.push_back(count_embeddings(g, ext, roots, old).embeddings);
    out.rows.push_back({trial, t, total, clock.ms()});
  }
  out.extra["new_since_tau0"] = std::move(fresh);
  return out;
}

TrialOutcome saturation_trial(const ExperimentSpec& spec, int trial, bool timing) {
  Clock clock(timing);
  const std::uint64_t seed = trial_seed(spec.master_seed, trial);
  const EdgeSchedule schedule = EdgeSchedule::power_law(spec.alpha);
  EvolvingGraph g(spec.alpha, seed);
  TrialOutcome out;
  for (std::uint64_t t : spec.checkpoints) {
    grow(g, static_cast<Vertex>(t), schedule);
    out.rows.push_back({trial, t, count_embeddings(g, *spec.extension, {}).embeddings, clock.ms()});
  }
  return out;
}

TrialOutcome genericity_trial(const ExperimentSpec& spec, int trial, bool timing) {
  Clock clock(timing);
  const std::uint64_t seed = trial_seed(spec.master_seed, trial);
  const RootedExtension& ext = *spec.extension;
  const EdgeSchedule schedule = EdgeSchedule::power_law(spec.alpha);
  EvolvingGraph g = warm_up(spec, seed);
  const std::vector<Vertex> roots =
      sample_roots(seed, static_cast<Vertex>(spec.tau0), ext.root_size());
  TrialOutcome out;
  out.extra["roots"] = vertex_array(roots);
  Json per_checkpoint = Json::array();
  for (std::uint64_t t : spec.checkpoints) {
    grow(g, static_cast<Vertex>(t), schedule);
    std::uint64_t examined = 0, ambiguous = 0;
    bool found = false;
    std::vector<Vertex> copy, last_witness, last_copy;
    for_each_embedding(g, ext, roots, {}, [&](std::span<const Vertex> images) {
      ++examined;
      std::vector<Vertex> b(roots.begin(), roots.end());
      b.insert(b.end(), images.begin(), images.end());
      try {
        GenericityResult res = is_t_generic(g, roots, b, spec.t, spec.alpha);
        if (res.generic) {
          found = true;
          copy.assign(images.begin(), images.end());
          return false;
        }
        last_witness = std::move(res.witness);
        last_copy.assign(images.begin(), images.end());
      } catch (const DegeneracyError&) {
        ++ambiguous;
      }
      return examined < spec.candidate_cap;
    });
    Json rec;
    rec["T"] = t;
    rec["examined"] = examined;
    rec["ambiguous"] = ambiguous;
    if (found) {
      rec["copy"] = vertex_array(copy);
    } else if (!last_copy.empty()) {
      rec["rejected_copy"] = vertex_array(last_copy);
      rec["witness"] = vertex_array(last_witness);
    }
    per_checkpoint.push_back(std::move(rec));
    out.rows.push_back({trial, t, found ? 1u : 0u, clock.ms()});
  }
  out.extra["checkpoints"] = std::move(per_checkpoint);
  return out;
}

TrialOutcome clique_trial(const ExperimentSpec& spec, int trial, bool timing) {
  Clock clock(timing);
  EvolvingGraph g(spec.alpha, trial_seed(spec.master_seed, trial));
  grow(g, 4, EdgeSchedule::power_law(spec.alpha));
  TrialOutcome out;
  out.rows.push_back({trial, 4, g.num_edges() == 6 ? 1u : 0u, clock.ms()});
  return out;
}

TrialOutcome irregular_trial(const ExperimentSpec& spec, int trial, bool timing) {
  Clock clock(timing);
  const EdgeSchedule schedule = EdgeSchedule::power_law(spec.alpha);
  EvolvingGraph g(spec.alpha, trial_seed(spec.master_seed, trial));
  SearchLimits limits;
  limits.soft_limit = std::max(limits.soft_limit, spec.r);
  limits.allow_above_limit = true;
  TrialOutcome out;
  for (std::uint64_t t : spec.checkpoints) {
    grow(g, static_cast<Vertex>(t), schedule);
    out.rows.push_back(
        {trial, t, irregular_vertices(g, spec.r, spec.alpha, limits).size(), clock.ms()});
  }
  return out;
}

TrialOutcome run_trial(const ExperimentSpec& spec, int trial, bool timing) {
  switch (spec.kind) {
    case ExperimentKind::kSlope: return slope_trial(spec, trial, timing);
    case ExperimentKind::kSaturation: return saturation_trial(spec, trial, timing);
    case ExperimentKind::kGenericity: return genericity_trial(spec, trial, timing);
    case ExperimentKind::kClique: return clique_trial(spec, trial, timing);
    case ExperimentKind::kIrregular: return irregular_trial(spec, trial, timing);
  }
  throw std::logic_error("unknown experiment kind");
}

std::vector<TrialOutcome> run_trials(const ExperimentSpec& spec, RunOptions options) {
  std::vector<TrialOutcome> outcomes(spec.trials);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(spec.trials)));
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (int i = next++; i < spec.trials && !failed; i = next++) {
      try {
        outcomes[i] = run_trial(spec, i, options.timing);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return outcomes;
}

// counts[c][trial] for checkpoint index c.
std::vector<std::vector<double>> by_checkpoint(const std::vector<TrialOutcome>& outcomes,
                                               std::size_t checkpoints) {
  std::vector<std::vector<double>> out(checkpoints);
  for (const auto& o : outcomes)
    for (std::size_t c = 0; c < checkpoints; ++c)
      out[c].push_back(static_cast<double>(o.rows[c].count));
  return out;
}

Json checkpoint_table(const ExperimentSpec& spec, const std::vector<std::vector<double>>& counts) {
  Json table = Json::array();
  for (std::size_t c = 0; c < counts.size(); ++c) {
    const Moments m = moments(counts[c]);
    Json row;
    row["T"] = spec.checkpoints[c];
    row["mean"] = m.mean;
    row["stderr"] = m.stderr_;
    table.push_back(std::move(row));
  }
  return table;
}

bool summarize_slope(const ExperimentSpec& spec, const std::vector<TrialOutcome>& outcomes,
                     Json& summary) {
  const auto counts = by_checkpoint(outcomes, spec.checkpoints.size());
  Json table = checkpoint_table(spec, counts);
  for (std::size_t c = 0; c < counts.size(); ++c) {
    std::vector<double> fresh;
    for (const auto& o : outcomes) fresh.push_back(o.extra["new_since_tau0"][c].get<double>());
    const Moments m = moments(fresh);
    table[c]["new_mean"] = m.mean;
    table[c]["new_stderr"] = m.stderr_;
  }
  summary["checkpoints"] = table;
  const AsymptoticExponent expected = asymptotic_exponent(*spec.extension, spec.alpha);
  const double target = boost::rational_cast<double>(expected.exponent);
  summary["expected_exponent"] = to_string(expected.exponent);
  summary["expected_exponent_value"] = target;
  std::vector<double> x, y;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    const double mean = table[c]["mean"].get<double>();
    if (mean <= 0.0) {
      summary["reason"] = "zero mean count at T=" + std::to_string(spec.checkpoints[c]);
      summary["fitted_slope"] = nullptr;
      summary["fit_residual"] = nullptr;
      return false;
    }
    x.push_back(std::log(static_cast<double>(spec.checkpoints[c])));
    y.push_back(std::log(mean));
  }
  const LineFit fit = fit_line(x, y);
  summary["fitted_slope"] = fit.slope;
  summary["fit_residual"] = fit.residual;
  summary["slope_error"] = fit.slope - target;
  return std::abs(fit.slope - target) <= spec.tolerance;
}

bool summarize_plateau(const ExperimentSpec& spec, const std::vector<TrialOutcome>& outcomes,
                       Json& summary, bool report_copies) {
  const auto counts = by_checkpoint(outcomes, spec.checkpoints.size());
  summary["checkpoints"] = checkpoint_table(spec, counts);
  const std::size_t last = spec.checkpoints.size() - 1;
  std::uint64_t aut = 1;
  if (report_copies) aut = rooted_automorphism_count(*spec.extension);
  int plateaued = 0;
  std::uint64_t max_final = 0;
  Json per_trial = Json::array();
  for (const auto& o : outcomes) {
    Json rec;
    rec["trial"] = o.rows.front().trial;
    Json last_new = nullptr;
    std::uint64_t previous = 0;
    for (const auto& row : o.rows) {
      if (row.count > previous) last_new = row.t;
      previous = row.count;
    }
    const bool flat = o.rows[last].count == o.rows[last - 1].count;
    plateaued += flat ? 1 : 0;
    max_final = std::max(max_final, o.rows[last].count);
    rec["last_new_T"] = last_new;
    rec["final"] = report_copies ? o.rows[last].count / aut : o.rows[last].count;
    rec["plateaued"] = flat;
    per_trial.push_back(std::move(rec));
  }
  const double fraction = static_cast<double>(plateaued) / static_cast<double>(outcomes.size());
  summary["plateaued_trials"] = plateaued;
  summary["plateau_fraction"] = fraction;
  summary["required_fraction"] = spec.plateau_fraction;
  summary[report_copies ? "max_final_copies" : "max_count"] =
      report_copies ? max_final / aut : max_final;
  summary["trials"] = per_trial;
  return fraction >= spec.plateau_fraction;
}

bool summarize_genericity(const ExperimentSpec& spec, const std::vector<TrialOutcome>& outcomes,
                          Json& summary) {
  const auto counts = by_checkpoint(outcomes, spec.checkpoints.size());
  Json table = Json::array();
  for (std::size_t c = 0; c < counts.size(); ++c) {
    double hits = 0;
    for (double v : counts[c]) hits += v;
    Json row;
    row["T"] = spec.checkpoints[c];
    row["success_rate"] = hits / static_cast<double>(counts[c].size());
    table.push_back(std::move(row));
  }
  Json failures = Json::array();
  const std::size_t last = spec.checkpoints.size() - 1;
  for (const auto& o : outcomes) {
    if (o.rows[last].count == 0) {
      Json rec = o.extra["checkpoints"][last];
      rec["trial"] = o.rows[last].trial;
      rec["roots"] = o.extra["roots"];
      failures.push_back(std::move(rec));
    }
  }
  const double rate = table[last]["success_rate"].get<double>();
  summary["checkpoints"] = table;
  summary["success_rate"] = rate;
  summary["required_rate"] = spec.success_fraction;
  summary["failures"] = failures;
  return rate >= spec.success_fraction;
}

bool summarize_clique(const ExperimentSpec& spec, const std::vector<TrialOutcome>& outcomes,
                      Json& summary) {
  std::uint64_t hits = 0;
  for (const auto& o : outcomes) hits += o.rows.front().count;
  const double n = static_cast<double>(outcomes.size());
  const double freq = static_cast<double>(hits) / n;
  const double p =
      exact_expectation_oracle(RootedExtension::clique(4), spec.alpha, 0, 4) /
      static_cast<double>(rooted_automorphism_count(RootedExtension::clique(4)));
  const double sigma = std::sqrt(p * (1.0 - p) / n);
  summary["hits"] = hits;
  summary["frequency"] = freq;
  summary["probability"] = p;
  summary["sigma"] = sigma;
  summary["z"] = sigma > 0 ? (freq - p) / sigma : 0.0;
  return std::abs(freq - p) <= 3.0 * sigma;
}

}  // namespace

const char* to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::kSlope: return "slope";
    case ExperimentKind::kSaturation: return "saturation";
    case ExperimentKind::kGenericity: return "genericity";
    case ExperimentKind::kClique: return "clique";
    case ExperimentKind::kIrregular: return "irregular";
  }
  return "?";
}

ExperimentKind parse_experiment_kind(const std::string& name) {
  for (auto k : {ExperimentKind::kSlope, ExperimentKind::kSaturation, ExperimentKind::kGenericity,
                 ExperimentKind::kClique, ExperimentKind::kIrregular}) {
    if (name == to_string(k)) return k;
  }
  throw ArgumentError("unknown experiment kind \"" + name + "\"");
}

namespace {

template <class T>
void optional_field(const Json& j, const char* key, T& target) {
  auto it = j.find(key);
  if (it == j.end()) return;
  try {
    target = it->get<T>();
  } catch (const Json::exception&) {
    throw ParseError("key \"" + std::string(key) + "\" has the wrong type");
  }
}

}  // namespace

ExperimentSpec ExperimentSpec::from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("experiment spec must be a JSON object");
  for (const char* key : {"kind", "alpha", "trials", "master_seed"}) {
    if (!j.contains(key)) throw ParseError("missing key \"" + std::string(key) + "\"");
  }
  static const char* const known[] = {"kind", "alpha", "extension", "trials", "checkpoints",
                                      "master_seed", "t", "r", "tau0", "tolerance",
                                      "plateau_fraction", "success_fraction", "candidate_cap"};
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return key == k; }) == std::end(known)) {
      throw ParseError("unknown key \"" + key + "\"");
    }
  }
  ExperimentSpec s;
  if (!j["kind"].is_string()) throw ParseError("key \"kind\" must be a string");
  try {
    s.kind = parse_experiment_kind(j["kind"].get<std::string>());
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("key \"kind\": ") + e.what());
  }
  if (!j["alpha"].is_string()) throw ParseError("key \"alpha\" must be a \"p/q\" string");
  try {
    s.alpha = Alpha::parse(j["alpha"].get<std::string>());
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("key \"alpha\": ") + e.what());
  }
  if (j.contains("extension")) s.extension = extension_from_json(j["extension"]);
  optional_field(j, "trials", s.trials);
  optional_field(j, "checkpoints", s.checkpoints);
  optional_field(j, "master_seed", s.master_seed);
  optional_field(j, "t", s.t);
  optional_field(j, "r", s.r);
  optional_field(j, "tau0", s.tau0);
  optional_field(j, "tolerance", s.tolerance);
  optional_field(j, "plateau_fraction", s.plateau_fraction);
  optional_field(j, "success_fraction", s.success_fraction);
  optional_field(j, "candidate_cap", s.candidate_cap);
  if (s.kind == ExperimentKind::kClique && s.checkpoints.empty()) s.checkpoints = {4};
  s.validate();
  return s;
}

Json ExperimentSpec::to_json() const {
  Json j;
  j["kind"] = sparse_evolve::to_string(kind);
  j["alpha"] = alpha.to_string();
  if (extension) j["extension"] = extension_to_json(*extension);
  j["trials"] = trials;
  j["checkpoints"] = checkpoints;
  j["master_seed"] = master_seed;
  j["t"] = t;
  j["r"] = r;
  j["tau0"] = tau0;
  j["tolerance"] = tolerance;
  j["plateau_fraction"] = plateau_fraction;
  j["success_fraction"] = success_fraction;
  j["candidate_cap"] = candidate_cap;
  return j;
}

void ExperimentSpec::validate() const {
  const std::string kind_name = sparse_evolve::to_string(kind);
  auto fail = [&](const std::string& what) { throw ArgumentError(kind_name + " experiment: " + what); };
  if (trials < 1) fail("trials must be at least 1");
  if (checkpoints.empty()) fail("checkpoints must be non-empty");
  for (std::size_t i = 1; i < checkpoints.size(); ++i)
    if (checkpoints[i] <= checkpoints[i - 1]) fail("checkpoints must be strictly increasing");
  if (checkpoints.back() > 0xffffffffull) fail("checkpoints exceed the vertex range");
  if (tau0 < 1) fail("tau0 must be at least 1");

  auto need_extension = [&] {
    if (!extension) fail("an extension is required");
    if (extension->ext_size() < 1) fail("the extension needs at least one vertex");
    return classify(*extension, alpha);
  };
  switch (kind) {
    case ExperimentKind::kSlope: {
      const ExtensionClass cls = need_extension();
      if (cls.is_degenerate) throw DegeneracyError("slope experiment: extension is degenerate at alpha=" + alpha.to_string());
      if (!cls.is_safe) fail("the extension must be safe");
      if (checkpoints.size() < 5) fail("at least 5 checkpoints are needed for the fit");
      if (tau0 < static_cast<std::uint64_t>(extension->root_size())) fail("tau0 must be at least root_size");
      if (checkpoints.front() < tau0) fail("checkpoints must not precede tau0");
      if (!(tolerance >= 0)) fail("tolerance must be non-negative");
      break;
    }
    case ExperimentKind::kSaturation: {
      const ExtensionClass cls = need_extension();
      if (extension->root_size() != 0) fail("the extension must have an empty root");
      if (cls.is_degenerate) throw DegeneracyError("saturation experiment: extension is degenerate at alpha=" + alpha.to_string());
      if (!cls.is_rigid) fail("the extension must be rigid");
      if (checkpoints.size() < 2) fail("at least 2 checkpoints are needed");
      break;
    }
    case ExperimentKind::kGenericity: {
      need_extension();
      if (t < 1) fail("t must be at least 1");
      if (candidate_cap < 1) fail("candidate_cap must be at least 1");
      if (tau0 < static_cast<std::uint64_t>(extension->root_size())) fail("tau0 must be at least root_size");
      if (checkpoints.front() < tau0) fail("checkpoints must not precede tau0");
      break;
    }
    case ExperimentKind::kClique:
      if (checkpoints != std::vector<std::uint64_t>{4}) fail("checkpoints must be [4]");
      break;
    case ExperimentKind::kIrregular:
      if (r < 1) fail("r must be at least 1");
      if (checkpoints.size() < 2) fail("at least 2 checkpoints are needed");
      break;
  }
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial) {
  return derive_seed(master_seed, static_cast<std::uint64_t>(trial));
}

std::vector<Vertex> sample_roots(std::uint64_t seed, Vertex n, int count) {
  if (count < 0 || static_cast<std::uint64_t>(count) > n) {
    throw ArgumentError("cannot sample " + std::to_string(count) + " distinct roots from " +
                        std::to_string(n) + " vertices");
  }
  Xoshiro256 rng(derive_seed(seed, kRootStream));
  std::vector<Vertex> out;
  while (out.size() < static_cast<std::size_t>(count)) {
    const Vertex v = static_cast<Vertex>(rng.below(n)) + 1;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ArgumentError("line fit needs at least 2 points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw ArgumentError("line fit needs distinct x values");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

std::string build_tag() { return SPARSE_EVOLVE_BUILD_TAG; }

ExperimentReport run_experiment(const ExperimentSpec& spec, RunOptions options) {
  spec.validate();
  const std::vector<TrialOutcome> outcomes = run_trials(spec, options);
  ExperimentReport report;
  report.spec = spec;
  report.build_tag = build_tag();
  for (const auto& o : outcomes) report.rows.insert(report.rows.end(), o.rows.begin(), o.rows.end());
  Json summary;
  switch (spec.kind) {
    case ExperimentKind::kSlope: report.pass = summarize_slope(spec, outcomes, summary); break;
    case ExperimentKind::kSaturation: report.pass = summarize_plateau(spec, outcomes, summary, true); break;
    case ExperimentKind::kIrregular: report.pass = summarize_plateau(spec, outcomes, summary, false); break;
    case ExperimentKind::kGenericity: report.pass = summarize_genericity(spec, outcomes, summary); break;
    case ExperimentKind::kClique: report.pass = summarize_clique(spec, outcomes, summary); break;
  }
  report.summary = std::move(summary);
  return report;
}

std::string ExperimentReport::csv() const {
  std::string out = "trial,T,count,elapsed_ms\n";
  char buf[96];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%d,%llu,%llu,%.3f\n", row.trial,
                  static_cast<unsigned long long>(row.t), static_cast<unsigned long long>(row.count),
                  row.elapsed_ms);
    out += buf;
  }
  return out;
}

Json ExperimentReport::to_json() const {
  Json j;
  j["kind"] = sparse_evolve::to_string(spec.kind);
  j["build_tag"] = build_tag;
  j["master_seed"] = spec.master_seed;
  j["spec"] = spec.to_json();
  j["summary"] = summary;
  j["verdict"] = pass ? "pass" : "fail";
  return j;
}

}  // namespace sparse_evolve
