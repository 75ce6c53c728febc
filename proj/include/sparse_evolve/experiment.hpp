#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparse_evolve/extension.hpp"
#include "sparse_evolve/io.hpp"
#include "sparse_evolve/rational.hpp"

namespace sparse_evolve {

enum class ExperimentKind { kSlope, kSaturation, kGenericity, kClique, kIrregular };

const char* to_string(ExperimentKind k);
ExperimentKind parse_experiment_kind(const std::string& name);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::kSlope;
  Alpha alpha{1, 2};
  std::optional<RootedExtension> extension;
  int trials = 1;
  std::vector<std::uint64_t> checkpoints;
  std::uint64_t master_seed = 0;
  int t = 2;           // genericity depth
  int r = 4;           // irregularity size bound
  std::uint64_t tau0 = 1;
  double tolerance = 0.1;
  double plateau_fraction = 0.9;
  double success_fraction = 0.95;
  std::uint64_t candidate_cap = 10'000;

  static ExperimentSpec from_json(const Json& j);
  Json to_json() const;
  // Throws ArgumentError (or DegeneracyError) when the spec is unusable for
  // its kind.
  void validate() const;
};

struct TrialRow {
  int trial = 0;
  std::uint64_t t = 0;
  std::uint64_t count = 0;
  double elapsed_ms = 0.0;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::string build_tag;
  std::vector<TrialRow> rows;  // by trial, then checkpoint
  Json summary;                // kind-specific aggregates
  bool pass = false;

  // Columns trial,T,count,elapsed_ms.
  std::string csv() const;
  Json to_json() const;
};

struct RunOptions {
  unsigned threads = 1;
  // Record wall-clock time per row; otherwise elapsed_ms is written as 0 so
  // reports stay byte-identical across runs.
  bool timing = false;
};

ExperimentReport run_experiment(const ExperimentSpec& spec, RunOptions options = {});

// Seed of trial i.
std::uint64_t trial_seed(std::uint64_t master_seed, int trial);

// `count` distinct vertices drawn uniformly from 1..n using the trial's
// auxiliary stream.
std::vector<Vertex> sample_roots(std::uint64_t seed, Vertex n, int count);

// Least-squares line through (x, y); returns slope and RMS residual.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

std::string build_tag();

}  // namespace sparse_evolve
