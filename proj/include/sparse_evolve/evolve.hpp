#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sparse_evolve/graph.hpp"
#include "sparse_evolve/rational.hpp"

namespace sparse_evolve {

// tau^(-alpha) computed as exp(-alpha * ln tau). Requires tau >= 2.
double edge_probability(std::uint64_t tau, const Alpha& alpha);

// Attachment probability p(tau). Either the power law tau^(-alpha) or a
// user-supplied weakly decreasing table p(2), p(3), ... (the last entry is
// reused past the end). No theorem is claimed for tables.
class EdgeSchedule {
 public:
  static EdgeSchedule power_law(const Alpha& alpha);
  static EdgeSchedule table(std::vector<double> probabilities);

  double operator()(std::uint64_t tau) const;
  bool is_power_law() const { return table_.empty(); }

 private:
  EdgeSchedule() = default;
  double alpha_ = 0.0;
  std::vector<double> table_;
};

struct ProcessConfig {
  Alpha alpha;
  std::uint64_t seed = 0;
  std::optional<EvolvingGraph> initial_graph;
  std::optional<std::vector<double>> probability_table;

  EdgeSchedule schedule() const;
};

// Draws for vertex tau come from their own xoshiro256** stream, seeded with
// derive_seed(seed, tau), and are consumed for j = 1..tau-1 in order. A run
// is therefore a pure function of (seed, T) and extending it never changes
// earlier vertices.
EvolvingGraph step(const EvolvingGraph& g);
EvolvingGraph step(const EvolvingGraph& g, const EdgeSchedule& schedule);

// Appends vertices until g has t vertices. No-op if it already does.
void grow(EvolvingGraph& g, Vertex t, const EdgeSchedule& schedule);

// G(T) for the configured process.
EvolvingGraph run_to(const ProcessConfig& config, Vertex t);

}  // namespace sparse_evolve
