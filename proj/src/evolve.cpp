#include "sparse_evolve/evolve.hpp"

#include <cmath>
#include <string>

#include "sparse_evolve/errors.hpp"
#include "sparse_evolve/rng.hpp"

namespace sparse_evolve {

double edge_probability(std::uint64_t tau, const Alpha& alpha) {
  if (tau < 2) throw ArgumentError("edge_probability needs tau >= 2");
  return std::exp(-alpha.to_double() * std::log(static_cast<double>(tau)));
}

EdgeSchedule EdgeSchedule::power_law(const Alpha& alpha) {
  EdgeSchedule s;
  s.alpha_ = alpha.to_double();
  return s;
}

EdgeSchedule EdgeSchedule::table(std::vector<double> probabilities) {
  if (probabilities.empty()) throw ArgumentError("probability table is empty");
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    double p = probabilities[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ArgumentError("probability table entry " + std::to_string(i) +
                          " outside [0,1]");
    }
    if (i > 0 && p > probabilities[i - 1]) {
      throw ArgumentError("probability table must be weakly decreasing (entry " +
                          std::to_string(i) + ")");
    }
  }
  EdgeSchedule s;
  s.table_ = std::move(probabilities);
  return s;
}

double EdgeSchedule::operator()(std::uint64_t tau) const {
  if (table_.empty()) {
    return std::exp(-alpha_ * std::log(static_cast<double>(tau)));
  }
  std::size_t index = tau - 2;
  return index < table_.size() ? table_[index] : table_.back();
}

EdgeSchedule ProcessConfig::schedule() const {
  if (probability_table) return EdgeSchedule::table(*probability_table);
  return EdgeSchedule::power_law(alpha);
}

void grow(EvolvingGraph& g, Vertex t, const EdgeSchedule& schedule) {
  std::vector<Vertex> earlier;
  for (Vertex tau = g.num_vertices() + 1; tau <= t; ++tau) {
    const double p = schedule(tau);
    Xoshiro256 stream(derive_seed(g.seed(), tau));
    earlier.clear();
    for (Vertex j = 1; j < tau; ++j) {
      if (stream.next_double() < p) earlier.push_back(j);
    }
    g.append_vertex(earlier);
  }
}

EvolvingGraph step(const EvolvingGraph& g, const EdgeSchedule& schedule) {
  EvolvingGraph next = g;
  grow(next, g.num_vertices() + 1, schedule);
  return next;
}

EvolvingGraph step(const EvolvingGraph& g) {
  return step(g, EdgeSchedule::power_law(g.alpha()));
}

EvolvingGraph run_to(const ProcessConfig& config, Vertex t) {
  EvolvingGraph g(config.alpha, config.seed);
  if (config.initial_graph) {
    g = *config.initial_graph;
    g.reset_identity(config.alpha, config.seed);
  }
  if (t < g.num_vertices()) {
    throw ArgumentError("T=" + std::to_string(t) + " is below the initial graph size " +
                        std::to_string(g.num_vertices()));
  }
  if (t < 1) throw ArgumentError("T must be at least 1");
  grow(g, t, config.schedule());
  return g;
}

}  // namespace sparse_evolve
