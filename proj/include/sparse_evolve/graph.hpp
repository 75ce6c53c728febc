#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sparse_evolve/rational.hpp"

namespace sparse_evolve {

// Vertices are identified with arrival times 1..T.
using Vertex = std::uint32_t;

class EvolvingGraph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  // G(1): a single vertex, no edges.
  EvolvingGraph(Alpha alpha, std::uint64_t seed);

  // Builds a graph on vertices 1..num_vertices from an arbitrary edge list.
  static EvolvingGraph from_edges(Vertex num_vertices, std::span<const Edge> edges,
                                  Alpha alpha, std::uint64_t seed = 0);

  Vertex num_vertices() const { return static_cast<Vertex>(adj_.size() - 1); }
  std::size_t num_edges() const { return num_edges_; }
  const Alpha& alpha() const { return alpha_; }
  std::uint64_t seed() const { return seed_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // All edges (i, j) with i < j, sorted lexicographically.
  std::vector<Edge> edges() const;
  // The induced subgraph on 1..t, i.e. G(t) of the same run.
  EvolvingGraph prefix(Vertex t) const;

  // Adds vertex T+1 adjacent to `earlier`, which must be strictly increasing
  // ids in 1..T.
  void append_vertex(std::span<const Vertex> earlier);

  void reset_identity(Alpha alpha, std::uint64_t seed) {
    alpha_ = alpha;
    seed_ = seed;
  }

  friend bool operator==(const EvolvingGraph& a, const EvolvingGraph& b) {
    return a.alpha_ == b.alpha_ && a.seed_ == b.seed_ && a.adj_ == b.adj_;
  }

 private:
  Alpha alpha_;
  std::uint64_t seed_;
  std::vector<std::vector<Vertex>> adj_;  // index 0 unused; lists sorted
  std::size_t num_edges_ = 0;
};

}  // namespace sparse_evolve
