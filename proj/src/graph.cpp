#include "sparse_evolve/graph.hpp"

#include <algorithm>
#include <string>

#include "sparse_evolve/errors.hpp"

namespace sparse_evolve {

EvolvingGraph::EvolvingGraph(Alpha alpha, std::uint64_t seed)
    : alpha_(alpha), seed_(seed), adj_(2) {}

EvolvingGraph EvolvingGraph::from_edges(Vertex num_vertices, std::span<const Edge> edges,
                                        Alpha alpha, std::uint64_t seed) {
  if (num_vertices < 1) throw ArgumentError("graph needs at least one vertex");
  EvolvingGraph g(alpha, seed);
  g.adj_.assign(std::size_t{num_vertices} + 1, {});
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > num_vertices || b > num_vertices) {
      throw ArgumentError("edge [" + std::to_string(a) + "," + std::to_string(b) +
                          "] out of range 1.." + std::to_string(num_vertices));
    }
    if (a == b) throw ArgumentError("self-loop on vertex " + std::to_string(a));
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (Vertex v = 1; v <= num_vertices; ++v) {
    auto& list = g.adj_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw ArgumentError("duplicate edge at vertex " + std::to_string(v));
    }
  }
  g.num_edges_ = edges.size();
  return g;
}

bool EvolvingGraph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<EvolvingGraph::Edge> EvolvingGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex i = 1; i <= num_vertices(); ++i)
    for (Vertex j : adj_[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

EvolvingGraph EvolvingGraph::prefix(Vertex t) const {
  if (t < 1 || t > num_vertices()) {
    throw ArgumentError("prefix size " + std::to_string(t) + " out of range");
  }
  EvolvingGraph g(alpha_, seed_);
  g.adj_.resize(std::size_t{t} + 1);
  for (Vertex v = 1; v <= t; ++v) {
    const auto& list = adj_[v];
    auto end = std::upper_bound(list.begin(), list.end(), t);
    g.adj_[v].assign(list.begin(), end);
    g.num_edges_ += static_cast<std::size_t>(end - list.begin());
  }
  g.num_edges_ /= 2;
  return g;
}

void EvolvingGraph::append_vertex(std::span<const Vertex> earlier) {
  const Vertex v = static_cast<Vertex>(adj_.size());
  for (Vertex u : earlier) adj_[u].push_back(v);
  adj_.emplace_back(earlier.begin(), earlier.end());
  num_edges_ += earlier.size();
}

}  // namespace sparse_evolve
