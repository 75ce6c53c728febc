#pragma once

// Generators and brute-force reference implementations shared by the tests.
// Nothing here calls into the library's subset tables or search code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "sparse_evolve/extension.hpp"
#include "sparse_evolve/graph.hpp"
#include "sparse_evolve/rational.hpp"

namespace testing_support {

using sparse_evolve::Alpha;
using sparse_evolve::Rational;
using sparse_evolve::RootedExtension;
using sparse_evolve::Vertex;

// Dense adjacency for graphs on at most 16 vertices, 0-based.
struct SmallGraph {
  int n = 0;
  std::vector<std::uint16_t> adj;

  explicit SmallGraph(int vertices) : n(vertices), adj(vertices, 0) {}

  void add_edge(int a, int b) {
    adj[a] |= static_cast<std::uint16_t>(1u << b);
    adj[b] |= static_cast<std::uint16_t>(1u << a);
  }
  bool has_edge(int a, int b) const { return adj[a] >> b & 1u; }

  // Edges with both ends in `mask`.
  int edges_within(std::uint32_t mask) const {
    int twice = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) twice += std::popcount(static_cast<std::uint32_t>(adj[v]) & mask);
    return twice / 2;
  }

  std::vector<std::pair<Vertex, Vertex>> edge_list_1based() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (has_edge(a, b)) out.emplace_back(a + 1, b + 1);
    return out;
  }

  sparse_evolve::EvolvingGraph to_evolving(const Alpha& alpha) const {
    auto edges = edge_list_1based();
    return sparse_evolve::EvolvingGraph::from_edges(static_cast<Vertex>(n), edges, alpha);
  }
};

inline int pair_count(int n) { return n * (n - 1) / 2; }

// The graph on n vertices whose edge set is given by the bits of `code`
// over pairs (0,1), (0,2), ..., (n-2,n-1).
inline SmallGraph graph_from_code(int n, std::uint64_t code) {
  SmallGraph g(n);
  int bit = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++bit)
      if (code >> bit & 1u) g.add_edge(a, b);
  return g;
}

inline SmallGraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  SmallGraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

// δ(B/A) = |B \ A| - α (E(B) - E(A)) for vertex masks A ⊆ B.
inline Rational naive_delta(const SmallGraph& g, std::uint32_t a, std::uint32_t b,
                            const Alpha& alpha) {
  const int v = std::popcount(b & ~a);
  const int e = g.edges_within(b) - g.edges_within(a);
  return Rational(v) - alpha.value() * Rational(e);
}

template <class F>
void for_each_between(std::uint32_t a, std::uint32_t b, F&& f) {
  const std::uint32_t free = b & ~a;
  for (std::uint32_t s = free;; s = (s - 1) & free) {
    f(a | s);
    if (s == 0) break;
  }
}

inline bool naive_safe(const SmallGraph& g, std::uint32_t a, std::uint32_t b, const Alpha& alpha) {
  bool ok = true;
  for_each_between(a, b, [&](std::uint32_t i) {
    if (naive_delta(g, a, i, alpha).numerator() < 0) ok = false;
  });
  return ok;
}

// Strict reading: δ(B/I) < 0 for every A ⊆ I ⊊ B.
inline bool naive_rigid(const SmallGraph& g, std::uint32_t a, std::uint32_t b, const Alpha& alpha) {
  bool ok = true;
  for_each_between(a, b, [&](std::uint32_t i) {
    if (i != b && naive_delta(g, i, b, alpha).numerator() >= 0) ok = false;
  });
  return ok;
}

inline Rational naive_d(const SmallGraph& g, std::uint32_t a, std::uint32_t b, const Alpha& alpha) {
  bool first = true;
  Rational best(0);
  for_each_between(a, b, [&](std::uint32_t i) {
    if (i == b) return;
    const Rational v = naive_delta(g, i, b, alpha);
    if (first || v > best) best = v;
    first = false;
  });
  return best;
}

// Some intermediate step of B/A has δ exactly 0.
inline bool naive_degenerate(const SmallGraph& g, std::uint32_t a, std::uint32_t b,
                             const Alpha& alpha) {
  bool deg = false;
  for_each_between(a, b, [&](std::uint32_t i) {
    if (i != a && naive_delta(g, a, i, alpha).numerator() == 0) deg = true;
    if (i != b && naive_delta(g, i, b, alpha).numerator() == 0) deg = true;
  });
  return deg;
}

// The extension B/A with root vertices (A, ascending) and extension vertices
// (B \ A, ascending); edges inside A are dropped.
inline RootedExtension extension_of(const SmallGraph& g, std::uint32_t a, std::uint32_t b) {
  std::vector<int> roots, ext;
  for (int v = 0; v < g.n; ++v) {
    if (a >> v & 1u) roots.push_back(v);
    else if (b >> v & 1u) ext.push_back(v);
  }
  std::vector<RootedExtension::Edge> re, ee;
  for (std::size_t i = 0; i < ext.size(); ++i) {
    for (std::size_t r = 0; r < roots.size(); ++r)
      if (g.has_edge(roots[r], ext[i])) re.emplace_back(static_cast<int>(r), static_cast<int>(i));
    for (std::size_t j = i + 1; j < ext.size(); ++j)
      if (g.has_edge(ext[i], ext[j])) ee.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return RootedExtension(static_cast<int>(roots.size()), static_cast<int>(ext.size()), re, ee);
}

// Random α = p/q with q <= 997 that avoids every v/e with v <= max_v and
// e <= max_e, so no small graph has a zero predimension step.
inline Alpha random_alpha(std::mt19937_64& rng, int max_v = 5, int max_e = 10) {
  std::uniform_int_distribution<std::int64_t> den(11, 997);
  for (;;) {
    const std::int64_t q = den(rng);
    const std::int64_t p = std::uniform_int_distribution<std::int64_t>(1, q - 1)(rng);
    const Rational a(p, q);
    bool bad = false;
    for (int v = 1; v <= max_v && !bad; ++v)
      for (int e = 1; e <= max_e && !bad; ++e)
        if (a == Rational(v, e)) bad = true;
    if (!bad) return Alpha(a.numerator(), a.denominator());
  }
}

// Abstract graph view of a rooted extension: vertices 0..r-1 are the root,
// r..r+n-1 the extension vertices.
inline SmallGraph graph_of(const RootedExtension& ext) {
  SmallGraph g(ext.root_size() + ext.ext_size());
  for (auto [r, e] : ext.root_edges()) g.add_edge(r, ext.root_size() + e);
  for (auto [a, b] : ext.ext_edges()) g.add_edge(ext.root_size() + a, ext.root_size() + b);
  return g;
}

inline std::uint32_t low_mask(int k) { return k == 0 ? 0u : (1u << k) - 1u; }

// Counts injective maps of the extension vertices into V(g) \ (roots ∪
// forbidden) realising ext as an induced rooted subgraph, by listing every
// tuple of distinct vertices.
inline std::uint64_t naive_embeddings(const SmallGraph& g, const RootedExtension& ext,
                                      const std::vector<int>& roots,
                                      const std::vector<int>& forbidden = {}) {
  const int n = ext.ext_size();
  std::vector<int> pool;
  for (int v = 0; v < g.n; ++v)
    if (std::find(roots.begin(), roots.end(), v) == roots.end() &&
        std::find(forbidden.begin(), forbidden.end(), v) == forbidden.end())
      pool.push_back(v);
  if (static_cast<int>(pool.size()) < n) return 0;
  auto re = [&](int r, int e) {
    return std::find(ext.root_edges().begin(), ext.root_edges().end(), std::make_pair(r, e)) !=
           ext.root_edges().end();
  };
  auto ee = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return std::find(ext.ext_edges().begin(), ext.ext_edges().end(), std::make_pair(a, b)) !=
           ext.ext_edges().end();
  };
  std::uint64_t count = 0;
  std::vector<int> idx(n, 0);
  // Odometer over all n-tuples from the pool.
  std::vector<int> tuple(n);
  const int m = static_cast<int>(pool.size());
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(m);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      tuple[i] = pool[c % m];
      c /= m;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (tuple[i] == tuple[j]) ok = false;
    for (int i = 0; i < n && ok; ++i) {
      for (int r = 0; r < static_cast<int>(roots.size()) && ok; ++r)
        if (g.has_edge(roots[r], tuple[i]) != re(r, i)) ok = false;
      for (int j = i + 1; j < n && ok; ++j)
        if (g.has_edge(tuple[i], tuple[j]) != ee(i, j)) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

inline std::vector<Vertex> to_1based(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (int v = 0; v < 32; ++v)
    if (mask >> v & 1u) out.push_back(static_cast<Vertex>(v + 1));
  return out;
}

inline std::uint32_t mask_of(const std::vector<Vertex>& vs) {
  std::uint32_t m = 0;
  for (Vertex v : vs) m |= 1u << (v - 1);
  return m;
}

// Brute-force r-irregular vertices: union of every vertex set of size <= r
// whose induced graph is rigid over the empty set.
inline std::uint32_t naive_irregular(const SmallGraph& g, int r, const Alpha& alpha) {
  std::uint32_t out = 0;
  for (std::uint32_t s = 1; s < (1u << g.n); ++s)
    if (std::popcount(s) <= r && naive_rigid(g, 0, s, alpha)) out |= s;
  return out;
}

// Brute-force weak t-closure of X.
inline std::uint32_t naive_weak_closure(const SmallGraph& g, std::uint32_t x, int t,
                                        const Alpha& alpha) {
  std::uint32_t out = x;
  const std::uint32_t all = low_mask(g.n);
  for_each_between(x, all, [&](std::uint32_t z) {
    if (z != x && std::popcount(z & ~x) <= t && naive_rigid(g, x, z, alpha)) out |= z;
  });
  return out;
}

// Brute-force t-genericity of B/A. Returns true when no C with
// 1 <= |C \ B| <= t and C/B rigid has E(C/B) != E(C/A) over A ∪ C.
inline bool naive_generic(const SmallGraph& g, std::uint32_t a, std::uint32_t b, int t,
                          const Alpha& alpha) {
  const std::uint32_t outside = low_mask(g.n) & ~b;
  for (std::uint32_t c = outside; c != 0; c = (c - 1) & outside) {
    if (std::popcount(c) > t) continue;
    if (!naive_rigid(g, b, b | c, alpha)) continue;
    const int e_over_b = g.edges_within(b | c) - g.edges_within(b);
    const int e_over_a = g.edges_within(a | c) - g.edges_within(a);
    if (e_over_b != e_over_a) return false;
  }
  return true;
}

// Any rigid candidate considered by the brute-force queries above is
// degenerate (some step has δ exactly 0).
inline bool naive_any_ambiguous(const SmallGraph& g, const Alpha& alpha) {
  for (std::uint32_t a = 0; a < (1u << g.n); ++a)
    for (std::uint32_t b = a; b < (1u << g.n); b = (b + 1) | a)
      if (b != a) {
        const Rational v = naive_delta(g, a, b, alpha);
        if (v.numerator() == 0) return true;
      }
  return false;
}

}  // namespace testing_support
