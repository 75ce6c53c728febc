#include "sparse_evolve/census.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <thread>

#include "sparse_evolve/errors.hpp"

namespace sparse_evolve {

namespace {

void check_vertex(const EvolvingGraph& g, Vertex v, const char* what) {
  if (v < 1 || v > g.num_vertices()) {
    throw ArgumentError(std::string(what) + " vertex " + std::to_string(v) +
                        " out of range 1.." + std::to_string(g.num_vertices()));
  }
}

std::vector<Vertex> sorted_set(const EvolvingGraph& g, std::span<const Vertex> in,
                               const char* what) {
  std::vector<Vertex> out(in.begin(), in.end());
  for (Vertex v : out) check_vertex(g, v, what);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void check_limit(int size, SearchLimits limits, const char* what) {
  if (size < 1) throw ArgumentError(std::string(what) + " must be at least 1");
  if (size > limits.soft_limit && !limits.allow_above_limit) {
    throw ArgumentError(std::string(what) + "=" + std::to_string(size) +
                        " exceeds the soft limit " + std::to_string(limits.soft_limit) +
                        " (pass an override to allow it)");
  }
  if (size > kSubsetSoftLimit) {
    throw ArgumentError(std::string(what) + " exceeds the hard limit " +
                        std::to_string(kSubsetSoftLimit));
  }
}

// Backtracking search for induced rooted embeddings. Extension vertices are
// placed in an order where each vertex, when possible, has an already fixed
// neighbour whose adjacency list supplies the candidates.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const EvolvingGraph& g, const RootedExtension& ext,
                  std::span<const Vertex> roots, std::span<const Vertex> forbidden)
      : g_(g), ext_(ext), r_(ext.root_size()), n_(ext.ext_size()) {
    if (roots.size() != static_cast<std::size_t>(r_)) {
      throw ArgumentError("root assignment has " + std::to_string(roots.size()) +
                          " vertices, extension expects " + std::to_string(r_));
    }
    blocked_.assign(std::size_t{g.num_vertices()} + 1, 0);
    for (Vertex v : roots) {
      check_vertex(g, v, "root");
      if (blocked_[v]) throw ArgumentError("root vertices must be distinct");
      blocked_[v] = 1;
    }
    for (Vertex v : forbidden) {
      check_vertex(g, v, "forbidden");
      if (blocked_[v] == 1) throw ArgumentError("forbidden set meets the roots");
      blocked_[v] = 2;
    }
    slots_.assign(roots.begin(), roots.end());
    slots_.resize(r_ + n_, 0);
    plan();
  }

  // Candidates for the first placed vertex.
  std::vector<Vertex> first_candidates() const {
    std::vector<Vertex> out;
    if (n_ == 0) return out;
    collect(0, out);
    return out;
  }

  // Embeddings whose first placed vertex is one of `firsts`.
  template <class Visit>
  bool run_from(std::span<const Vertex> firsts, Visit& visit) {
    for (Vertex c : firsts) {
      if (!accept(0, c)) continue;
      place(0, c);
      bool go = descend(1, visit);
      unplace(0, c);
      if (!go) return false;
    }
    return true;
  }

  template <class Visit>
  bool run(Visit& visit) {
    if (n_ == 0) return visit(images());
    return descend(0, visit);
  }

  std::span<const Vertex> images() {
    out_.resize(n_);
    for (int k = 0; k < n_; ++k) out_[order_[k]] = slots_[r_ + k];
    return out_;
  }

 private:
  void plan() {
    // Greedy order: most connections into already fixed vertices first,
    // then higher degree, then index.
    std::vector<bool> done(n_, false);
    std::vector<int> pos(n_, -1);
    for (int k = 0; k < n_; ++k) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < n_; ++v) {
        if (done[v]) continue;
        int links = std::popcount(ext_.root_adjacency(v));
        for (int u = 0; u < n_; ++u)
          if (done[u] && (ext_.ext_adjacency(v) >> u & 1u)) ++links;
        int deg = ext_.degree(v);
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = v;
          best_links = links;
          best_deg = deg;
        }
      }
      done[best] = true;
      pos[best] = k;
      order_.push_back(best);
    }
    // For each position: every earlier slot with whether an edge is wanted.
    want_.resize(n_);
    anchors_.resize(n_);
    for (int k = 0; k < n_; ++k) {
      int v = order_[k];
      for (int i = 0; i < r_; ++i) {
        bool edge = ext_.root_adjacency(v) >> i & 1u;
        want_[k].emplace_back(i, edge);
        if (edge) anchors_[k].push_back(i);
      }
      for (int j = 0; j < k; ++j) {
        bool edge = ext_.ext_adjacency(v) >> order_[j] & 1u;
        want_[k].emplace_back(r_ + j, edge);
        if (edge) anchors_[k].push_back(r_ + j);
      }
      min_degree_.push_back(static_cast<std::size_t>(ext_.degree(v)));
    }
  }

  void collect(int k, std::vector<Vertex>& out) const {
    if (anchors_[k].empty()) {
      for (Vertex c = 1; c <= g_.num_vertices(); ++c) out.push_back(c);
      return;
    }
    int best = anchors_[k].front();
    for (int s : anchors_[k])
      if (g_.degree(slots_[s]) < g_.degree(slots_[best])) best = s;
    auto nb = g_.neighbors(slots_[best]);
    out.assign(nb.begin(), nb.end());
  }

  bool accept(int k, Vertex c) const {
    if (blocked_[c]) return false;
    if (g_.degree(c) < min_degree_[k]) return false;
    for (const auto& [slot, edge] : want_[k]) {
      if (g_.adjacent(c, slots_[slot]) != edge) return false;
    }
    return true;
  }

  void place(int k, Vertex c) {
    slots_[r_ + k] = c;
    blocked_[c] = 3;
  }
  void unplace(int k, Vertex c) {
    slots_[r_ + k] = 0;
    blocked_[c] = 0;
  }

  template <class Visit>
  bool descend(int k, Visit& visit) {
    if (k == n_) return visit(images());
    std::vector<Vertex> candidates;
    collect(k, candidates);
    for (Vertex c : candidates) {
      if (!accept(k, c)) continue;
      place(k, c);
      bool go = descend(k + 1, visit);
      unplace(k, c);
      if (!go) return false;
    }
    return true;
  }

  const EvolvingGraph& g_;
  const RootedExtension& ext_;
  int r_, n_;
  std::vector<std::uint8_t> blocked_;
  std::vector<Vertex> slots_;  // roots, then placed vertices by position
  std::vector<int> order_;     // position -> ext vertex
  std::vector<std::vector<std::pair<int, bool>>> want_;
  std::vector<std::vector<int>> anchors_;
  std::vector<std::size_t> min_degree_;
  std::vector<Vertex> out_;
};

// The scaled predimension table of Z over X in a concrete graph.
SubsetPredims local_predims(const EvolvingGraph& g, const std::vector<Vertex>& x_sorted,
                            std::span<const Vertex> z, const Alpha& alpha,
                            int* edges_to_x = nullptr) {
  std::vector<std::uint32_t> adj(z.size(), 0);
  std::vector<int> root_degree(z.size(), 0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      if (g.adjacent(z[i], z[j])) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
    if (x_sorted.size() < g.degree(z[i])) {
      for (Vertex x : x_sorted) root_degree[i] += g.adjacent(z[i], x) ? 1 : 0;
    } else {
      for (Vertex u : g.neighbors(z[i])) root_degree[i] += contains(x_sorted, u) ? 1 : 0;
    }
  }
  if (edges_to_x) *edges_to_x = std::accumulate(root_degree.begin(), root_degree.end(), 0);
  return SubsetPredims(adj, root_degree, alpha);
}

enum class Rigidity { kRigid, kNotRigid, kAmbiguous };

Rigidity rigidity(const SubsetPredims& table) {
  std::int64_t d = table.scaled_d();
  if (d < 0) return Rigidity::kRigid;
  return d == 0 ? Rigidity::kAmbiguous : Rigidity::kNotRigid;
}

// ESU enumeration (Wernicke 2006) of the connected vertex sets of size
// 1..max_size in the subgraph induced on alive vertices, each reported once.
// Only sets whose lowest-ranked vertex is a root are produced; rank(v) must be
// injective.
template <class Alive, class Rank, class Visit>
class ConnectedSets {
 public:
  ConnectedSets(const EvolvingGraph& g, Alive alive, Rank rank, int max_size, Visit& visit)
      : g_(g), alive_(alive), rank_(rank), max_(max_size), visit_(visit) {}

  // Returns false if the visitor stopped the enumeration.
  bool from(Vertex root) {
    if (!alive_(root)) return true;
    sub_.assign(1, root);
    std::vector<Vertex> ext;
    const auto root_rank = rank_(root);
    for (Vertex u : g_.neighbors(root))
      if (alive_(u) && rank_(u) > root_rank) ext.push_back(u);
    return extend(ext, root_rank);
  }

 private:
  bool extend(std::vector<Vertex> ext, std::uint64_t root_rank) {
    if (!visit_(std::span<const Vertex>(sub_))) return false;
    if (static_cast<int>(sub_.size()) == max_) return true;
    while (!ext.empty()) {
      Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : g_.neighbors(w)) {
        if (!alive_(u) || rank_(u) <= root_rank) continue;
        bool exclusive = true;
        for (Vertex s : sub_) {
          if (s == u || g_.adjacent(s, u)) {
            exclusive = false;
            break;
          }
        }
        if (exclusive) next.push_back(u);
      }
      sub_.push_back(w);
      bool go = extend(std::move(next), root_rank);
      sub_.pop_back();
      if (!go) return false;
    }
    return true;
  }

  const EvolvingGraph& g_;
  Alive alive_;
  Rank rank_;
  int max_;
  Visit& visit_;
  std::vector<Vertex> sub_;
};

// Peels vertices outside `x` with fewer than k neighbours among x and the
// surviving vertices.
std::vector<char> relative_core(const EvolvingGraph& g, const std::vector<Vertex>& x, int k) {
  const Vertex n = g.num_vertices();
  std::vector<char> in_x(std::size_t{n} + 1, 0), alive(std::size_t{n} + 1, 0);
  for (Vertex v : x) in_x[v] = 1;
  std::vector<int> count(std::size_t{n} + 1, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 1; v <= n; ++v) {
    if (in_x[v]) continue;
    alive[v] = 1;
    count[v] = static_cast<int>(g.degree(v));
    if (count[v] < k) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (Vertex u : g.neighbors(v)) {
      if (alive[u] && --count[u] == k - 1) queue.push_back(u);
    }
  }
  return alive;
}

std::string join(std::span<const Vertex> vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

}  // namespace

EmbeddingCount count_embeddings(const EvolvingGraph& g, const RootedExtension& ext,
                                std::span<const Vertex> roots,
                                std::span<const Vertex> forbidden, unsigned threads) {
  EmbeddingSearch search(g, ext, roots, forbidden);
  std::uint64_t total = 0;
  if (threads <= 1 || ext.ext_size() == 0) {
    auto visit = [&](std::span<const Vertex>) {
      ++total;
      return true;
    };
    search.run(visit);
  } else {
    // Partition on the first placed vertex; per-worker totals are summed.
    std::vector<Vertex> firsts = search.first_candidates();
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        EmbeddingSearch local(g, ext, roots, forbidden);
        std::vector<Vertex> mine;
        for (std::size_t i = w; i < firsts.size(); i += threads) mine.push_back(firsts[i]);
        auto visit = [&](std::span<const Vertex>) {
          ++partial[w];
          return true;
        };
        local.run_from(mine, visit);
      });
    }
    for (auto& t : pool) t.join();
    total = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  }
  EmbeddingCount out;
  out.embeddings = total;
  const std::uint64_t aut = rooted_automorphism_count(ext);
  const std::uint64_t common = std::gcd(total, aut);
  out.copies_num = total / common;
  out.copies_den = aut / common;
  return out;
}

void for_each_embedding(const EvolvingGraph& g, const RootedExtension& ext,
                        std::span<const Vertex> roots, std::span<const Vertex> forbidden,
                        const std::function<bool(std::span<const Vertex>)>& visit) {
  EmbeddingSearch search(g, ext, roots, forbidden);
  auto call = [&](std::span<const Vertex> images) { return visit(images); };
  search.run(call);
}

RootedExtension induced_extension(const EvolvingGraph& g, std::span<const Vertex> roots,
                                  std::span<const Vertex> members) {
  std::vector<RootedExtension::Edge> root_edges, ext_edges;
  for (std::size_t k = 0; k < members.size(); ++k) {
    check_vertex(g, members[k], "member");
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (roots[i] == members[k]) throw ArgumentError("member is also a root");
      if (g.adjacent(roots[i], members[k]))
        root_edges.emplace_back(static_cast<int>(i), static_cast<int>(k));
    }
    for (std::size_t j = k + 1; j < members.size(); ++j)
      if (g.adjacent(members[k], members[j]))
        ext_edges.emplace_back(static_cast<int>(k), static_cast<int>(j));
  }
  return RootedExtension(static_cast<int>(roots.size()), static_cast<int>(members.size()),
                         std::move(root_edges), std::move(ext_edges));
}

std::vector<Vertex> irregular_vertices(const EvolvingGraph& g, int r, const Alpha& alpha,
                                       SearchLimits limits) {
  check_limit(r, limits, "r");
  const int k = alpha.min_rigid_degree();
  const std::vector<Vertex> none;
  std::vector<char> alive = relative_core(g, none, k);
  std::vector<char> hit(std::size_t{g.num_vertices()} + 1, 0);
  std::vector<std::vector<Vertex>> ambiguous;

  auto visit = [&](std::span<const Vertex> set) {
    if (set.size() < 2) return true;  // a single vertex has delta = 1
    Rigidity verdict = rigidity(local_predims(g, none, set, alpha));
    if (verdict == Rigidity::kRigid) {
      for (Vertex v : set) hit[v] = 1;
    } else if (verdict == Rigidity::kAmbiguous) {
      ambiguous.emplace_back(set.begin(), set.end());
    }
    return true;
  };
  auto is_alive = [&](Vertex v) { return alive[v] != 0; };
  auto rank = [](Vertex v) { return std::uint64_t{v}; };
  ConnectedSets sets(g, is_alive, rank, r, visit);
  for (Vertex v = 1; v <= g.num_vertices(); ++v) sets.from(v);

  for (const auto& set : ambiguous) {
    for (Vertex v : set) {
      if (!hit[v]) {
        throw DegeneracyError("irregular_vertices: rigidity of {" + join(set) +
                              "} has d = 0 exactly at alpha=" + alpha.to_string());
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

std::vector<Vertex> weak_closure(const EvolvingGraph& g, std::span<const Vertex> x, int t,
                                 const Alpha& alpha, SearchLimits limits) {
  check_limit(t, limits, "t");
  const std::vector<Vertex> base = sorted_set(g, x, "closure base");
  const int k = alpha.min_rigid_degree();
  std::vector<char> alive = relative_core(g, base, k);
  std::vector<char> hit(std::size_t{g.num_vertices()} + 1, 0);
  for (Vertex v : base) hit[v] = 1;
  std::vector<std::vector<Vertex>> ambiguous;

  auto visit = [&](std::span<const Vertex> set) {
    Rigidity verdict = rigidity(local_predims(g, base, set, alpha));
    if (verdict == Rigidity::kRigid) {
      for (Vertex v : set) hit[v] = 1;
    } else if (verdict == Rigidity::kAmbiguous) {
      ambiguous.emplace_back(set.begin(), set.end());
    }
    return true;
  };
  auto is_alive = [&](Vertex v) { return alive[v] != 0; };
  auto rank = [](Vertex v) { return std::uint64_t{v}; };
  ConnectedSets sets(g, is_alive, rank, t, visit);
  for (Vertex v = 1; v <= g.num_vertices(); ++v) sets.from(v);

  for (const auto& set : ambiguous) {
    for (Vertex v : set) {
      if (!hit[v]) {
        throw DegeneracyError("weak_closure: rigidity of {" + join(set) +
                              "} over the base has d = 0 exactly at alpha=" +
                              alpha.to_string());
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

GenericityResult is_t_generic(const EvolvingGraph& g, std::span<const Vertex> a,
                              std::span<const Vertex> b, int t, const Alpha& alpha,
                              SearchLimits limits) {
  check_limit(t, limits, "t");
  const std::vector<Vertex> base = sorted_set(g, a, "A");
  const std::vector<Vertex> top = sorted_set(g, b, "B");
  if (!std::includes(top.begin(), top.end(), base.begin(), base.end())) {
    throw ArgumentError("is_t_generic: A must be a subset of B");
  }
  std::vector<Vertex> fresh;  // B \ A
  std::set_difference(top.begin(), top.end(), base.begin(), base.end(),
                      std::back_inserter(fresh));
  const std::size_t k = static_cast<std::size_t>(alpha.min_rigid_degree());
  auto is_alive = [&](Vertex v) { return !contains(top, v) && g.degree(v) >= k; };

  // Any violating C has a connected component that touches B \ A and is
  // rigid over B on its own, so the search starts from neighbours of B \ A.
  std::vector<Vertex> seeds;
  for (Vertex v : fresh)
    for (Vertex u : g.neighbors(v))
      if (is_alive(u)) seeds.push_back(u);
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  const std::uint64_t n_seeds = seeds.size();
  auto rank = [&](Vertex v) -> std::uint64_t {
    auto it = std::lower_bound(seeds.begin(), seeds.end(), v);
    if (it != seeds.end() && *it == v) return static_cast<std::uint64_t>(it - seeds.begin());
    return n_seeds + v;
  };

  GenericityResult result;
  bool ambiguous = false;
  auto visit = [&](std::span<const Vertex> set) {
    int to_ab = 0;
    SubsetPredims table = local_predims(g, top, set, alpha, &to_ab);
    Rigidity verdict = rigidity(table);
    if (verdict == Rigidity::kNotRigid) return true;
    // E(C/AB) and E(C/A) share the edges inside C.
    int to_a = 0;
    for (Vertex c : set)
      for (Vertex x : base) to_a += g.adjacent(c, x) ? 1 : 0;
    if (to_ab == to_a) return true;
    if (verdict == Rigidity::kAmbiguous) {
      ambiguous = true;
      return true;
    }
    result.generic = false;
    result.witness.assign(set.begin(), set.end());
    std::sort(result.witness.begin(), result.witness.end());
    return false;
  };
  ConnectedSets sets(g, is_alive, rank, t, visit);
  for (Vertex s : seeds)
    if (!sets.from(s)) break;
  if (result.generic && ambiguous) {
    throw DegeneracyError("is_t_generic: a candidate attachment has d = 0 exactly at alpha=" +
                          alpha.to_string());
  }
  return result;
}

const char* to_string(Attachment a) {
  switch (a) {
    case Attachment::kTight:
      return "tight";
    case Attachment::kLoose:
      return "loose";
    case Attachment::kNotMinimallyRigid:
      return "not-minimally-rigid";
  }
  return "?";
}

RootedExtension compose_attachment(const RootedExtension& k_over_hr,
                                   const RootedExtension& h_over_r) {
  const int r = h_over_r.root_size();
  const int h = h_over_r.ext_size();
  if (k_over_hr.root_size() != r + h) {
    throw ArgumentError("K must be rooted over R followed by H (root_size " +
                        std::to_string(r + h) + "), got " +
                        std::to_string(k_over_hr.root_size()));
  }
  std::vector<RootedExtension::Edge> roots = h_over_r.root_edges();
  std::vector<RootedExtension::Edge> exts = h_over_r.ext_edges();
  for (const auto& [root, e] : k_over_hr.root_edges()) {
    if (root < r) {
      roots.emplace_back(root, h + e);
    } else {
      exts.emplace_back(root - r, h + e);
    }
  }
  for (const auto& [a, b] : k_over_hr.ext_edges()) exts.emplace_back(h + a, h + b);
  return RootedExtension(r, h + k_over_hr.ext_size(), std::move(roots), std::move(exts));
}

Attachment classify_attachment(const RootedExtension& k_over_hr,
                               const RootedExtension& h_over_r, const Alpha& alpha) {
  const RootedExtension composite = compose_attachment(k_over_hr, h_over_r);
  if (k_over_hr.ext_size() == 0) return Attachment::kNotMinimallyRigid;
  ExtensionClass k_class = classify(k_over_hr, alpha);
  if (k_class.is_degenerate) {
    throw DegeneracyError("classify_attachment: K/HR is degenerate at alpha=" +
                          alpha.to_string());
  }
  if (!k_class.is_rigid) return Attachment::kNotMinimallyRigid;
  SubsetPredims table(k_over_hr, alpha);
  for (std::uint32_t s = 1; s < table.full(); ++s) {
    if (table.rigid(s)) return Attachment::kNotMinimallyRigid;
  }
  ExtensionClass whole = classify(composite, alpha);
  if (whole.is_degenerate) {
    throw DegeneracyError("classify_attachment: KH/R is degenerate at alpha=" +
                          alpha.to_string());
  }
  return whole.is_safe ? Attachment::kLoose : Attachment::kTight;
}

Predim concentration_margin(const RootedExtension& ext, const Alpha& alpha) {
  if (ext.ext_size() == 0) throw ArgumentError("concentration_margin: empty extension");
  ExtensionClass cls = classify(ext, alpha);
  if (cls.is_degenerate) {
    throw DegeneracyError("concentration_margin: extension is degenerate at alpha=" +
                          alpha.to_string());
  }
  if (!cls.is_safe) throw ArgumentError("concentration_margin: extension is not safe");
  SubsetPredims table(ext, alpha);
  std::int64_t lowest = table.scaled(table.full());
  for (std::uint32_t s = 1; s <= table.full(); ++s) lowest = std::min(lowest, table.scaled(s));
  return Predim{Rational(lowest, 2 * alpha.den())};
}

}  // namespace sparse_evolve
