#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sparse_evolve/calculus.hpp"
#include "sparse_evolve/extension.hpp"
#include "sparse_evolve/graph.hpp"
#include "sparse_evolve/rational.hpp"

namespace sparse_evolve {

struct EmbeddingCount {
  std::uint64_t embeddings = 0;
  // copies = embeddings / |Aut|, reduced.
  std::uint64_t copies_num = 0;
  std::uint64_t copies_den = 1;
};

// Caps on the size of rigid candidates searched by the structural queries.
struct SearchLimits {
  int soft_limit = 6;
  bool allow_above_limit = false;
};

// Induced rooted embeddings of ext over `roots`, avoiding `forbidden`:
// injective maps of the extension vertices into the remaining vertices such
// that every represented edge is present and every other ext-ext or
// ext-root pair is a non-edge. Adjacency inside the root is ignored.
EmbeddingCount count_embeddings(const EvolvingGraph& g, const RootedExtension& ext,
                                std::span<const Vertex> roots,
                                std::span<const Vertex> forbidden = {},
                                unsigned threads = 1);

// Calls visit(images) for each embedding, images[i] being the vertex of ext
// vertex i. Stops early when visit returns false.
void for_each_embedding(const EvolvingGraph& g, const RootedExtension& ext,
                        std::span<const Vertex> roots, std::span<const Vertex> forbidden,
                        const std::function<bool(std::span<const Vertex>)>& visit);

// The rooted extension induced by `members` over `roots` in g.
RootedExtension induced_extension(const EvolvingGraph& g, std::span<const Vertex> roots,
                                  std::span<const Vertex> members);

// Vertices lying in a rigid subgraph on at most r vertices.
std::vector<Vertex> irregular_vertices(const EvolvingGraph& g, int r, const Alpha& alpha,
                                       SearchLimits limits = {});

// X together with every Z such that Z/X is rigid and |Z \ X| <= t.
std::vector<Vertex> weak_closure(const EvolvingGraph& g, std::span<const Vertex> x, int t,
                                 const Alpha& alpha, SearchLimits limits = {});

struct GenericityResult {
  bool generic = true;
  std::vector<Vertex> witness;  // violating C when !generic
};

// B/A is t-generic iff no C with 1 <= |C \ B| <= t and C/B rigid has an
// edge to B \ A (equivalently E(C/AB) != E(C/A)).
GenericityResult is_t_generic(const EvolvingGraph& g, std::span<const Vertex> a,
                              std::span<const Vertex> b, int t, const Alpha& alpha,
                              SearchLimits limits = {});

enum class Attachment { kTight, kLoose, kNotMinimallyRigid };

const char* to_string(Attachment a);

// KH/R from H/R and K/HR. K's root indices are R's (0..r-1) followed by H's
// extension vertices (r..r+h-1); K's vertices follow H's in the result.
RootedExtension compose_attachment(const RootedExtension& k_over_hr,
                                   const RootedExtension& h_over_r);

Attachment classify_attachment(const RootedExtension& k_over_hr,
                               const RootedExtension& h_over_r, const Alpha& alpha);

// Half the smallest delta(J/R) over R ⊊ J ⊆ H, for safe H/R.
Predim concentration_margin(const RootedExtension& ext, const Alpha& alpha);

}  // namespace sparse_evolve
