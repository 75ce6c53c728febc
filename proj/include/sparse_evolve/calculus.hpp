#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sparse_evolve/extension.hpp"
#include "sparse_evolve/rational.hpp"

namespace sparse_evolve {

// Operations that enumerate intermediate subsets refuse larger extensions.
inline constexpr int kSubsetSoftLimit = 16;

// Predimensions of every intermediate R ⊆ I ⊆ H, keyed by the mask S of
// extension vertices in I. Stored scaled by den(alpha) as exact integers.
class SubsetPredims {
 public:
  SubsetPredims(const RootedExtension& ext, const Alpha& alpha);
  // From raw adjacency: bit j of ext_adjacency[i] marks an edge between
  // extension vertices i and j; root_degree[i] counts edges from i to the root.
  SubsetPredims(std::span<const std::uint32_t> ext_adjacency,
                std::span<const int> root_degree, const Alpha& alpha);

  int size() const { return n_; }
  std::uint32_t full() const { return full_; }
  // E(I/R) where I = R + S.
  int edges(std::uint32_t s) const { return edges_[s]; }
  // den(alpha) * delta(I/R).
  std::int64_t scaled(std::uint32_t s) const { return scaled_[s]; }
  // delta(I/R).
  Predim below(std::uint32_t s) const { return Predim{Rational(scaled_[s], den_)}; }
  // delta(H/I).
  Predim above(std::uint32_t s) const {
    return Predim{Rational(scaled_[full_] - scaled_[s], den_)};
  }
  // delta(I'/I) for s ⊆ t.
  Predim between(std::uint32_t s, std::uint32_t t) const {
    return Predim{Rational(scaled_[t] - scaled_[s], den_)};
  }
  // d(I/R) < 0 where I = R + s, s non-empty: every proper J ⊂ s has
  // delta(I/J) < 0.
  bool rigid(std::uint32_t s) const;
  // delta(J/I) >= 0 for all s ⊆ J ⊆ full.
  bool safe_above(std::uint32_t s) const;
  // den(alpha) * d(H/R), i.e. the largest delta(H/I) over I != H.
  std::int64_t scaled_d() const;

 private:
  void fill(std::span<const std::uint32_t> ext_adjacency, std::span<const int> root_degree,
            const Alpha& alpha);

  int n_;
  std::uint32_t full_;
  std::int64_t den_;
  std::vector<int> edges_;
  std::vector<std::int64_t> scaled_;
};

struct ExtensionClass {
  bool is_sparse = false;
  bool is_dense = false;
  bool is_safe = false;
  bool is_rigid = false;
  // Some delta(I/R) with I != R, or some delta(H/I) with I != H, is exactly 0.
  bool is_degenerate = false;

  friend bool operator==(const ExtensionClass&, const ExtensionClass&) = default;
};

// A sub-extension S/R together with which original ext vertices form S.
struct SubExtension {
  RootedExtension extension;
  std::uint32_t members = 0;
  std::vector<int> vertices;
};

struct Decomposition {
  SubExtension rigid;        // S/R
  RootedExtension safe_rest; // H/S, root = R followed by S
};

Predim delta(const RootedExtension& ext, const Alpha& alpha);

// max delta(H/I) over R ⊆ I ⊊ H. Requires ext_size >= 1.
Predim d_value(const RootedExtension& ext, const Alpha& alpha);

// safe: delta(I/R) >= 0 for every intermediate. rigid: d < 0 (vacuously true
// for the empty extension).
ExtensionClass classify(const RootedExtension& ext, const Alpha& alpha);

// Smallest rigid S/R inside a non-safe H/R; ties broken lexicographically on
// the sorted vertex list.
SubExtension find_rigid_subextension(const RootedExtension& ext, const Alpha& alpha);

// S with S/R rigid and H/S safe, for H/R neither safe nor rigid. Candidates
// are tried by decreasing delta(H/S), then size, then lexicographic order.
Decomposition rigid_safe_decomposition(const RootedExtension& ext, const Alpha& alpha);

// Permutations of the extension vertices fixing the root pointwise and
// preserving all represented edges.
std::uint64_t rooted_automorphism_count(const RootedExtension& ext);

}  // namespace sparse_evolve
