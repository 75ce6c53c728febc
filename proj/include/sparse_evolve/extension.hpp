#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sparse_evolve {

// An abstract rooted graph H/R. Root vertices are 0..root_size-1 and
// extension vertices 0..ext_size-1, in separate index spaces. Edges strictly
// inside the root are not represented: rooted isomorphism ignores them.
class RootedExtension {
 public:
  using Edge = std::pair<int, int>;

  RootedExtension() = default;
  // Validates ranges, rejects self-loops and duplicates, and normalises the
  // edge lists (ext edges stored with first < second, both lists sorted).
  RootedExtension(int root_size, int ext_size, std::vector<Edge> root_edges,
                  std::vector<Edge> ext_edges);

  // A plain graph on n vertices over the empty root.
  static RootedExtension graph(int n, std::vector<Edge> edges);
  static RootedExtension clique(int n);

  int root_size() const { return root_size_; }
  int ext_size() const { return ext_size_; }
  const std::vector<Edge>& root_edges() const { return root_edges_; }
  const std::vector<Edge>& ext_edges() const { return ext_edges_; }
  int num_edges() const {
    return static_cast<int>(root_edges_.size() + ext_edges_.size());
  }

  // Bitmask views. Bit j of ext_adjacency(i) is set iff ext vertices i and j
  // are adjacent; bit k of root_adjacency(i) iff root k is adjacent to ext i.
  std::uint32_t ext_adjacency(int i) const { return ext_adj_[i]; }
  std::uint64_t root_adjacency(int i) const { return root_adj_[i]; }
  // Edges from ext vertex i to the root plus to other ext vertices.
  int degree(int i) const;

  // Sub-extension S/R on the ext vertices in `members` (mask), reindexed in
  // increasing order.
  RootedExtension restrict_to(std::uint32_t members) const;
  // H/S: the vertices of `members` are appended to the root after the
  // original root vertices (increasing order); the rest stay as extension.
  RootedExtension over(std::uint32_t members) const;

  friend bool operator==(const RootedExtension&, const RootedExtension&) = default;

  static constexpr int kMaxRoot = 64;
  static constexpr int kMaxExt = 32;

 private:
  int root_size_ = 0;
  int ext_size_ = 0;
  std::vector<Edge> root_edges_;
  std::vector<Edge> ext_edges_;
  std::vector<std::uint32_t> ext_adj_;
  std::vector<std::uint64_t> root_adj_;
};

}  // namespace sparse_evolve
