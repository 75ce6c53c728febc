#include "sparse_evolve/extension.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sparse_evolve/errors.hpp"

namespace sparse_evolve {

RootedExtension::RootedExtension(int root_size, int ext_size,
                                 std::vector<Edge> root_edges,
                                 std::vector<Edge> ext_edges)
    : root_size_(root_size),
      ext_size_(ext_size),
      root_edges_(std::move(root_edges)),
      ext_edges_(std::move(ext_edges)) {
  if (root_size_ < 0 || root_size_ > kMaxRoot) {
    throw ArgumentError("root_size must be in [0," + std::to_string(kMaxRoot) + "]");
  }
  if (ext_size_ < 0 || ext_size_ > kMaxExt) {
    throw ArgumentError("ext_size must be in [0," + std::to_string(kMaxExt) + "]");
  }
  ext_adj_.assign(ext_size_, 0);
  root_adj_.assign(ext_size_, 0);
  for (const auto& [r, e] : root_edges_) {
    if (r < 0 || r >= root_size_ || e < 0 || e >= ext_size_) {
      throw ArgumentError("root edge [" + std::to_string(r) + "," +
                          std::to_string(e) + "] out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << r;
    if (root_adj_[e] & bit) {
      throw ArgumentError("duplicate root edge [" + std::to_string(r) + "," +
                          std::to_string(e) + "]");
    }
    root_adj_[e] |= bit;
  }
  for (auto& [a, b] : ext_edges_) {
    if (a < 0 || a >= ext_size_ || b < 0 || b >= ext_size_) {
      throw ArgumentError("ext edge [" + std::to_string(a) + "," + std::to_string(b) +
                          "] out of range");
    }
    if (a == b) throw ArgumentError("self-loop on ext vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (ext_adj_[a] & (1u << b)) {
      throw ArgumentError("duplicate ext edge [" + std::to_string(a) + "," +
                          std::to_string(b) + "]");
    }
    ext_adj_[a] |= 1u << b;
    ext_adj_[b] |= 1u << a;
  }
  std::sort(root_edges_.begin(), root_edges_.end());
  std::sort(ext_edges_.begin(), ext_edges_.end());
}

RootedExtension RootedExtension::graph(int n, std::vector<Edge> edges) {
  return RootedExtension(0, n, {}, std::move(edges));
}

RootedExtension RootedExtension::clique(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return graph(n, std::move(edges));
}

int RootedExtension::degree(int i) const {
  return std::popcount(ext_adj_[i]) + std::popcount(root_adj_[i]);
}

RootedExtension RootedExtension::restrict_to(std::uint32_t members) const {
  std::vector<int> index(ext_size_, -1);
  int next = 0;
  for (int i = 0; i < ext_size_; ++i)
    if (members & (1u << i)) index[i] = next++;
  std::vector<Edge> roots, exts;
  for (const auto& [r, e] : root_edges_)
    if (index[e] >= 0) roots.emplace_back(r, index[e]);
  for (const auto& [a, b] : ext_edges_)
    if (index[a] >= 0 && index[b] >= 0) exts.emplace_back(index[a], index[b]);
  return RootedExtension(root_size_, next, std::move(roots), std::move(exts));
}

RootedExtension RootedExtension::over(std::uint32_t members) const {
  // New root: old roots, then members. New ext: the remaining vertices.
  std::vector<int> as_root(ext_size_, -1), as_ext(ext_size_, -1);
  int next_root = root_size_, next_ext = 0;
  for (int i = 0; i < ext_size_; ++i) {
    if (members & (1u << i)) {
      as_root[i] = next_root++;
    } else {
      as_ext[i] = next_ext++;
    }
  }
  std::vector<Edge> roots, exts;
  for (const auto& [r, e] : root_edges_)
    if (as_ext[e] >= 0) roots.emplace_back(r, as_ext[e]);
  for (const auto& [a, b] : ext_edges_) {
    if (as_ext[a] >= 0 && as_ext[b] >= 0) {
      exts.emplace_back(as_ext[a], as_ext[b]);
    } else if (as_ext[a] >= 0) {
      roots.emplace_back(as_root[b], as_ext[a]);
    } else if (as_ext[b] >= 0) {
      roots.emplace_back(as_root[a], as_ext[b]);
    }
  }
  return RootedExtension(next_root, next_ext, std::move(roots), std::move(exts));
}

}  // namespace sparse_evolve
