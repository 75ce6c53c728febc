#include "sparse_evolve/calculus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sparse_evolve/errors.hpp"

namespace sparse_evolve {

namespace {

void check_limit(const RootedExtension& ext) {
  if (ext.ext_size() > kSubsetSoftLimit) {
    throw ArgumentError("ext_size " + std::to_string(ext.ext_size()) +
                        " exceeds subset enumeration limit " +
                        std::to_string(kSubsetSoftLimit));
  }
}

std::vector<int> bits_of(std::uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Same-size masks in lexicographic order of their sorted index lists.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  std::uint32_t diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

}  // namespace

SubsetPredims::SubsetPredims(const RootedExtension& ext, const Alpha& alpha) {
  check_limit(ext);
  std::vector<std::uint32_t> adj(ext.ext_size());
  std::vector<int> root_degree(ext.ext_size());
  for (int i = 0; i < ext.ext_size(); ++i) {
    adj[i] = ext.ext_adjacency(i);
    root_degree[i] = std::popcount(ext.root_adjacency(i));
  }
  fill(adj, root_degree, alpha);
}

SubsetPredims::SubsetPredims(std::span<const std::uint32_t> ext_adjacency,
                             std::span<const int> root_degree, const Alpha& alpha) {
  if (ext_adjacency.size() > static_cast<std::size_t>(kSubsetSoftLimit)) {
    throw ArgumentError("subset enumeration limit exceeded");
  }
  fill(ext_adjacency, root_degree, alpha);
}

void SubsetPredims::fill(std::span<const std::uint32_t> ext_adjacency,
                         std::span<const int> root_degree, const Alpha& alpha) {
  n_ = static_cast<int>(ext_adjacency.size());
  full_ = (1u << n_) - 1;
  den_ = alpha.den();
  std::size_t count = std::size_t{1} << n_;
  edges_.assign(count, 0);
  scaled_.assign(count, 0);
  for (std::uint32_t s = 1; s < count; ++s) {
    int v = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    edges_[s] = edges_[rest] + std::popcount(ext_adjacency[v] & rest) + root_degree[v];
    scaled_[s] = std::int64_t{std::popcount(s)} * alpha.den() -
                 std::int64_t{edges_[s]} * alpha.num();
  }
}

std::int64_t SubsetPredims::scaled_d() const {
  std::int64_t lowest = 0;
  for (std::uint32_t s = 1; s < full_; ++s) lowest = std::min(lowest, scaled_[s]);
  return scaled_[full_] - lowest;
}

bool SubsetPredims::rigid(std::uint32_t s) const {
  if (s == 0) return true;
  // Proper submasks j of s, including 0.
  for (std::uint32_t j = (s - 1) & s;; j = (j - 1) & s) {
    if (scaled_[s] - scaled_[j] >= 0) return false;
    if (j == 0) break;
  }
  return true;
}

bool SubsetPredims::safe_above(std::uint32_t s) const {
  std::uint32_t free = full_ & ~s;
  for (std::uint32_t x = free;; x = (x - 1) & free) {
    if (scaled_[s | x] - scaled_[s] < 0) return false;
    if (x == 0) break;
  }
  return true;
}

Predim delta(const RootedExtension& ext, const Alpha& alpha) {
  return Predim::of(ext.ext_size(), ext.num_edges(), alpha);
}

Predim d_value(const RootedExtension& ext, const Alpha& alpha) {
  if (ext.ext_size() == 0) {
    throw ArgumentError("d_value needs at least one extension vertex");
  }
  SubsetPredims table(ext, alpha);
  return Predim{Rational(table.scaled_d(), alpha.den())};
}

ExtensionClass classify(const RootedExtension& ext, const Alpha& alpha) {
  SubsetPredims table(ext, alpha);
  const std::uint32_t full = table.full();
  const std::int64_t top = table.scaled(full);
  ExtensionClass out;
  out.is_sparse = top > 0;
  out.is_dense = top < 0;
  out.is_safe = true;
  out.is_rigid = true;
  for (std::uint32_t s = 0; s <= full; ++s) {
    std::int64_t below = table.scaled(s);
    if (below < 0) out.is_safe = false;
    if (s != 0 && below == 0) out.is_degenerate = true;
    if (s != full) {
      std::int64_t above = top - below;
      if (above >= 0) out.is_rigid = false;
      if (above == 0) out.is_degenerate = true;
    }
    if (s == full) break;
  }
  return out;
}

SubExtension find_rigid_subextension(const RootedExtension& ext, const Alpha& alpha) {
  ExtensionClass cls = classify(ext, alpha);
  if (cls.is_degenerate) {
    throw DegeneracyError("find_rigid_subextension: extension is degenerate at alpha=" +
                          alpha.to_string());
  }
  if (cls.is_safe) {
    throw ArgumentError("find_rigid_subextension: extension is safe, no rigid witness");
  }
  SubsetPredims table(ext, alpha);
  const int n = ext.ext_size();
  for (int k = 1; k <= n; ++k) {
    // Lexicographic combinations of size k via next_permutation on a
    // selector (true entries first).
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::uint32_t s = 0;
      for (int i = 0; i < n; ++i)
        if (pick[i]) s |= 1u << i;
      if (table.scaled(s) < 0 && table.rigid(s)) {
        return SubExtension{ext.restrict_to(s), s, bits_of(s)};
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  // Unreachable for non-safe input: a minimum-size minimiser of delta(I/R)
  // is always rigid.
  throw std::logic_error("find_rigid_subextension: no witness found");
}

Decomposition rigid_safe_decomposition(const RootedExtension& ext, const Alpha& alpha) {
  ExtensionClass cls = classify(ext, alpha);
  if (cls.is_degenerate) {
    throw DegeneracyError("rigid_safe_decomposition: extension is degenerate at alpha=" +
                          alpha.to_string());
  }
  if (cls.is_safe || cls.is_rigid) {
    throw ArgumentError(std::string("rigid_safe_decomposition: extension is ") +
                        (cls.is_safe ? "safe" : "rigid"));
  }
  SubsetPredims table(ext, alpha);
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t s = 1; s < table.full(); ++s) candidates.push_back(s);
  // Decreasing delta(H/S) is increasing delta(S/R).
  std::sort(candidates.begin(), candidates.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (table.scaled(a) != table.scaled(b)) return table.scaled(a) < table.scaled(b);
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return lex_less(a, b);
  });
  for (std::uint32_t s : candidates) {
    if (!table.rigid(s) || !table.safe_above(s)) continue;
    Decomposition out{SubExtension{ext.restrict_to(s), s, bits_of(s)}, ext.over(s)};
    ExtensionClass lower = classify(out.rigid.extension, alpha);
    ExtensionClass upper = classify(out.safe_rest, alpha);
    if (!lower.is_rigid || !upper.is_safe) {
      throw std::logic_error("rigid_safe_decomposition: postcondition failed");
    }
    return out;
  }
  throw std::logic_error("rigid_safe_decomposition: no decomposition found");
}

namespace {

struct AutomorphismSearch {
  const RootedExtension& ext;
  std::vector<int> image;
  std::uint32_t used = 0;
  std::uint64_t count = 0;

  void extend(int i) {
    const int n = ext.ext_size();
    if (i == n) {
      ++count;
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (ext.root_adjacency(i) != ext.root_adjacency(c)) continue;
      if (std::popcount(ext.ext_adjacency(i)) != std::popcount(ext.ext_adjacency(c))) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        bool want = (ext.ext_adjacency(i) >> j) & 1u;
        bool have = (ext.ext_adjacency(c) >> image[j]) & 1u;
        ok = want == have;
      }
      if (!ok) continue;
      image[i] = c;
      used |= 1u << c;
      extend(i + 1);
      used &= ~(1u << c);
    }
  }
};

}  // namespace

std::uint64_t rooted_automorphism_count(const RootedExtension& ext) {
  AutomorphismSearch search{ext, std::vector<int>(ext.ext_size(), -1)};
  search.extend(0);
  return search.count;
}

}  // namespace sparse_evolve
