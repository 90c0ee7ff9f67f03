#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "axiograph/errors.hpp"

namespace axiograph {

// A partition of {0..n-1} in canonical form: every block sorted ascending,
// blocks ordered by their smallest element. Canonical form makes equality,
// hashing-by-comparison and report output deterministic.
class Clustering {
 public:
  Clustering() = default;

  static Clustering from_blocks(int n, std::vector<std::vector<int>> blocks) {
    Clustering c;
    c.n_ = n;
    c.blocks_ = std::move(blocks);
    c.canonicalize_and_check();
    return c;
  }

  // membership[i] = any block key for node i; keys need not be dense
  static Clustering from_membership(const std::vector<int>& membership) {
    int n = int(membership.size());
    std::vector<int> keys(membership);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<std::vector<int>> blocks(keys.size());
    for (int i = 0; i < n; ++i) {
      int b = int(std::lower_bound(keys.begin(), keys.end(), membership[i]) -
                  keys.begin());
      blocks[std::size_t(b)].push_back(i);
    }
    Clustering c;
    c.n_ = n;
    c.blocks_ = std::move(blocks);
    c.canonicalize_and_check();
    return c;
  }

  static Clustering singletons(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) blocks.push_back({i});
    return from_blocks(n, std::move(blocks));
  }

  static Clustering whole(int n) {
    std::vector<int> all(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) all[std::size_t(i)] = i;
    return from_blocks(n, {all});
  }

  int node_count() const { return n_; }
  int block_count() const { return int(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int b) const { return blocks_[std::size_t(b)]; }

  std::vector<int> membership() const {
    std::vector<int> m(std::size_t(n_), -1);
    for (int b = 0; b < block_count(); ++b)
      for (int i : blocks_[std::size_t(b)]) m[std::size_t(i)] = b;
    return m;
  }

  bool operator==(const Clustering& o) const {
    return n_ == o.n_ && blocks_ == o.blocks_;
  }
  bool operator!=(const Clustering& o) const { return !(*this == o); }

  // strict weak order for deterministic tie lists
  bool operator<(const Clustering& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return blocks_ < o.blocks_;
  }

 private:
  void canonicalize_and_check() {
    for (auto& b : blocks_) {
      if (b.empty()) throw InputError("clustering: empty block");
      std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                return a.front() < b.front();
              });
    std::vector<char> seen(std::size_t(n_), 0);
    int covered = 0;
    for (const auto& b : blocks_)
      for (int i : b) {
        if (i < 0 || i >= n_) throw InputError("clustering: node id out of range");
        if (seen[std::size_t(i)]) throw InputError("clustering: node in two blocks");
        seen[std::size_t(i)] = 1;
        ++covered;
      }
    if (covered != n_) throw InputError("clustering: not all nodes covered");
  }

  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// true iff every block of c lies inside some block of d
inline bool is_refinement(const Clustering& c, const Clustering& d) {
  if (c.node_count() != d.node_count())
    throw InputError("is_refinement: clusterings over different node sets");
  std::vector<int> dm = d.membership();
  for (const auto& b : c.blocks()) {
    int home = dm[std::size_t(b.front())];
    for (int i : b)
      if (dm[std::size_t(i)] != home) return false;
  }
  return true;
}

// relabel node ids through a bijection f: id -> new id
inline Clustering permute_clustering(const Clustering& c,
                                     const std::vector<int>& f) {
  if (int(f.size()) != c.node_count())
    throw InputError("permute_clustering: map size mismatch");
  std::vector<char> hit(f.size(), 0);
  for (int y : f) {
    if (y < 0 || y >= int(f.size()) || hit[std::size_t(y)])
      throw InputError("permute_clustering: not a bijection");
    hit[std::size_t(y)] = 1;
  }
  std::vector<std::vector<int>> blocks;
  blocks.reserve(std::size_t(c.block_count()));
  for (const auto& b : c.blocks()) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int i : b) nb.push_back(f[std::size_t(i)]);
    blocks.push_back(std::move(nb));
  }
  return Clustering::from_blocks(c.node_count(), std::move(blocks));
}

}  // namespace axiograph
