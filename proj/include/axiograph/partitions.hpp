#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "axiograph/errors.hpp"

namespace axiograph {

// Exhaustive search is the ground truth for every argmax claim in the
// library, so partitions are enumerated exactly once, in a deterministic
// order: lexicographic over restricted growth strings. An RGS a[0..n-1] has
// a[0] = 0 and a[i] <= 1 + max(a[0..i-1]); it doubles as the membership
// vector of the partition it encodes.

inline constexpr int kEnumerationCap = 12;  // Bell(12) = 4,213,597

inline std::uint64_t bell_number(int n) {
  // Bell triangle
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(std::size_t(i) + 1);
    next[0] = row.back();
    for (std::size_t j = 1; j <= std::size_t(i); ++j)
      next[j] = next[j - 1] + row[j - 1];
    row = std::move(next);
  }
  return row[0];
}

class PartitionEnumerator {
 public:
  // all partitions of {0..n-1}
  explicit PartitionEnumerator(int n, int cap = kEnumerationCap)
      : PartitionEnumerator(n, {}, cap) {}

  // only partitions whose RGS starts with the given (valid) prefix
  PartitionEnumerator(int n, const std::vector<int>& prefix,
                      int cap = kEnumerationCap)
      : n_(n), lo_(int(prefix.size())) {
    if (n < 0) throw InputError("enumerate_partitions: negative n");
    if (n > cap)
      throw InfeasibleError("enumerate_partitions: n = " + std::to_string(n) +
                            " exceeds the enumeration cap " +
                            std::to_string(cap));
    if (lo_ > n_) throw InputError("enumerate_partitions: prefix too long");
    a_.assign(std::size_t(n), 0);
    max_.assign(std::size_t(n), 0);
    for (int i = 0; i < lo_; ++i) {
      int prev = i ? max_[std::size_t(i) - 1] : 0;
      if (prefix[std::size_t(i)] < 0 || prefix[std::size_t(i)] > (i ? prev + 1 : 0))
        throw InputError("enumerate_partitions: invalid RGS prefix");
      a_[std::size_t(i)] = prefix[std::size_t(i)];
      max_[std::size_t(i)] = std::max(prev, a_[std::size_t(i)]);
    }
    for (int i = lo_; i < n_; ++i)
      max_[std::size_t(i)] = i ? max_[std::size_t(i) - 1] : 0;
  }

  // current partition as a membership vector with blocks 0..block_count()-1
  const std::vector<int>& rgs() const { return a_; }
  int block_count() const { return n_ == 0 ? 0 : max_[std::size_t(n_) - 1] + 1; }

  // step to the lexicographic successor; false once the current partition is
  // the last one (a one-partition stream for n = 0)
  bool advance() {
    for (int i = n_ - 1; i >= std::max(lo_, 1); --i) {
      if (a_[std::size_t(i)] <= max_[std::size_t(i) - 1]) {
        a_[std::size_t(i)] += 1;
        max_[std::size_t(i)] =
            std::max(max_[std::size_t(i) - 1], a_[std::size_t(i)]);
        for (int j = i + 1; j < n_; ++j) {
          a_[std::size_t(j)] = 0;
          max_[std::size_t(j)] = max_[std::size_t(i)];
        }
        return true;
      }
    }
    return false;
  }

 private:
  int n_;
  int lo_;
  std::vector<int> a_;
  std::vector<int> max_;
};

template <typename Fn>
void for_each_partition(int n, Fn&& fn, int cap = kEnumerationCap) {
  PartitionEnumerator e(n, cap);
  do {
    fn(e.rgs(), e.block_count());
  } while (e.advance());
}

// all valid RGS prefixes of the given length, in lexicographic order; the
// shards they induce cover the partition stream exactly once
inline std::vector<std::vector<int>> rgs_prefixes(int n, int length) {
  length = std::min(length, n);
  std::vector<std::vector<int>> out;
  if (length <= 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int maxv) -> void {
    if (int(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    int hi = cur.empty() ? 0 : maxv + 1;
    for (int v = 0; v <= hi; ++v) {
      cur.push_back(v);
      self(self, std::max(maxv, v));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace axiograph
