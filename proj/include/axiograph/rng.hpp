#pragma once

#include <cstdint>
#include <vector>

namespace axiograph {

// SplitMix64 generator. Hand-rolled instead of <random> so that streams are
// identical across standard libraries, and counter-keyed so that trial i of a
// run depends only on (seed, i), never on how many draws earlier trials made.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  static Rng keyed(std::uint64_t seed, std::uint64_t counter) {
    Rng r(seed);
    r.state_ = mix(r.state_ ^ mix(counter + 0x632be59bd9b4e019ull));
    return r;
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // uniform in [0, 1)
  double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in (0, 1] — edge weights must stay positive
  double next_pos_unit() { return 1.0 - next_unit(); }

  // uniform integer in [lo, hi], inclusive
  int next_int(int lo, int hi) {
    return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
  }

  double uniform(double a, double b) { return a + (b - a) * next_unit(); }

  bool chance(double p) { return next_unit() < p; }

  // Fisher-Yates; used for the greedy move scan order
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = int(v.size()) - 1; i > 0; --i) {
      int j = next_int(0, i);
      std::swap(v[i], v[std::size_t(j)]);
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t state_;
};

}  // namespace axiograph
