#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace axiograph {

// Shared tolerances. Quality values are O(1) sums of O(n) terms, so the
// comparisons below use absolute tolerances.
namespace tol {
inline constexpr double tie = 1e-9;          // optimum ties, order-flip checks
inline constexpr double value_eq = 1e-12;    // value identities (permutation, sums)
inline constexpr double greedy_gain = 1e-12; // minimum accepted local-move gain
}  // namespace tol

// Kahan compensated accumulator. Counterexample margins can be a couple of
// ulps wide (23/50 vs 24/50 after division chains), so per-cluster sums and
// the final sum over clusters both compensate.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

// All numeric output (CLI, CSV, reports) goes through this: 12 significant
// digits, enough to separate every margin in the registry while staying
// byte-stable run to run.
inline std::string format_value(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// Shortest decimal string that parses back to exactly the same double; used
// where round-tripping matters (serialized graphs, witness dumps).
inline std::string format_exact(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

}  // namespace axiograph
