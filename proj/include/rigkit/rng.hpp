#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rigkit/error.hpp"

namespace rigkit {

// All randomness in the library flows through std::mt19937_64, whose output
// sequence is fixed by the standard, so seeded runs reproduce bit-exactly on
// every platform. Distributions are NOT drawn via <random> adaptors (their
// output is implementation-defined); uniform doubles come from the raw
// 64-bit stream instead.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of the next engine output.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// SplitMix64 step; used to derive independent per-item seeds from one seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Walker/Vose alias table for O(1) sampling from a fixed discrete
/// distribution. Construction and sampling are deterministic.
class AliasTable {
 public:
  explicit AliasTable(const std::vector<double>& weights) {
    const std::size_t n = weights.size();
    if (n == 0) throw ValidationError("alias table: empty weight vector");
    double total = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw ValidationError("alias table: negative weight");
      total += w;
    }
    if (total <= 0.0) throw ValidationError("alias table: zero total weight");

    prob_.assign(n, 0.0);
    alias_.assign(n, 0);
    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = weights[i] * n / total;

    std::vector<std::size_t> small, large;
    for (std::size_t i = 0; i < n; ++i)
      (scaled[i] < 1.0 ? small : large).push_back(i);

    while (!small.empty() && !large.empty()) {
      std::size_t s = small.back();
      std::size_t l = large.back();
      small.pop_back();
      large.pop_back();
      prob_[s] = scaled[s];
      alias_[s] = l;
      scaled[l] = (scaled[l] + scaled[s]) - 1.0;
      (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    for (std::size_t i : large) prob_[i] = 1.0;
    for (std::size_t i : small) prob_[i] = 1.0;  // numerical leftovers
  }

  std::size_t size() const { return prob_.size(); }

  /// Draws one index; consumes exactly two engine outputs.
  std::size_t sample(Rng& rng) const {
    const std::size_t n = prob_.size();
    std::size_t cell = static_cast<std::size_t>(uniform01(rng) * n);
    if (cell >= n) cell = n - 1;
    return uniform01(rng) < prob_[cell] ? cell : alias_[cell];
  }

 private:
  std::vector<double> prob_;
  std::vector<std::size_t> alias_;
};

}  // namespace rigkit
