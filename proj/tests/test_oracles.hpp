#pragma once

// Brute-force reference implementations used only by the tests. They work on
// plain std::set / bitmask representations and share no code with the library.

#include <cstdint>
#include <set>
#include <vector>

namespace rigidchain::oracle {

/// Whether some part x of `parts` is the sum of a set of values below x that
/// avoids `parts` (any size), by subset-sum reachability.
inline bool refinable_any_size(const std::set<std::uint64_t>& parts) {
  for (auto x : parts) {
    std::vector<bool> reach(x + 1, false);
    reach[0] = true;
    for (std::uint64_t v = 1; v < x; ++v) {
      if (parts.count(v)) continue;
      for (std::uint64_t s = x; s >= v; --s) reach[s] = reach[s] || reach[s - v];
    }
    if (reach[x]) return true;
  }
  return false;
}

inline std::set<std::uint64_t> mask_to_set(std::uint64_t mask) {
  std::set<std::uint64_t> out;
  for (std::uint64_t v = 0; v < 64; ++v) {
    if ((mask >> v) & 1U) out.insert(v);
  }
  return out;
}

/// Distinct-part partitions of every sum <= max_sum, by scanning every subset
/// of {1..max_sum}. Returns one vector of (ascending) part lists per sum.
inline std::vector<std::vector<std::vector<std::uint64_t>>> partitions_by_subsets(unsigned max_sum) {
  std::vector<std::vector<std::vector<std::uint64_t>>> out(max_sum + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << max_sum); ++mask) {
    std::uint64_t sum = 0;
    std::vector<std::uint64_t> parts;
    for (unsigned v = 1; v <= max_sum; ++v) {
      if ((mask >> (v - 1)) & 1U) {
        sum += v;
        parts.push_back(v);
      }
    }
    if (sum <= max_sum) out[sum].push_back(parts);
  }
  return out;
}

/// The commutator rule for punctured pairs, on sets: returns {top, holes} or
/// top = 0 for the identity.
struct Punctured {
  int top = 0;
  std::set<int> holes;
  friend bool operator==(const Punctured&, const Punctured&) = default;
};

inline Punctured bracket(const Punctured& x, const Punctured& y) {
  if (x.top == 0 || y.top == 0) return {};
  const int lo = std::min(x.top, y.top);
  const int hi = std::max(x.top, y.top);
  std::set<int> joined = x.holes;
  joined.insert(y.holes.begin(), y.holes.end());
  if (!joined.count(lo)) return {};
  joined.erase(lo);
  return {hi, joined};
}

}  // namespace rigidchain::oracle
