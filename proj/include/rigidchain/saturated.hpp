#pragma once

// Saturated subgroups of the Sylow 2-subgroup Sigma_n, represented by the set
// of rigid commutators they contain, and the normalizer chain starting at the
// elementary abelian regular subgroup T = <t_1, ..., t_n>.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidchain/errors.hpp"
#include "rigidchain/partitions.hpp"
#include "rigidchain/rigid.hpp"

namespace rigidchain {

/// Largest rank accepted by RigidSet (universe of 2^20 - 1 commutators).
inline constexpr int kMaxRank = 20;

/// A commutator-closed set of non-identity rigid commutators with top <= n.
class RigidSet {
 public:
  using Code = RigidCommutator::Code;

  /// The empty set at rank n.
  explicit RigidSet(int n) : n_(check_rank(n)), bitmap_(words_for(n), 0) {}

  /// Smallest commutator-closed set containing `generators`.
  static RigidSet closure(int n, std::span<const RigidCommutator> generators) {
    RigidSet set(n);
    for (auto g : generators) {
      if (g.is_identity()) throw std::invalid_argument("closure generators must be non-identity");
      if (g.top() > n) {
        throw std::invalid_argument("generator " + format(g) + " has top above rank " + std::to_string(n));
      }
      set.insert(g.code());
    }
    // Every pair is bracketed once: element k against all elements before it.
    for (std::size_t k = 0; k < set.codes_.size(); ++k) {
      const Code x = set.codes_[k];
      for (std::size_t m = 0; m < k; ++m) {
        const Code c = commutator_code(x, set.codes_[m]);
        if (c != 0) set.insert(c);
      }
    }
    std::sort(set.codes_.begin(), set.codes_.end());
    return set;
  }

  /// All of R* at rank n, i.e. the rigid set of Sigma_n itself.
  static RigidSet full(int n) {
    RigidSet set(n);
    for (Code c = 1; c < universe_end(n); ++c) set.insert(c);
    return set;
  }

  int rank() const { return n_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }

  bool contains_code(Code c) const {
    return c != 0 && c < universe_end(n_) && ((bitmap_[c >> 6] >> (c & 63)) & 1U);
  }
  bool contains(RigidCommutator r) const { return contains_code(r.code()); }

  /// Member codes in increasing order.
  std::span<const Code> codes() const { return codes_; }

  /// Members ordered by top, then by hole list.
  std::vector<RigidCommutator> members() const {
    std::vector<RigidCommutator> out;
    out.reserve(codes_.size());
    for (Code c : codes_) out.push_back(RigidCommutator::from_code(c));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_closed() const {
    for (std::size_t k = 0; k < codes_.size(); ++k) {
      for (std::size_t m = 0; m < k; ++m) {
        const Code c = commutator_code(codes_[k], codes_[m]);
        if (c != 0 && !contains_code(c)) return false;
      }
    }
    return true;
  }

  bool includes(const RigidSet& other) const {
    return std::all_of(other.codes_.begin(), other.codes_.end(),
                       [this](Code c) { return contains_code(c); });
  }

  friend bool operator==(const RigidSet& a, const RigidSet& b) {
    return a.n_ == b.n_ && a.codes_ == b.codes_;
  }

  static constexpr Code universe_end(int n) { return Code{1} << n; }

 private:
  friend RigidSet normalizer_step(const RigidSet& h);

  static int check_rank(int n) {
    if (n < 1 || n > kMaxRank) {
      throw std::invalid_argument("rank must lie in 1.." + std::to_string(kMaxRank) + ", got " +
                                  std::to_string(n));
    }
    return n;
  }
  static std::size_t words_for(int n) { return (std::size_t{1} << n) / 64 + 1; }

  void insert(Code c) {
    auto& word = bitmap_[c >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    if (word & bit) return;
    word |= bit;
    codes_.push_back(c);
  }

  int n_;
  std::vector<std::uint64_t> bitmap_;
  std::vector<Code> codes_;
};

/// Rigid set of T = <t_1, ..., t_n>.
inline RigidSet translation_set(int n) {
  std::vector<RigidCommutator> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(make_t(i));
  return RigidSet::closure(n, gens);
}

/// {t_1..t_n} together with every u_ij, 1 <= j < i <= n.
inline std::vector<RigidCommutator> u_set(int n) {
  if (n < 1) throw std::invalid_argument("u_set requires n >= 1");
  std::vector<RigidCommutator> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(make_t(i));
    for (int j = 1; j < i; ++j) out.push_back(make_u(i, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All <i>_I with I in {1..i-1}, |I| >= 2 and sum I = j.
inline std::vector<RigidCommutator> w_set(int n, int i, std::uint64_t j) {
  if (i < 1 || i > n) throw std::invalid_argument("w_set requires 1 <= i <= n");
  std::vector<RigidCommutator> out;
  for_each_distinct(
      j, 2,
      [&](std::span<const Partition::Part> parts) {
        HoleMask mask = 0;
        for (auto x : parts) mask |= HoleMask{1} << x;
        out.push_back(RigidCommutator::punctured(i, mask));
      },
      static_cast<Partition::Part>(i - 1));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline void check_generator_step(int n, int i) {
  if (n < 2 || n > kMaxRank) throw std::invalid_argument("rank must lie in 2.." + std::to_string(kMaxRank));
  if (i < 0 || i > n - 2) {
    throw std::invalid_argument("explicit generators exist only for 0 <= i <= n-2, got i=" +
                                std::to_string(i));
  }
}

}  // namespace detail

/// Generators of N^i built by the recursion
/// N^0 = U_n,  N^i = N^{i-1} u W_{n+1-i, 3} u ... u W_{n, i+2}.
inline std::vector<RigidCommutator> explicit_generators_recursive(int n, int i) {
  detail::check_generator_step(n, i);
  std::vector<RigidCommutator> out = u_set(n);
  for (int step = 1; step <= i; ++step) {
    for (int j = 1; j <= step; ++j) {
      auto w = w_set(n, n + j - step, static_cast<std::uint64_t>(j + 2));
      out.insert(out.end(), w.begin(), w.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Generators of N^i in closed form: U_n together with every <a>_X such that
/// |X| >= 2 and sum X <= i + 2 - (n - a).
inline std::vector<RigidCommutator> explicit_generators_direct(int n, int i) {
  detail::check_generator_step(n, i);
  std::vector<RigidCommutator> out = u_set(n);
  for (RigidCommutator::Code c = 1; c < RigidSet::universe_end(n); ++c) {
    const auto r = RigidCommutator::from_code(c);
    if (r.hole_count() < 2) continue;
    if (r.hole_sum() + static_cast<std::uint64_t>(n - r.top()) <= static_cast<std::uint64_t>(i + 2)) {
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Both constructions, asserted equal.
inline std::vector<RigidCommutator> explicit_generators(int n, int i) {
  auto recursive = explicit_generators_recursive(n, i);
  if (recursive != explicit_generators_direct(n, i)) {
    throw InvariantViolation("recursive and closed-form generators of N^" + std::to_string(i) +
                             " disagree at n=" + std::to_string(n));
  }
  return recursive;
}

/// Whether r normalizes the saturated subgroup represented by h: every
/// bracket [s, r] with s in h lands back in h or is trivial.
inline bool normalizes(RigidCommutator r, const RigidSet& h) {
  if (r.is_identity()) throw std::invalid_argument("normalizes: r must be non-identity");
  if (r.top() > h.rank()) throw std::invalid_argument("normalizes: top of r exceeds rank");
  for (auto s : h.codes()) {
    const auto c = commutator_code(s, r.code());
    if (c != 0 && !h.contains_code(c)) return false;
  }
  return true;
}

/// N_{Sigma_n}(H) for a saturated H containing T.
inline RigidSet normalizer_step(const RigidSet& h) {
  const int n = h.rank();
  for (int i = 1; i <= n; ++i) {
    if (!h.contains(make_t(i))) {
      throw std::invalid_argument("normalizer_step requires every t_i in the set; t_" + std::to_string(i) +
                                  " is missing");
    }
  }
  RigidSet out(n);
  for (RigidSet::Code c = 1; c < RigidSet::universe_end(n); ++c) {
    if (h.contains_code(c) || normalizes(RigidCommutator::from_code(c), h)) out.insert(c);
  }
  if (!out.includes(h)) throw InvariantViolation("normalizer does not contain the normalized set");
  if (!out.is_closed()) {
    throw InvariantViolation("normalizer of a saturated subgroup is not commutator-closed at n=" +
                             std::to_string(n));
  }
  return out;
}

struct ChainReport {
  int n = 0;
  /// |N^i| in rigid commutators, for i = 0, 1, ...
  std::vector<std::size_t> set_sizes;
  /// log2 |N^i : N^{i-1}|; element k is step i = k + 1.
  std::vector<std::size_t> log2_indices;
  /// First step i with N^i = N^{i-1}, if reached.
  std::optional<int> stabilized_at;

  /// The indices for i = 1..width, zero-padded past stabilization.
  std::vector<std::size_t> row(std::size_t width = 14) const {
    std::vector<std::size_t> out(width, 0);
    std::copy_n(log2_indices.begin(), std::min(width, log2_indices.size()), out.begin());
    return out;
  }
};

/// The terms N^0, N^1, ..., N^k of the normalizer chain, where k = max_steps
/// or the stabilization step, whichever comes first.
inline std::vector<RigidSet> chain_terms(int n, int max_steps) {
  if (n < 2 || n > kMaxRank) throw std::invalid_argument("chain requires 2 <= n <= " + std::to_string(kMaxRank));
  if (max_steps < 1) throw std::invalid_argument("chain requires max_steps >= 1");
  std::vector<RigidSet> terms;
  terms.push_back(normalizer_step(translation_set(n)));
  for (int i = 1; i <= max_steps; ++i) {
    terms.push_back(normalizer_step(terms.back()));
    if (terms.back() == terms[terms.size() - 2]) break;
  }
  return terms;
}

inline ChainReport summarize(int n, std::span<const RigidSet> terms) {
  ChainReport report;
  report.n = n;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    report.set_sizes.push_back(terms[i].size());
    if (i == 0) continue;
    if (terms[i].size() < terms[i - 1].size()) throw InvariantViolation("normalizer chain shrank");
    report.log2_indices.push_back(terms[i].size() - terms[i - 1].size());
    if (terms[i] == terms[i - 1] && !report.stabilized_at) report.stabilized_at = static_cast<int>(i);
  }
  return report;
}

inline ChainReport chain(int n, int max_steps) {
  const auto terms = chain_terms(n, max_steps);
  return summarize(n, terms);
}

/// Rigid commutators spanning N^{n-1} modulo N^{n-2}, one per witness.
inline std::vector<RigidCommutator> transversal(int n) {
  if (n < 3 || n > kMaxTop) throw std::invalid_argument("transversal requires n >= 3");
  std::vector<RigidCommutator> out;
  for (const auto& w : theorem_witnesses(static_cast<std::uint64_t>(n))) {
    HoleMask mask = 0;
    for (auto x : w.holes.parts()) mask |= HoleMask{1} << x;
    out.push_back(RigidCommutator::punctured(static_cast<int>(w.top), mask));
  }
  return out;
}

}  // namespace rigidchain
