#pragma once

// Brute-force permutation realization of Sigma_n on the points 1..2^n.
//
// A word w_1...w_n is identified with the point 1 + sum 2^(n-i) w_i. Groups
// act on the right: in a product g*h, g is applied first.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "rigidchain/errors.hpp"
#include "rigidchain/rigid.hpp"

namespace rigidchain {

/// Largest rank the oracle will enumerate groups at (|Sigma_4| = 2^15).
inline constexpr int kMaxOracleRank = 4;

class Permutation {
 public:
  /// The identity on 2^n points.
  explicit Permutation(int n) : n_(check_rank(n)), images_(std::size_t{1} << n) {
    std::iota(images_.begin(), images_.end(), 0U);
  }

  /// From 1-based images: `images[p-1]` is the image of p.
  static Permutation from_images(int n, std::span<const unsigned> images) {
    Permutation out(n);
    if (images.size() != out.images_.size()) {
      throw std::invalid_argument("permutation needs exactly 2^n images");
    }
    std::vector<bool> seen(images.size(), false);
    for (std::size_t p = 0; p < images.size(); ++p) {
      const unsigned img = images[p];
      if (img < 1 || img > images.size() || seen[img - 1]) {
        throw std::invalid_argument("images do not form a bijection of 1..2^n");
      }
      seen[img - 1] = true;
      out.images_[p] = img - 1;
    }
    return out;
  }

  int rank() const { return n_; }
  std::size_t degree() const { return images_.size(); }

  /// Image of the 1-based point p.
  unsigned operator()(unsigned p) const { return images_.at(p - 1) + 1; }

  bool is_identity() const {
    for (std::size_t p = 0; p < images_.size(); ++p) {
      if (images_[p] != p) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation out(n_);
    for (std::size_t p = 0; p < images_.size(); ++p) out.images_[images_[p]] = static_cast<unsigned>(p);
    return out;
  }

  /// Apply *this, then `rhs`.
  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
    if (lhs.n_ != rhs.n_) throw std::invalid_argument("cannot compose permutations of different rank");
    Permutation out(lhs.n_);
    for (std::size_t p = 0; p < lhs.images_.size(); ++p) out.images_[p] = rhs.images_[lhs.images_[p]];
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Injective packing of the image table, 4 bits per point (degree <= 16).
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (std::size_t p = 0; p < images_.size(); ++p) k |= std::uint64_t{images_[p]} << (4 * p);
    return k;
  }

 private:
  static int check_rank(int n) {
    if (n < 0 || n > 16) throw std::invalid_argument("permutation rank must lie in 0..16");
    return n;
  }

  int n_;
  std::vector<unsigned> images_;
};

/// h^-1 k^-1 h k.
inline Permutation group_commutator(const Permutation& h, const Permutation& k) {
  return h.inverse() * k.inverse() * h * k;
}

/// s_i as the product of the transpositions (j, j + 2^(n-i)), j = 1..2^(n-i).
inline Permutation s_perm(int n, int i) {
  if (i < 1 || i > n) {
    throw std::invalid_argument("s_i requires 1 <= i <= n, got i=" + std::to_string(i) + " n=" +
                                std::to_string(n));
  }
  const unsigned half = 1U << (n - i);
  std::vector<unsigned> images(std::size_t{1} << n);
  std::iota(images.begin(), images.end(), 1U);
  for (unsigned j = 1; j <= half; ++j) std::swap(images[j - 1], images[j + half - 1]);
  return Permutation::from_images(n, images);
}

/// The left-normed commutator [s_{i_1}, ..., s_{i_k}] of r's bracket sequence.
inline Permutation eval_rigid(int n, RigidCommutator r) {
  if (r.top() > n) throw std::invalid_argument("eval_rigid: top of " + format(r) + " exceeds rank");
  const auto seq = r.descending();
  if (seq.empty()) return Permutation(n);
  Permutation acc = s_perm(n, seq.front());
  for (std::size_t k = 1; k < seq.size(); ++k) acc = group_commutator(acc, s_perm(n, seq[k]));
  return acc;
}

/// An explicitly enumerated permutation group.
class PermGroup {
 public:
  int rank() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  std::span<const Permutation> elements() const { return elements_; }
  std::span<const Permutation> generators() const { return generators_; }

  bool contains(const Permutation& g) const { return g.rank() == n_ && keys_.contains(g.key()); }

  bool includes(const PermGroup& other) const {
    return std::all_of(other.elements_.begin(), other.elements_.end(),
                       [this](const Permutation& g) { return contains(g); });
  }

  /// Same element set.
  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.n_ == b.n_ && a.order() == b.order() && a.includes(b);
  }

  bool is_abelian() const {
    for (const auto& x : generators_) {
      for (const auto& y : generators_) {
        if (!(x * y == y * x)) return false;
      }
    }
    return true;
  }

  /// Whether every element squares to the identity.
  bool has_exponent_two() const {
    return std::all_of(elements_.begin(), elements_.end(), [](const Permutation& g) { return (g * g).is_identity(); });
  }

  /// Transitive on the 2^n points with trivial point stabilizers.
  bool is_regular() const {
    const std::size_t degree = std::size_t{1} << n_;
    if (order() != degree) return false;
    std::vector<bool> hit(degree, false);
    for (const auto& g : elements_) hit[g(1) - 1] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

 private:
  friend PermGroup group_closure(int n, std::span<const Permutation> gens);
  friend PermGroup subgroup_from_elements(int n, std::vector<Permutation> elements);

  explicit PermGroup(int n) : n_(n) {}

  bool add(const Permutation& g) {
    if (!keys_.insert(g.key()).second) return false;
    elements_.push_back(g);
    return true;
  }

  int n_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::unordered_set<std::uint64_t> keys_;
};

namespace detail {

inline void check_oracle_rank(int n) {
  if (n < 0 || n > kMaxOracleRank) {
    throw OracleRangeError("oracle capped at n=" + std::to_string(kMaxOracleRank) + ", got n=" +
                           std::to_string(n));
  }
}

}  // namespace detail

/// Breadth-first closure of `gens` under right multiplication.
inline PermGroup group_closure(int n, std::span<const Permutation> gens) {
  detail::check_oracle_rank(n);
  PermGroup group(n);
  for (const auto& g : gens) {
    if (g.rank() != n) throw std::invalid_argument("generator rank does not match group rank");
    group.generators_.push_back(g);
  }
  group.add(Permutation(n));
  for (std::size_t k = 0; k < group.elements_.size(); ++k) {
    for (const auto& g : gens) {
      // elements_ may reallocate inside add(); copy before multiplying.
      Permutation next = group.elements_[k] * g;
      group.add(next);
    }
  }
  return group;
}

/// Wraps a known subgroup element list, choosing a small generating set
/// greedily. Throws if the elements do not form a group.
inline PermGroup subgroup_from_elements(int n, std::vector<Permutation> elements) {
  detail::check_oracle_rank(n);
  std::vector<Permutation> gens;
  PermGroup span = group_closure(n, gens);
  for (const auto& g : elements) {
    if (span.contains(g)) continue;
    gens.push_back(g);
    span = group_closure(n, gens);
  }
  if (span.order() != elements.size()) throw InvariantViolation("element list is not closed under products");
  return span;
}

/// Whether g^-1 H g = H, tested on generators of H.
inline bool normalizes(const Permutation& g, const PermGroup& h) {
  const Permutation g_inv = g.inverse();
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& k) { return h.contains(g_inv * k * g); });
}

/// {g in ambient : g^-1 H g = H} by scanning every element of `ambient`.
inline PermGroup brute_normalizer(const PermGroup& ambient, const PermGroup& h) {
  if (!ambient.includes(h)) throw std::invalid_argument("brute_normalizer: h is not a subgroup of ambient");
  std::vector<Permutation> out;
  for (const auto& g : ambient.elements()) {
    if (normalizes(g, h)) out.push_back(g);
  }
  return subgroup_from_elements(ambient.rank(), std::move(out));
}

/// Sigma_n = <s_1, ..., s_n>.
inline PermGroup sylow_group(int n) {
  std::vector<Permutation> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(s_perm(n, i));
  return group_closure(n, gens);
}

/// The subgroup generated by the evaluations of `rigid` commutators.
inline PermGroup eval_subgroup(int n, std::span<const RigidCommutator> rigid) {
  std::vector<Permutation> gens;
  for (auto r : rigid) gens.push_back(eval_rigid(n, r));
  return group_closure(n, gens);
}

/// Whether N_{Sym(8)}(H) = N_{Sigma_3}(H), by enumerating all 8! permutations.
inline bool sym_normalizer_check(const PermGroup& h) {
  if (h.rank() != 3) throw OracleRangeError("the Sym(2^n) normalizer check is limited to n=3");
  const PermGroup sigma = sylow_group(3);
  if (!sigma.includes(h)) throw std::invalid_argument("sym_normalizer_check: h is not a subgroup of Sigma_3");
  const PermGroup in_sigma = brute_normalizer(sigma, h);

  std::vector<unsigned> images(8);
  std::iota(images.begin(), images.end(), 1U);
  std::size_t in_sym = 0;
  do {
    const auto g = Permutation::from_images(3, images);
    if (!normalizes(g, h)) continue;
    if (!in_sigma.contains(g)) return false;
    ++in_sym;
  } while (std::next_permutation(images.begin(), images.end()));
  return in_sym == in_sigma.order();
}

}  // namespace rigidchain
