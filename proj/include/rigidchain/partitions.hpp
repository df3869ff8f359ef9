#pragma once

// Partitions into distinct parts, refinability, minimal excludants and the
// counting sequences b_j (at least two distinct parts), a_j (partial sums of
// b_j) and c_j (unrefinable partitions).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigidchain {

/// A finite set of distinct positive integers, kept in strictly increasing order.
class Partition {
 public:
  using Part = std::uint64_t;

  Partition() = default;

  explicit Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end());
    Part sum = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] == parts_[i - 1]) {
        throw std::invalid_argument("partition parts must be distinct, " + std::to_string(parts_[i]) +
                                    " repeats");
      }
      if (parts_[i] > kMaxSum - sum) throw std::overflow_error("partition sum exceeds 2^63 - 1");
      sum += parts_[i];
    }
    sum_ = sum;
  }

  Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

  static constexpr Part kMaxSum = static_cast<Part>(std::numeric_limits<std::int64_t>::max());

  std::span<const Part> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Part sum() const { return sum_; }

  bool contains(Part x) const { return std::binary_search(parts_.begin(), parts_.end(), x); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<Part> parts_;
  Part sum_ = 0;
};

/// `{1,4,5}`; the empty partition is `{}`.
inline std::string to_string(const Partition& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out + "}";
}

/// Replacing the part `replaced` by the parts of `replacement`.
struct Refinement {
  Partition::Part replaced = 0;
  Partition replacement;

  friend bool operator==(const Refinement&, const Refinement&) = default;
};

/// The partition obtained by applying `r` to `p`. Throws if `r` is not a
/// refinement of `p`.
inline Partition apply(const Partition& p, const Refinement& r) {
  if (!p.contains(r.replaced)) throw std::invalid_argument("refined part is not in the partition");
  if (r.replacement.size() < 2 || r.replacement.sum() != r.replaced) {
    throw std::invalid_argument("replacement must have at least two parts summing to the refined part");
  }
  std::vector<Partition::Part> parts;
  for (auto x : p.parts()) {
    if (x != r.replaced) parts.push_back(x);
  }
  for (auto y : r.replacement.parts()) {
    if (p.contains(y)) throw std::invalid_argument("replacement collides with an existing part");
    parts.push_back(y);
  }
  return Partition(std::move(parts));
}

/// Least positive integer not in `p`.
inline Partition::Part mex(const Partition& p) {
  Partition::Part k = 1;
  for (auto x : p.parts()) {
    if (x != k) break;
    ++k;
  }
  return k;
}

/// Calls `visit` with every partition of `target_sum` into distinct parts with
/// at least `min_parts` parts and every part <= `max_part`, in increasing
/// lexicographic order of the part tuples. The span is only valid during the
/// call.
template <typename Visitor>
void for_each_distinct(Partition::Part target_sum, std::size_t min_parts, Visitor&& visit,
                       Partition::Part max_part = std::numeric_limits<Partition::Part>::max()) {
  std::vector<Partition::Part> stack;
  // Parts are chosen in increasing order; `next` is the smallest admissible
  // next part.
  auto recurse = [&](auto&& self, Partition::Part remaining, Partition::Part next) -> void {
    if (remaining == 0) {
      if (stack.size() >= min_parts) visit(std::span<const Partition::Part>(stack));
      return;
    }
    // After a non-final part x the rest must be made of parts > x, so 2x < remaining.
    for (Partition::Part x = next; x < remaining - x && x <= max_part; ++x) {
      stack.push_back(x);
      self(self, remaining - x, x + 1);
      stack.pop_back();
    }
    if (remaining >= next && remaining <= max_part) {
      stack.push_back(remaining);
      if (stack.size() >= min_parts) visit(std::span<const Partition::Part>(stack));
      stack.pop_back();
    }
  };
  recurse(recurse, target_sum, 1);
}

inline std::vector<Partition> enumerate_distinct(Partition::Part target_sum, std::size_t min_parts) {
  std::vector<Partition> out;
  for_each_distinct(target_sum, min_parts, [&](std::span<const Partition::Part> parts) {
    out.emplace_back(std::vector<Partition::Part>(parts.begin(), parts.end()));
  });
  return out;
}

/// b_0, ..., b_max_j, where b_j counts partitions of j into at least two
/// distinct parts. Standard distinct-parts DP; the enumeration above is the
/// cross-check. Throws std::overflow_error past 64 bits.
inline std::vector<std::uint64_t> b_sequence(std::uint64_t max_j) {
  std::vector<std::uint64_t> ways(max_j + 1, 0);
  ways[0] = 1;
  for (std::uint64_t part = 1; part <= max_j; ++part) {
    for (std::uint64_t s = max_j; s >= part; --s) {
      if (ways[s - part] > std::numeric_limits<std::uint64_t>::max() - ways[s]) {
        throw std::overflow_error("b_j exceeds 64 bits at j=" + std::to_string(s));
      }
      ways[s] += ways[s - part];
    }
  }
  // Drop the empty partition of 0 and the single-part partition {j}.
  for (auto& w : ways) --w;
  return ways;
}

inline std::uint64_t count_b(std::uint64_t j) { return b_sequence(j).back(); }

/// a_0, ..., a_max_j, the partial sums of b_j.
inline std::vector<std::uint64_t> a_sequence(std::uint64_t max_j) {
  auto out = b_sequence(max_j);
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (out[k - 1] > std::numeric_limits<std::uint64_t>::max() - out[k]) {
      throw std::overflow_error("a_j exceeds 64 bits at j=" + std::to_string(k));
    }
    out[k] += out[k - 1];
  }
  return out;
}

inline std::uint64_t partial_sum_a(std::uint64_t j) { return a_sequence(j).back(); }

enum class RefinementSearch {
  /// Only two-part replacements. Sufficient: any refinable partition admits one.
  kTwoParts,
  /// Replacements of any size >= 2. Exponential; kept for validation.
  kAnySize,
};

namespace detail {

// Membership bitmap over 0..max(p).
inline std::vector<bool> part_bitmap(const Partition& p) {
  std::vector<bool> in(p.empty() ? 1 : p.parts().back() + 1, false);
  for (auto x : p.parts()) in[x] = true;
  return in;
}

inline bool in_bitmap(const std::vector<bool>& in, Partition::Part x) { return x < in.size() && in[x]; }

inline std::optional<Partition::Part> two_part_split(const std::vector<bool>& in, Partition::Part x) {
  for (Partition::Part y = 1; 2 * y < x; ++y) {
    if (!in_bitmap(in, y) && !in_bitmap(in, x - y)) return y;
  }
  return std::nullopt;
}

// Lexicographically least increasing tuple of >= 2 values, none in `in`,
// summing to `x`.
inline bool any_size_split(const std::vector<bool>& in, Partition::Part remaining, Partition::Part next,
                           std::vector<Partition::Part>& chosen) {
  if (remaining == 0) return chosen.size() >= 2;
  for (Partition::Part y = next; y <= remaining; ++y) {
    if (in_bitmap(in, y)) continue;
    const Partition::Part rest = remaining - y;
    if (rest != 0 && rest <= y) continue;
    chosen.push_back(y);
    if (any_size_split(in, rest, y + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// A refinement of `p` if one exists: the smallest refinable part, replaced by
/// the lexicographically least admissible set.
inline std::optional<Refinement> find_refinement(const Partition& p,
                                                 RefinementSearch search = RefinementSearch::kTwoParts) {
  const auto in = detail::part_bitmap(p);
  for (auto x : p.parts()) {
    if (search == RefinementSearch::kTwoParts) {
      if (auto y = detail::two_part_split(in, x)) return Refinement{x, Partition{*y, x - *y}};
    } else {
      std::vector<Partition::Part> chosen;
      if (detail::any_size_split(in, x, 1, chosen)) return Refinement{x, Partition(std::move(chosen))};
    }
  }
  return std::nullopt;
}

inline bool is_refinable(const Partition& p) { return find_refinement(p).has_value(); }

namespace detail {

// Refinability test on a raw increasing part list, reusing `in` as scratch.
inline bool refinable_parts(std::span<const Partition::Part> parts, std::vector<bool>& in) {
  if (parts.empty()) return false;
  in.assign(parts.back() + 1, false);
  for (auto x : parts) in[x] = true;
  for (auto x : parts) {
    if (two_part_split(in, x)) return true;
  }
  return false;
}

}  // namespace detail

inline std::vector<Partition> enumerate_unrefinable(Partition::Part target_sum) {
  std::vector<Partition> out;
  std::vector<bool> scratch;
  for_each_distinct(target_sum, 0, [&](std::span<const Partition::Part> parts) {
    if (!detail::refinable_parts(parts, scratch)) {
      out.emplace_back(std::vector<Partition::Part>(parts.begin(), parts.end()));
    }
  });
  return out;
}

/// c_j: number of unrefinable partitions of j into distinct parts (c_0 = 1).
inline std::uint64_t count_unrefinable(Partition::Part target_sum) {
  std::uint64_t count = 0;
  std::vector<bool> scratch;
  for_each_distinct(target_sum, 0, [&](std::span<const Partition::Part> parts) {
    if (!detail::refinable_parts(parts, scratch)) ++count;
  });
  return count;
}

/// A pair (a, X) such that <a>_X lies in N^{n-1} but not in N^{n-2}.
struct TheoremWitness {
  std::uint64_t top = 0;
  Partition holes;

  friend bool operator==(const TheoremWitness&, const TheoremWitness&) = default;
};

/// All (a, X) with X a subset of {1..a-1}, sum X = a + 1, X unrefinable and
/// a <= n < a + mex(X); sorted by a, then X.
inline std::vector<TheoremWitness> theorem_witnesses(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("theorem_witnesses requires n >= 1");
  std::vector<TheoremWitness> out;
  std::vector<bool> scratch;
  for (std::uint64_t a = 2; a <= n; ++a) {
    for_each_distinct(
        a + 1, 0,
        [&](std::span<const Partition::Part> parts) {
          if (detail::refinable_parts(parts, scratch)) return;
          Partition x(std::vector<Partition::Part>(parts.begin(), parts.end()));
          if (n < a + mex(x)) out.push_back({a, std::move(x)});
        },
        a - 1);
  }
  return out;
}

}  // namespace rigidchain
