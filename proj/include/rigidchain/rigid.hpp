#pragma once

// Rigid commutators of the Sylow 2-subgroup of Sym(2^n).
//
// A non-identity rigid commutator [i_1, ..., i_k] (i_1 > ... > i_k) is stored
// in punctured form <a>_X: the top a = i_1 and the hole-set
// X = {1..a} \ {i_1..i_k}. The pair is packed into a single integer code
//
//     code = 2^(a-1) | sum_{x in X} 2^(x-1)
//
// so the most significant bit gives the top and the lower bits the holes.
// Codes of commutators with top <= n are exactly the integers 1 .. 2^n - 1,
// and the identity is code 0.

#include <algorithm>
#include <bit>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rigidchain {

/// Largest supported top index.
inline constexpr int kMaxTop = 63;

/// Bitmask over positions: bit i set iff i is a hole. Bit 0 is never used.
using HoleMask = std::uint64_t;

class RigidCommutator {
 public:
  using Code = std::uint64_t;

  /// The identity, written [ ] or `id`.
  constexpr RigidCommutator() = default;

  static constexpr RigidCommutator from_code(Code code) { return RigidCommutator(code); }

  /// <top>_holes. Throws std::invalid_argument unless holes lie in {1..top-1}.
  static RigidCommutator punctured(int top, HoleMask holes) {
    if (top < 1 || top > kMaxTop) {
      throw std::invalid_argument("rigid commutator top must lie in 1.." + std::to_string(kMaxTop) +
                                  ", got " + std::to_string(top));
    }
    const HoleMask allowed = ((HoleMask{1} << top) - 1) & ~HoleMask{1};
    if ((holes & ~allowed) != 0) {
      throw std::invalid_argument("holes of a rigid commutator must lie below its top");
    }
    return RigidCommutator((Code{1} << (top - 1)) | (holes >> 1));
  }

  static RigidCommutator punctured(int top, std::span<const int> holes) {
    HoleMask mask = 0;
    for (int h : holes) {
      if (h < 1 || h >= top) {
        throw std::invalid_argument("hole " + std::to_string(h) + " outside 1.." +
                                    std::to_string(top - 1));
      }
      if ((mask >> h) & 1U) throw std::invalid_argument("duplicate hole " + std::to_string(h));
      mask |= HoleMask{1} << h;
    }
    return punctured(top, mask);
  }

  static RigidCommutator punctured(int top, std::initializer_list<int> holes) {
    return punctured(top, std::span<const int>(holes.begin(), holes.size()));
  }

  /// Builds the commutator [i_1, ..., i_k] from its strictly decreasing index
  /// sequence. The empty sequence is the identity.
  static RigidCommutator from_descending(std::span<const int> indices) {
    if (indices.empty()) return {};
    const int top = indices.front();
    if (top < 1 || top > kMaxTop) {
      throw std::invalid_argument("index " + std::to_string(top) + " out of range");
    }
    HoleMask present = 0;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (indices[k] < 1) throw std::invalid_argument("indices must be positive");
      if (k > 0 && indices[k] >= indices[k - 1]) {
        throw std::invalid_argument("indices of a rigid commutator must be strictly decreasing");
      }
      present |= HoleMask{1} << indices[k];
    }
    const HoleMask all_below_top = ((HoleMask{1} << top) - 1) & ~HoleMask{1};
    return punctured(top, all_below_top & ~present);
  }

  static RigidCommutator from_descending(std::initializer_list<int> indices) {
    return from_descending(std::span<const int>(indices.begin(), indices.size()));
  }

  constexpr bool is_identity() const { return code_ == 0; }
  constexpr Code code() const { return code_; }

  /// Top index a; 0 for the identity.
  constexpr int top() const { return std::bit_width(code_); }

  constexpr HoleMask holes() const {
    if (code_ == 0) return 0;
    return (code_ & ~(Code{1} << (top() - 1))) << 1;
  }

  constexpr bool has_hole(int x) const { return x >= 1 && x < 64 && ((holes() >> x) & 1U); }
  constexpr int hole_count() const { return std::popcount(holes()); }

  std::uint64_t hole_sum() const {
    std::uint64_t sum = 0;
    for (HoleMask m = holes(); m != 0; m &= m - 1) sum += static_cast<std::uint64_t>(std::countr_zero(m));
    return sum;
  }

  /// Holes in ascending order.
  std::vector<int> hole_list() const {
    std::vector<int> out;
    for (HoleMask m = holes(); m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  /// The bracket sequence [i_1, ..., i_k], strictly decreasing.
  std::vector<int> descending() const {
    std::vector<int> out;
    const int a = top();
    const HoleMask h = holes();
    for (int i = a; i >= 1; --i) {
      if (!((h >> i) & 1U)) out.push_back(i);
    }
    return out;
  }

  friend constexpr bool operator==(RigidCommutator, RigidCommutator) = default;

  /// Orders by top, then lexicographically by the ascending hole list.
  friend std::strong_ordering operator<=>(RigidCommutator x, RigidCommutator y) {
    if (auto c = x.top() <=> y.top(); c != 0) return c;
    const auto hx = x.hole_list();
    const auto hy = y.hole_list();
    return std::lexicographical_compare_three_way(hx.begin(), hx.end(), hy.begin(), hy.end());
  }

 private:
  constexpr explicit RigidCommutator(Code code) : code_(code) {}

  Code code_ = 0;
};

/// Commutator of two rigid commutators on packed codes:
/// [<a>_I, <b>_J] = <max(a,b)>_{(I u J) \ {min(a,b)}} if min(a,b) in I u J,
/// and the identity otherwise.
constexpr RigidCommutator::Code commutator_code(RigidCommutator::Code x, RigidCommutator::Code y) {
  if (x == 0 || y == 0) return 0;
  if (std::bit_width(x) > std::bit_width(y)) std::swap(x, y);
  const RigidCommutator::Code low_top = std::bit_floor(x);
  // Equal tops land here too: both codes carry low_top, and the result would
  // lose its top bit, so equal tops are excluded explicitly.
  if (low_top == std::bit_floor(y) || (y & low_top) == 0) return 0;
  return (x | y) ^ low_top;
}

constexpr RigidCommutator commutator(RigidCommutator x, RigidCommutator y) {
  return RigidCommutator::from_code(commutator_code(x.code(), y.code()));
}

/// t_i = [i, i-1, ..., 1], i.e. <i> with no holes.
inline RigidCommutator make_t(int i) { return RigidCommutator::punctured(i, HoleMask{0}); }

/// u_ij = <i>_{j}, for 1 <= j < i.
inline RigidCommutator make_u(int i, int j) {
  if (j < 1 || j >= i) {
    throw std::invalid_argument("u_{i,j} requires 1 <= j < i, got i=" + std::to_string(i) +
                                " j=" + std::to_string(j));
  }
  return RigidCommutator::punctured(i, HoleMask{1} << j);
}

/// Canonical text: `8[2,3,4]` (holes ascending), `3[]` for t_3, `id` for the identity.
inline std::string format(RigidCommutator r) {
  if (r.is_identity()) return "id";
  std::string out = std::to_string(r.top()) + "[";
  bool first = true;
  for (int h : r.hole_list()) {
    if (!first) out += ',';
    out += std::to_string(h);
    first = false;
  }
  out += ']';
  return out;
}

/// Bracket form as printed in the literature, e.g. `[8,7,6,5,1]`; `[]` for the identity.
inline std::string format_descending(RigidCommutator r) {
  std::string out = "[";
  bool first = true;
  for (int i : r.descending()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += ']';
  return out;
}

namespace detail {

inline int parse_index(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("malformed rigid commutator '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace detail

/// Inverse of format(). Rejects malformed text, holes >= top and duplicates.
inline RigidCommutator parse(std::string_view text) {
  if (text == "id") return {};
  const auto open = text.find('[');
  if (open == std::string_view::npos || open == 0 || text.back() != ']') {
    throw std::invalid_argument("malformed rigid commutator '" + std::string(text) + "'");
  }
  const int top = detail::parse_index(text.substr(0, open), text);
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  std::vector<int> holes;
  while (!body.empty()) {
    const auto comma = body.find(',');
    holes.push_back(detail::parse_index(body.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw std::invalid_argument("trailing comma in '" + std::string(text) + "'");
  }
  if (!std::is_sorted(holes.begin(), holes.end())) {
    throw std::invalid_argument("holes must be listed in ascending order in '" + std::string(text) + "'");
  }
  return RigidCommutator::punctured(top, std::span<const int>(holes));
}

}  // namespace rigidchain
