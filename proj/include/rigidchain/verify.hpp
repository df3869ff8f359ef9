#pragma once

// Cross-checks of the symbolic rigid-commutator engine against the
// permutation oracle at small rank.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "rigidchain/permoracle.hpp"
#include "rigidchain/saturated.hpp"

namespace rigidchain {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  int n = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

namespace detail {

inline std::string join_sizes(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

inline std::vector<RigidCommutator> nonidentity_rigid(int n) {
  std::vector<RigidCommutator> out;
  for (RigidCommutator::Code c = 1; c < (RigidCommutator::Code{1} << n); ++c) {
    out.push_back(RigidCommutator::from_code(c));
  }
  return out;
}

inline CheckResult check_generators(int n, const PermGroup& sigma) {
  CheckResult r{"sylow-generators", true, {}};
  for (int i = 1; i <= n; ++i) {
    const auto s = s_perm(n, i);
    if (s.is_identity() || !(s * s).is_identity()) {
      r.passed = false;
      r.detail += "s_" + std::to_string(i) + " is not an involution; ";
    }
  }
  const std::size_t expected = std::size_t{1} << ((std::size_t{1} << n) - 1);
  if (sigma.order() != expected) {
    r.passed = false;
    r.detail += "|Sigma_n| = " + std::to_string(sigma.order()) + ", expected " + std::to_string(expected);
  }
  if (r.passed) r.detail = "|Sigma_" + std::to_string(n) + "| = " + std::to_string(sigma.order());
  return r;
}

inline CheckResult check_translation_group(int n) {
  std::vector<RigidCommutator> ts;
  for (int i = 1; i <= n; ++i) ts.push_back(make_t(i));
  const PermGroup t = eval_subgroup(n, ts);
  CheckResult r{"t-structure", true, {}};
  r.detail = "|T| = " + std::to_string(t.order());
  if (t.order() != (std::size_t{1} << n)) r.passed = false;
  if (!t.is_abelian()) { r.passed = false; r.detail += ", not abelian"; }
  if (!t.has_exponent_two()) { r.passed = false; r.detail += ", exponent != 2"; }
  if (!t.is_regular()) { r.passed = false; r.detail += ", not regular"; }
  return r;
}

inline CheckResult check_commutator_homomorphism(int n) {
  const auto all = nonidentity_rigid(n);
  std::vector<Permutation> evaluated;
  for (auto r : all) evaluated.push_back(eval_rigid(n, r));
  CheckResult r{"commutator-homomorphism", true, {}};
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      ++pairs;
      const auto symbolic = eval_rigid(n, commutator(all[i], all[j]));
      if (!(symbolic == group_commutator(evaluated[i], evaluated[j]))) {
        if (r.passed) r.detail = "first mismatch: [" + format(all[i]) + ", " + format(all[j]) + "]";
        r.passed = false;
      }
    }
  }
  if (r.passed) r.detail = std::to_string(pairs) + " pairs";
  return r;
}

}  // namespace detail

/// Runs the full oracle suite at rank n (3 or 4). `include_sym` adds the
/// Sym(8) normalizer comparison and is only valid at n = 3.
inline VerificationReport verify_oracle(int n, bool include_sym) {
  if (n < 3 || n > kMaxOracleRank) {
    throw OracleRangeError("oracle capped at n=" + std::to_string(kMaxOracleRank));
  }
  if (include_sym && n != 3) throw OracleRangeError("the Sym(2^n) normalizer check is limited to n=3");

  VerificationReport report;
  report.n = n;
  const PermGroup sigma = sylow_group(n);
  report.checks.push_back(detail::check_generators(n, sigma));
  report.checks.push_back(detail::check_translation_group(n));
  report.checks.push_back(detail::check_commutator_homomorphism(n));

  // Symbolic chain from T up to stabilization (the universe bounds its length).
  const auto symbolic = chain_terms(n, static_cast<int>(RigidSet::universe_end(n)));
  const auto symbolic_report = summarize(n, symbolic);

  std::vector<PermGroup> brute;
  {
    std::vector<RigidCommutator> ts;
    for (int i = 1; i <= n; ++i) ts.push_back(make_t(i));
    brute.push_back(brute_normalizer(sigma, eval_subgroup(n, ts)));
    while (true) {
      auto next = brute_normalizer(sigma, brute.back());
      const bool stable = next.order() == brute.back().order();
      brute.push_back(std::move(next));
      if (stable) break;
    }
  }
  std::vector<std::size_t> brute_indices;
  for (std::size_t i = 1; i < brute.size(); ++i) {
    std::size_t ratio = brute[i].order() / brute[i - 1].order();
    brute_indices.push_back(static_cast<std::size_t>(std::bit_width(ratio) - 1));
  }

  CheckResult orders{"chain-orders", true, {}};
  CheckResult members{"chain-membership", true, {}};
  CheckResult normalizing{"normalizes-agreement", true, {}};
  if (symbolic.size() != brute.size()) {
    orders.passed = false;
    orders.detail = "chain lengths differ: symbolic " + std::to_string(symbolic.size()) + ", brute " +
                    std::to_string(brute.size());
  }
  const auto all = detail::nonidentity_rigid(n);
  for (std::size_t i = 0; i < std::min(symbolic.size(), brute.size()); ++i) {
    const std::size_t expected = std::size_t{1} << symbolic[i].size();
    if (brute[i].order() != expected) {
      orders.passed = false;
      orders.detail += "step " + std::to_string(i) + ": 2^" + std::to_string(symbolic[i].size()) +
                       " != " + std::to_string(brute[i].order()) + "; ";
    }
    for (auto r : symbolic[i].members()) {
      if (!brute[i].contains(eval_rigid(n, r))) {
        members.passed = false;
        members.detail += format(r) + " not in brute N^" + std::to_string(i) + "; ";
      }
    }
    for (auto r : all) {
      if (normalizes(r, symbolic[i]) != normalizes(eval_rigid(n, r), brute[i])) {
        normalizing.passed = false;
        normalizing.detail += format(r) + " vs N^" + std::to_string(i) + "; ";
      }
    }
  }
  if (orders.passed) {
    orders.detail = "log2 indices " + detail::join_sizes(symbolic_report.log2_indices) + " (brute " +
                    detail::join_sizes(brute_indices) + ")";
  }
  if (symbolic_report.log2_indices != brute_indices) orders.passed = false;
  if (members.passed) members.detail = std::to_string(symbolic.size()) + " chain terms";
  if (normalizing.passed) normalizing.detail = std::to_string(all.size()) + " commutators per term";
  report.checks.push_back(orders);
  report.checks.push_back(members);
  report.checks.push_back(normalizing);

  if (include_sym) {
    CheckResult sym{"sym-normalizer", true, {}};
    for (std::size_t i = 0; i < brute.size(); ++i) {
      if (!sym_normalizer_check(brute[i])) {
        sym.passed = false;
        sym.detail += "N^" + std::to_string(i) + " differs; ";
      }
    }
    if (sym.passed) sym.detail = std::to_string(brute.size()) + " chain terms, 40320 permutations each";
    report.checks.push_back(sym);
  }
  return report;
}

}  // namespace rigidchain
