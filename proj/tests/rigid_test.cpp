#include <gtest/gtest.h>

#include <set>

#include "rigidchain/rigid.hpp"
#include "test_oracles.hpp"

namespace rigidchain {
namespace {

TEST(RigidCommutator, FromDescending) {
  const auto r = RigidCommutator::from_descending({8, 7, 6, 5, 1});
  EXPECT_EQ(r.top(), 8);
  EXPECT_EQ(r.hole_list(), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(RigidCommutator::from_descending({5, 4}), RigidCommutator::punctured(5, {1, 2, 3}));
  EXPECT_TRUE(RigidCommutator::from_descending(std::span<const int>{}).is_identity());
  EXPECT_THROW(RigidCommutator::from_descending({3, 3}), std::invalid_argument);
  EXPECT_THROW(RigidCommutator::from_descending({2, 5}), std::invalid_argument);
  EXPECT_THROW(RigidCommutator::from_descending({3, 0}), std::invalid_argument);
}

TEST(RigidCommutator, ToDescending) {
  EXPECT_EQ(RigidCommutator::punctured(6, {1, 2, 4}).descending(), (std::vector<int>{6, 5, 3}));
  EXPECT_EQ(make_t(5).descending(), (std::vector<int>{5, 4, 3, 2, 1}));
  EXPECT_TRUE(RigidCommutator{}.descending().empty());
}

TEST(RigidCommutator, PuncturedValidation) {
  EXPECT_THROW(RigidCommutator::punctured(3, {3}), std::invalid_argument);
  EXPECT_THROW(RigidCommutator::punctured(3, {0}), std::invalid_argument);
  EXPECT_THROW(RigidCommutator::punctured(3, {1, 1}), std::invalid_argument);
  EXPECT_THROW(RigidCommutator::punctured(0, HoleMask{0}), std::invalid_argument);
  EXPECT_THROW(RigidCommutator::punctured(64, HoleMask{0}), std::invalid_argument);
  EXPECT_THROW(RigidCommutator::punctured(4, HoleMask{1}), std::invalid_argument);
  const auto big = RigidCommutator::punctured(63, {1, 62});
  EXPECT_EQ(big.top(), 63);
  EXPECT_EQ(big.hole_list(), (std::vector<int>{1, 62}));
}

TEST(RigidCommutator, CodesEnumerateTheUniverse) {
  // Codes 1..2^n-1 are exactly the non-identity commutators with top <= n.
  std::set<std::pair<int, std::vector<int>>> seen;
  for (RigidCommutator::Code c = 1; c < 64; ++c) {
    const auto r = RigidCommutator::from_code(c);
    EXPECT_LE(r.top(), 6);
    for (int h : r.hole_list()) EXPECT_LT(h, r.top());
    seen.insert({r.top(), r.hole_list()});
  }
  EXPECT_EQ(seen.size(), 63U);
}

TEST(RigidCommutator, RoundTripUpToTop20) {
  for (int top = 1; top <= 20; ++top) {
    const HoleMask span = ((HoleMask{1} << top) - 1) & ~HoleMask{1};
    // Every hole-set for small tops, a strided sample above.
    const HoleMask step = top <= 14 ? 2 : 2 * 977;
    for (HoleMask holes = 0; holes <= span; holes += step) {
      const auto r = RigidCommutator::punctured(top, holes & span);
      const auto seq = r.descending();
      EXPECT_EQ(RigidCommutator::from_descending(std::span<const int>(seq)), r);
      EXPECT_EQ(parse(format(r)), r);
    }
  }
}

TEST(Commutator, ReplacesAHoleByASubsetBelowIt) {
  // [<a>_X, <x>_Y] = <a>_{(X \ {x}) u Y} for x in X, Y below x.
  const auto c = commutator(RigidCommutator::punctured(10, {2, 5, 7}), RigidCommutator::punctured(5, {1, 3}));
  EXPECT_EQ(c, RigidCommutator::punctured(10, {1, 2, 3, 7}));
  const auto d = commutator(RigidCommutator::punctured(5, {1, 4}), RigidCommutator::punctured(4, {2, 3}));
  EXPECT_EQ(d, RigidCommutator::punctured(5, {1, 2, 3}));
}

TEST(Commutator, Examples) {
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) EXPECT_TRUE(commutator(make_t(a), make_t(b)).is_identity());
  }
  for (int b = 2; b <= 8; ++b) {
    for (int a = 1; a < b; ++a) {
      EXPECT_EQ(commutator(make_t(a), make_u(b, a)), make_t(b));
      EXPECT_EQ(commutator(make_u(b, a), make_t(a)), make_t(b));
    }
  }
  EXPECT_TRUE(commutator(RigidCommutator::punctured(5, {1, 2, 3}), RigidCommutator::punctured(4, {1, 2})).is_identity());
  // Equal tops never commute nontrivially.
  EXPECT_TRUE(commutator(RigidCommutator::punctured(6, {1}), RigidCommutator::punctured(6, {2, 5})).is_identity());
}

TEST(Commutator, AgreesWithSetFormulaForTopsUpTo7) {
  for (RigidCommutator::Code cx = 0; cx < 128; ++cx) {
    for (RigidCommutator::Code cy = 0; cy < 128; ++cy) {
      const auto x = RigidCommutator::from_code(cx);
      const auto y = RigidCommutator::from_code(cy);
      const auto h = [](RigidCommutator r) {
        auto l = r.hole_list();
        return oracle::Punctured{r.top(), std::set<int>(l.begin(), l.end())};
      };
      const auto got = commutator(x, y);
      ASSERT_EQ(h(got), oracle::bracket(h(x), h(y))) << format(x) << " " << format(y);
      if (!got.is_identity()) {
        for (int hole : got.hole_list()) ASSERT_LT(hole, got.top());
      }
      ASSERT_EQ(got, commutator(y, x));
    }
    EXPECT_TRUE(commutator(RigidCommutator::from_code(cx), RigidCommutator::from_code(cx)).is_identity());
    EXPECT_TRUE(commutator(RigidCommutator::from_code(cx), RigidCommutator{}).is_identity());
  }
}

TEST(MakeTU, Examples) {
  EXPECT_EQ(make_t(1), RigidCommutator::punctured(1, HoleMask{0}));
  EXPECT_EQ(make_t(3), RigidCommutator::from_descending({3, 2, 1}));
  EXPECT_EQ(make_t(8).holes(), 0U);
  EXPECT_EQ(make_u(5, 2).descending(), (std::vector<int>{5, 4, 3, 1}));
  EXPECT_EQ(make_u(2, 1).descending(), (std::vector<int>{2}));
  EXPECT_THROW(make_u(3, 3), std::invalid_argument);
  EXPECT_THROW(make_u(3, 0), std::invalid_argument);
}

TEST(Format, CanonicalText) {
  EXPECT_EQ(format(RigidCommutator::punctured(8, {2, 3, 4})), "8[2,3,4]");
  EXPECT_EQ(format(make_t(3)), "3[]");
  EXPECT_EQ(format(RigidCommutator{}), "id");
  EXPECT_EQ(format_descending(RigidCommutator::punctured(8, {2, 3, 4})), "[8,7,6,5,1]");
  EXPECT_EQ(format_descending(RigidCommutator{}), "[]");
  EXPECT_TRUE(parse("id").is_identity());
  EXPECT_EQ(parse("5[1,2,3]"), RigidCommutator::punctured(5, {1, 2, 3}));
  EXPECT_EQ(parse("4[]"), make_t(4));
}

TEST(Format, ParseRejectsMalformedText) {
  for (const char* bad : {"", "[]", "5", "5[", "5[1,]", "5[,1]", "5[1,,2]", "x[1]", "5[1,5]", "5[2,2]",
                          "5[3,1]", "5[a]", "5[1] ", "-1[]", "ID"}) {
    EXPECT_THROW(parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Ordering, TopThenHoleList) {
  EXPECT_LT(RigidCommutator::punctured(7, {1, 2, 5}), RigidCommutator::punctured(7, {1, 3, 4}));
  EXPECT_LT(RigidCommutator::punctured(7, {1, 3, 4}), RigidCommutator::punctured(8, {1}));
  EXPECT_LT(RigidCommutator::punctured(5, {1, 2}), RigidCommutator::punctured(5, {2}));
}

}  // namespace
}  // namespace rigidchain
