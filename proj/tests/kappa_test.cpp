#include "spohn/kappa.hpp"

#include "gtest/gtest.h"

namespace spohn::kappa {
namespace {

RankingFunction ranks(std::vector<Rank> r) {
  auto space = WorldSpace::indexed(r.size());
  return RankingFunction(space, std::move(r));
}

TEST(RankOfEventTest, MinimumOverMembers) {
  auto delta = ranks({0, 1, 1, 2});
  EXPECT_EQ(rank_of_event(delta, Event(4, {1, 2, 3})), ExtRank(1));
  EXPECT_EQ(rank_of_event(delta, Event::full(4)), ExtRank(0));
  EXPECT_EQ(rank_of_event(delta, Event::empty(4)), ExtRank::infinity());
  EXPECT_EQ(rank_of_event(delta, Event(4, {3})), ExtRank(2));
  EXPECT_THROW(rank_of_event(delta, Event::full(3)), Error);
}

TEST(ConditionTest, ShiftsOntoTheContractedSpace) {
  auto delta = ranks({0, 1, 1, 2});
  auto c = condition(delta, Event(4, {1, 2, 3}));
  EXPECT_EQ(c.function, RankingFunction(WorldSpace({"w2", "w3", "w4"}), {0, 0, 1}));
  EXPECT_EQ(c.origin, (std::vector<std::size_t>{1, 2, 3}));

  EXPECT_EQ(condition(delta, Event::full(4)).function, delta);
  EXPECT_EQ(condition(delta, Event(4, {3})).function, RankingFunction(WorldSpace({"w4"}), {0}));

  try {
    condition(delta, Event::empty(4));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_evidence);
  }
}

TEST(ConditionTest, ConditionalRankOfEvents) {
  auto delta = ranks({0, 1, 1, 2});
  Event a(4, {1, 2, 3});
  EXPECT_EQ(conditional_rank(delta, Event(4, {3}), a), ExtRank(1));
  EXPECT_EQ(conditional_rank(delta, Event(4, {0}), a), ExtRank::infinity());
  EXPECT_EQ(conditional_rank(delta, Event(4, {0, 2}), a), ExtRank(0));
}

TEST(BeliefTest, TwoBranchFormula) {
  RankingFunction delta(WorldSpace({"a", "b"}), {0, 3});
  EXPECT_EQ(belief(delta, Event(2, {0})), BeliefValue::finite(3));
  EXPECT_EQ(belief(delta, Event(2, {1})), BeliefValue::finite(-3));
  EXPECT_EQ(belief(delta, Event::full(2)), BeliefValue::plus_infinity());
  EXPECT_EQ(belief(delta, Event::empty(2)), BeliefValue::minus_infinity());
  EXPECT_TRUE(belief(delta, Event::full(2)).is_believed());
  EXPECT_LT(BeliefValue::minus_infinity(), BeliefValue::finite(-100));
  EXPECT_LT(BeliefValue::finite(100), BeliefValue::plus_infinity());
}

TEST(BeliefTest, VacuousBelievesNothingProper) {
  auto delta = RankingFunction::vacuous(WorldSpace::indexed(3));
  for (std::uint64_t m = 1; m < 7; ++m) EXPECT_EQ(belief(delta, Event::from_mask(3, m)), BeliefValue::finite(0));
}

// A proposition and its negation are never both believed.
TEST(BeliefTest, NeverBelievesBothSides) {
  auto delta = ranks({2, 0, 1, 0, 3});
  for (std::uint64_t m = 0; m < 32; ++m) {
    auto e = Event::from_mask(5, m);
    EXPECT_FALSE(belief(delta, e).is_believed() && belief(delta, e.complement()).is_believed());
  }
}

TEST(PlainBeliefsTest, SupersetsOfTheCore) {
  EXPECT_EQ(plain_beliefs(ranks({0, 1, 1, 2})).size(), 8u);
  auto vac = plain_beliefs(RankingFunction::vacuous(WorldSpace::indexed(4)));
  ASSERT_EQ(vac.size(), 1u);
  EXPECT_TRUE(vac.front().is_full());
  auto two = plain_beliefs(ranks({0, 0, 1}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], Event(3, {0, 1}));
  EXPECT_EQ(core_stratum(ranks({1, 0, 0})), Event(3, {1, 2}));
}

TEST(PlainBeliefsTest, GuardedSpaceSize) {
  auto delta = RankingFunction::vacuous(WorldSpace::indexed(21));
  try {
    plain_beliefs(delta);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::space_too_large);
  }
  EXPECT_THROW(plain_beliefs(ranks({0, 1, 2}), 2), Error);
}

TEST(DensifyTest, RemovesEmptyStrata) {
  EXPECT_EQ(densify(ranks({0, 2, 2, 5})), ranks({0, 1, 1, 2}));
  EXPECT_EQ(densify(ranks({0, 1, 1, 2})), ranks({0, 1, 1, 2}));
  EXPECT_EQ(densify(ranks({0, 0, 0})), ranks({0, 0, 0}));
  EXPECT_TRUE(is_dense(ranks({0, 1, 1, 2})));
  EXPECT_FALSE(is_dense(ranks({0, 2, 2})));
  EXPECT_TRUE(is_dense(densify(ranks({7, 0, 3, 3, 12}))));
}

TEST(DensifyTest, IdempotentAndOrderPreserving) {
  auto delta = ranks({4, 0, 9, 4, 1, 30});
  auto d = densify(delta);
  EXPECT_EQ(densify(d), d);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      EXPECT_EQ(delta.rank(a) <=> delta.rank(b), d.rank(a) <=> d.rank(b));
}

// Exhaustive: superset monotonicity, and conditioning keeps min rank 0.
TEST(KappaPropertyTest, MonotoneAndConditionNormalized) {
  auto delta = ranks({1, 0, 3, 1, 2, 0});
  const std::uint64_t all = 63;
  for (std::uint64_t a = 1; a <= all; ++a) {
    auto ea = Event::from_mask(6, a);
    auto c = condition(delta, ea);
    EXPECT_EQ(*std::min_element(c.function.ranks().begin(), c.function.ranks().end()), 0u);
    for (std::uint64_t b = a; b <= all; b = (b + 1) | a)
      EXPECT_LE(rank_of_event(delta, Event::from_mask(6, b)), rank_of_event(delta, ea));
  }
}

}  // namespace
}  // namespace spohn::kappa
