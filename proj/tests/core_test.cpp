#include "spohn/core.hpp"

#include "gtest/gtest.h"

namespace spohn {
namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::invalid_argument;
}

TEST(WorldSpaceTest, LabelsAreUniqueAndNonEmpty) {
  WorldSpace space({"a", "b", "c"});
  EXPECT_EQ(space.size(), 3u);
  EXPECT_EQ(space.index_of("b"), 1u);
  EXPECT_FALSE(space.index_of("z").has_value());
  EXPECT_EQ(code_of([] { WorldSpace({"a", "a"}); }), Errc::validation);
  EXPECT_EQ(code_of([] { WorldSpace(std::vector<std::string>{}); }), Errc::validation);
  EXPECT_EQ(WorldSpace::indexed(2), WorldSpace({"w1", "w2"}));
}

TEST(EventTest, SubsetConstruction) {
  auto space = WorldSpace::indexed(4);
  auto pair = subset(space, {0, 1});
  EXPECT_EQ(pair.size(), 2u);
  EXPECT_FALSE(pair.is_full());
  auto none = subset(space, {});
  EXPECT_TRUE(none.is_empty());
  auto all = subset(space, {0, 1, 2, 3});
  EXPECT_TRUE(all.is_full());
  EXPECT_EQ(all, Event::full(4));
  EXPECT_EQ(code_of([&] { subset(space, {4}); }), Errc::invalid_argument);
}

TEST(EventTest, SetAlgebra) {
  Event a(5, {0, 2, 4});
  Event b(5, {2, 3});
  EXPECT_EQ(a.intersect(b), Event(5, {2}));
  EXPECT_EQ(a.complement(), Event(5, {1, 3}));
  EXPECT_TRUE(Event(5, {2}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_EQ(Event::from_mask(5, 0b10101), a);
  EXPECT_EQ(a.mask(), 0b10101u);
  EXPECT_EQ(Event(5, {4, 0, 0}), Event(5, {0, 4}));
  EXPECT_EQ(a.to_string(WorldSpace::indexed(5)), "{w1,w3,w5}");
}

TEST(ExtRankTest, InfinityExceedsEveryFiniteRank) {
  EXPECT_LT(ExtRank(1'000'000'000), ExtRank::infinity());
  EXPECT_EQ(ExtRank::infinity(), ExtRank::infinity());
  EXPECT_LT(ExtRank(2), ExtRank(3));
  EXPECT_EQ(ExtRank::infinity().to_string(), "inf");
  EXPECT_THROW(ExtRank::infinity().value(), Error);
}

TEST(ProbDistTest, RejectsMassListsNotSummingToOne) {
  auto space = WorldSpace::indexed(2);
  EXPECT_EQ(code_of([&] { ProbDist(space, {Rational::parse("0.6"), Rational::parse("0.3999")}); }),
            Errc::validation);
  EXPECT_EQ(code_of([&] { ProbDist(space, {Rational(1), Rational(0)}); }), Errc::validation);
  EXPECT_EQ(code_of([&] { ProbDist(space, {Rational(1)}); }), Errc::validation);
  ProbDist ok(space, {Rational::parse("0.6"), Rational::parse("0.4")});
  EXPECT_EQ(ok.mass(1), Rational(2, 5));
}

TEST(ProbDistTest, NormalizationIsExplicit) {
  auto p = ProbDist::normalized(WorldSpace::indexed(3), {Rational(1), Rational(2), Rational(1)});
  EXPECT_EQ(p.mass(1), Rational(1, 2));
  EXPECT_EQ(code_of([] { ProbDist::normalized(WorldSpace::indexed(2), {Rational(1), Rational(0)}); }),
            Errc::validation);
  EXPECT_EQ(ProbDist::uniform(WorldSpace::indexed(4)).mass(3), Rational(1, 4));
}

TEST(RankingFunctionTest, RequiresMinimumZero) {
  auto space = WorldSpace::indexed(3);
  EXPECT_EQ(code_of([&] { RankingFunction(space, {1, 2, 3}); }), Errc::validation);
  EXPECT_EQ(RankingFunction::rebaselined(space, {4, 2, 7}), RankingFunction(space, {2, 0, 5}));
  EXPECT_EQ(RankingFunction::from_strata(StrataVector({1, 2, 1})).ranks().size(), 4u);
}

TEST(StrataTest, StrataOf) {
  auto space4 = WorldSpace::indexed(4);
  EXPECT_EQ(strata_of(RankingFunction(space4, {0, 1, 1, 2})), StrataVector({1, 2, 1}));
  EXPECT_EQ(strata_of(RankingFunction::vacuous(WorldSpace::indexed(3))), StrataVector({3}));
  EXPECT_EQ(strata_of(RankingFunction(WorldSpace::indexed(3), {0, 2, 2})), StrataVector({1, 0, 2}));
  EXPECT_FALSE(StrataVector({1, 0, 2}).is_dense());
  EXPECT_EQ(StrataVector({1, 0, 2}).world_count(), 3u);
  EXPECT_THROW(StrataVector({1, 0}), Error);
  EXPECT_THROW(StrataVector(std::vector<std::size_t>{}), Error);
}

TEST(StrataTest, FromStrataInvertsStrataOf) {
  for (auto counts : std::vector<std::vector<std::size_t>>{{1}, {3}, {1, 2, 1}, {2, 0, 0, 1}, {1, 1, 1, 1}}) {
    StrataVector s(counts);
    EXPECT_EQ(strata_of(RankingFunction::from_strata(s)), s);
  }
}

TEST(MassAssignmentTest, AllowsZerosButNotDeficits) {
  auto space = WorldSpace::indexed(3);
  MassAssignment m(space, {Rational(1, 2), Rational(0), Rational(1, 2)});
  EXPECT_EQ(m.support(), Event(3, {0, 2}));
  EXPECT_THROW(MassAssignment(space, {Rational(1, 2), Rational(0), Rational(1, 3)}), Error);
  EXPECT_THROW(MassAssignment(space, {Rational(1), Rational(-1, 2), Rational(1, 2)}), Error);
}

}  // namespace
}  // namespace spohn
