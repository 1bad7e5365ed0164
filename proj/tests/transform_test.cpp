#include "spohn/transform.hpp"

#include "gtest/gtest.h"

namespace spohn::transform {
namespace {

std::vector<Rational> q(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(Rational::parse(x));
  return out;
}

ProbDist dist(std::initializer_list<const char*> xs) { return ProbDist(WorldSpace::indexed(xs.size()), q(xs)); }

RankingFunction ranks(std::vector<Rank> r) {
  auto space = WorldSpace::indexed(r.size());
  return RankingFunction(space, std::move(r));
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::invalid_argument;
}

TEST(LeapIndicesTest, TailSumComparison) {
  EXPECT_EQ(leap_indices(q({"0.5185", "0.2308", "0.1538", "0.0969"})).positions, (std::vector<std::size_t>{1, 3}));
  EXPECT_TRUE(leap_indices(q({"1/4", "1/4", "1/4", "1/4"})).positions.empty());
  EXPECT_EQ(leap_indices(q({"0.6", "0.3", "0.1"})).positions, (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(leap_indices(q({"1"})).positions.empty());
}

TEST(LeapIndicesTest, RejectsIncreasesAndNonPositive) {
  EXPECT_EQ(code_of([] { leap_indices(q({"0.3", "0.6", "0.1"})); }), Errc::not_sorted);
  EXPECT_EQ(code_of([] { leap_indices(q({"0.6", "0.4", "0"})); }), Errc::invalid_argument);
}

TEST(ToKappaTest, TableMasses) {
  auto trace = trace_to_kappa(dist({"0.5185", "0.2308", "0.1538", "0.0969"}));
  EXPECT_EQ(trace.ranking, ranks({0, 1, 1, 2}));
  EXPECT_EQ(trace.remaining, q({"0.4815", "0.2507", "0.0969", "0"}));
  EXPECT_EQ(trace.leaps.positions, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(trace.sorted_ranks, (std::vector<Rank>{0, 1, 1, 2}));
}

TEST(ToKappaTest, SimpleCases) {
  EXPECT_EQ(to_kappa(ProbDist::uniform(WorldSpace::indexed(5))), RankingFunction::vacuous(WorldSpace::indexed(5)));
  auto trace = trace_to_kappa(dist({"0.6", "0.3", "0.1"}));
  EXPECT_EQ(trace.ranking, ranks({0, 1, 2}));
  EXPECT_EQ(trace.remaining, q({"0.4", "0.1", "0"}));
}

TEST(ToKappaTest, UnsortedInputMapsBackToWorlds) {
  EXPECT_EQ(to_kappa(dist({"0.0969", "0.5185", "0.1538", "0.2308"})), ranks({2, 0, 1, 1}));
  // Exact tie with the tail: 1/2 is not > 1/2, so no level is split off.
  EXPECT_EQ(to_kappa(dist({"1/4", "1/2", "1/4"})), ranks({0, 0, 0}));
  EXPECT_EQ(to_kappa(dist({"0.1", "0.6", "0.3"})), ranks({2, 0, 1}));
}

TEST(EpsilonRuleTest, TableColumn) {
  auto p = dist({"0.5185", "0.2308", "0.1538", "0.0969"});
  EXPECT_EQ(epsilon_exponents(p, Rational::parse("0.2")), (std::vector<Rank>{0, 0, 1, 1}));
  EXPECT_EQ(epsilon_rule(p, Rational::parse("0.2")), ranks({0, 0, 1, 1}));
}

TEST(EpsilonRuleTest, Boundaries) {
  auto eps = Rational::parse("0.2");
  EXPECT_EQ(epsilon_exponent(Rational(1), eps), 0u);
  EXPECT_EQ(epsilon_exponent(Rational(1), Rational(1, 1000)), 0u);
  EXPECT_EQ(epsilon_exponent(Rational::parse("0.04"), eps), 2u);
  EXPECT_EQ(epsilon_exponent(Rational::parse("0.0400001"), eps), 1u);
  EXPECT_EQ(epsilon_exponent(Rational::parse("0.008"), eps), 3u);
  EXPECT_EQ(epsilon_exponent(Rational(1, 1) / Rational(2).pow(40), Rational(1, 2)), 40u);
  EXPECT_EQ(epsilon_exponent(Rational(1, 1) / Rational(2).pow(40) + Rational(1, 1) / Rational(2).pow(60), Rational(1, 2)), 39u);
}

TEST(EpsilonRuleTest, RebaselinesAndRejectsBadEpsilon) {
  auto p = dist({"0.5", "0.5"});
  EXPECT_EQ(epsilon_exponents(p, Rational::parse("0.6")), (std::vector<Rank>{1, 1}));
  EXPECT_EQ(epsilon_rule(p, Rational::parse("0.6")), ranks({0, 0}));
  for (const char* bad : {"0", "1", "1.5", "-0.2"})
    EXPECT_EQ(code_of([&] { epsilon_rule(p, Rational::parse(bad)); }), Errc::bad_epsilon) << bad;
}

TEST(ToProbTest, CongruentWeights) {
  auto w = congruent_weights(StrataVector({1, 2, 1}));
  EXPECT_EQ(w.unnormalized, q({"1/2", "1/6", "1/12"}));
  EXPECT_EQ(w.normalizer, Rational(12, 11));
  EXPECT_EQ(w.normalizer.reciprocal().to_decimal(4), "0.9167");
  EXPECT_EQ(to_prob(ranks({0, 1, 1, 2})), dist({"6/11", "2/11", "2/11", "1/11"}));
  EXPECT_EQ(to_prob(ranks({0, 1})), dist({"2/3", "1/3"}));
  EXPECT_EQ(to_prob(RankingFunction::vacuous(WorldSpace::indexed(7))), ProbDist::uniform(WorldSpace::indexed(7)));
}

TEST(ToProbTest, EmptyStrataContributeNothing) {
  EXPECT_EQ(to_prob(ranks({0, 2, 2, 5})), to_prob(ranks({0, 1, 1, 2})));
}

TEST(ToProbExponentialTest, PowersOfTheBase) {
  auto w = exponential_weights(StrataVector({1, 2, 1}));
  EXPECT_EQ(w.unnormalized, q({"1", "1/3", "1/9"}));
  EXPECT_EQ(w.normalizer, Rational(9, 16));
  EXPECT_EQ(to_prob_exponential(ranks({0, 1, 1, 2})), dist({"9/16", "3/16", "3/16", "1/16"}));
  EXPECT_EQ(to_prob_exponential(RankingFunction::vacuous(WorldSpace::indexed(3))),
            ProbDist::uniform(WorldSpace::indexed(3)));
  EXPECT_EQ(to_prob_exponential(ranks({0, 1})), to_prob(ranks({0, 1})));
}

TEST(ProbabilityBoundsTest, HalfOpenIntervals) {
  StrataVector s({1, 2, 1});
  auto i1 = probability_bounds(s, 1);
  EXPECT_EQ(i1.lo, Rational(2, 11));
  EXPECT_EQ(i1.hi, Rational(6, 11));
  auto i0 = probability_bounds(s, 0);
  EXPECT_EQ(i0.lo, Rational(6, 11));
  EXPECT_EQ(i0.hi, Rational(12, 11));
  EXPECT_TRUE(i0.contains(Rational(1)));
  EXPECT_FALSE(i1.contains(Rational(6, 11)));
  EXPECT_TRUE(i1.contains(Rational(2, 11)));
  EXPECT_EQ(probability_bounds(s, 2).lo, Rational(1, 11));
  EXPECT_EQ(code_of([&] { probability_bounds(s, 3); }), Errc::rank_out_of_range);
}

TEST(AcceptanceThresholdTest, ThresholdTable) {
  const char* expected[] = {"0.5000", "0.6667", "0.7500", "0.8000"};
  for (std::size_t k0 = 1; k0 <= 4; ++k0) {
    auto t = acceptance_threshold(StrataVector({k0, 1}));
    EXPECT_EQ(t.unnormalized, Rational(k0, k0 + 1));
    EXPECT_EQ(t.unnormalized.to_decimal(4), expected[k0 - 1]);
  }
  EXPECT_EQ(acceptance_threshold(StrataVector({5})).unnormalized, Rational(5, 6));
  EXPECT_EQ(acceptance_threshold(StrataVector({1, 2, 1})).normalized, Rational(6, 11));
}

}  // namespace
}  // namespace spohn::transform
