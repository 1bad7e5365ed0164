#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "spohn/core.hpp"

namespace spohn::kappa {

// δ(A) = min over the members of A; INFINITY for the empty event.
inline ExtRank rank_of_event(const RankingFunction& delta, const Event& event) {
  if (event.space_size() != delta.size()) throw Error(Errc::invalid_argument, "event over a different space");
  if (event.is_empty()) return ExtRank::infinity();
  Rank low = delta.rank(event.members().front());
  for (auto w : event.members()) low = std::min(low, delta.rank(w));
  return low;
}

// δ(·|A): ranks shifted down by δ(A) on the contracted space A.
inline Contracted<RankingFunction> condition(const RankingFunction& delta, const Event& evidence) {
  if (evidence.space_size() != delta.size()) throw Error(Errc::invalid_argument, "event over a different space");
  if (evidence.is_empty()) throw Error(Errc::empty_evidence, "cannot condition on the empty event");
  Rank base = rank_of_event(delta, evidence).value();
  std::vector<Rank> ranks;
  ranks.reserve(evidence.size());
  for (auto w : evidence.members()) ranks.push_back(delta.rank(w) - base);
  return {RankingFunction(delta.space().restrict_to(evidence), std::move(ranks)),
          std::vector<std::size_t>(evidence.members().begin(), evidence.members().end())};
}

// δ(B|A) = min over A ∩ B of δ(ω|A); INFINITY when A ∩ B is empty.
inline ExtRank conditional_rank(const RankingFunction& delta, const Event& target, const Event& evidence) {
  auto base = rank_of_event(delta, evidence);
  if (!base.is_finite()) throw Error(Errc::empty_evidence, "cannot condition on the empty event");
  auto joint = rank_of_event(delta, target.intersect(evidence));
  if (!joint.is_finite()) return joint;
  return joint.value() - base.value();
}

// Signed belief degree, extended with +INF for Ω and -INF for ∅.
class BeliefValue {
 public:
  enum class Kind { minus_infinity, finite, plus_infinity };

  static BeliefValue finite(std::int64_t degree) { return BeliefValue(Kind::finite, degree); }
  static BeliefValue plus_infinity() { return BeliefValue(Kind::plus_infinity, 0); }
  static BeliefValue minus_infinity() { return BeliefValue(Kind::minus_infinity, 0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  std::int64_t degree() const {
    if (kind_ != Kind::finite) throw Error(Errc::invalid_argument, "degree() of an infinite belief");
    return degree_;
  }

  // Plain belief: β(A) > 0, including β(Ω) = +INF.
  bool is_believed() const {
    return kind_ == Kind::plus_infinity || (kind_ == Kind::finite && degree_ > 0);
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::minus_infinity: return "-inf";
      case Kind::plus_infinity: return "+inf";
      case Kind::finite: break;
    }
    return std::to_string(degree_);
  }

  friend bool operator==(const BeliefValue&, const BeliefValue&) = default;
  friend std::strong_ordering operator<=>(const BeliefValue& a, const BeliefValue& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return a.degree_ <=> b.degree_;
  }

 private:
  BeliefValue(Kind kind, std::int64_t degree) : kind_(kind), degree_(degree) {}

  Kind kind_;
  std::int64_t degree_;
};

// β(A) = -δ(A) if δ(A) > 0, δ(¬A) otherwise.
inline BeliefValue belief(const RankingFunction& delta, const Event& event) {
  auto disbelief = rank_of_event(delta, event);
  if (!disbelief.is_finite()) return BeliefValue::minus_infinity();
  if (disbelief.value() > 0) return BeliefValue::finite(-static_cast<std::int64_t>(disbelief.value()));
  auto against = rank_of_event(delta, event.complement());
  if (!against.is_finite()) return BeliefValue::plus_infinity();
  return BeliefValue::finite(static_cast<std::int64_t>(against.value()));
}

// Ω₀, the worlds of rank 0.
inline Event core_stratum(const RankingFunction& delta) {
  std::vector<std::size_t> members;
  for (std::size_t w = 0; w < delta.size(); ++w)
    if (delta.rank(w) == 0) members.push_back(w);
  return Event(delta.size(), std::move(members));
}

inline constexpr std::size_t kPlainBeliefLimit = 20;

// Every event with β(A) > 0, in increasing bitmask order.
inline std::vector<Event> plain_beliefs(const RankingFunction& delta,
                                        std::size_t max_worlds = kPlainBeliefLimit) {
  const std::size_t n = delta.size();
  if (n > max_worlds || n > 63)
    throw Error(Errc::space_too_large, std::to_string(n) + " worlds exceeds the enumeration guard of " +
                                           std::to_string(std::min<std::size_t>(max_worlds, 63)));
  std::vector<Event> believed;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto event = Event::from_mask(n, mask);
    if (belief(delta, event).is_believed()) believed.push_back(std::move(event));
  }
  return believed;
}

// True iff no stratum between 0 and the max rank is empty.
inline bool is_dense(const RankingFunction& delta) {
  std::vector<Rank> levels(delta.ranks().begin(), delta.ranks().end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels.back() + 1 == levels.size();
}

// Order-preserving removal of empty strata: the achieved rank values become
// exactly 0, 1, ..., m.
inline RankingFunction densify(const RankingFunction& delta) {
  std::vector<Rank> levels(delta.ranks().begin(), delta.ranks().end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<Rank> ranks;
  ranks.reserve(delta.size());
  for (auto r : delta.ranks())
    ranks.push_back(static_cast<Rank>(std::lower_bound(levels.begin(), levels.end(), r) - levels.begin()));
  return RankingFunction(delta.space(), std::move(ranks));
}

}  // namespace spohn::kappa
