#pragma once

#include <algorithm>
#include <vector>

#include "spohn/core.hpp"

namespace spohn::prob {

namespace detail {

template <class Masses>
Rational sum_over(const Masses& dist, const Event& event) {
  if (event.space_size() != dist.size()) throw Error(Errc::invalid_argument, "event over a different space");
  Rational total;
  for (auto w : event.members()) total += dist.mass(w);
  return total;
}

inline Rank distance(Rank a, Rank b) { return a > b ? a - b : b - a; }

}  // namespace detail

// p(A) = sum of the member masses.
inline Rational prob_of_event(const ProbDist& p, const Event& event) { return detail::sum_over(p, event); }
inline Rational prob_of_event(const MassAssignment& p, const Event& event) { return detail::sum_over(p, event); }

// Bayesian conditioning onto the contracted space A.
inline Contracted<ProbDist> condition(const ProbDist& p, const Event& evidence) {
  if (evidence.space_size() != p.size()) throw Error(Errc::invalid_argument, "event over a different space");
  if (evidence.is_empty()) throw Error(Errc::empty_evidence, "cannot condition on the empty event");
  Rational total = prob_of_event(p, evidence);
  std::vector<Rational> masses;
  masses.reserve(evidence.size());
  for (auto w : evidence.members()) masses.push_back(p.mass(w) / total);
  return {ProbDist(p.space().restrict_to(evidence), std::move(masses)),
          std::vector<std::size_t>(evidence.members().begin(), evidence.members().end())};
}

// p(B|A) = p(A ∩ B) / p(A).
inline Rational conditional_prob(const ProbDist& p, const Event& target, const Event& evidence) {
  if (evidence.is_empty()) throw Error(Errc::empty_evidence, "cannot condition on the empty event");
  return prob_of_event(p, target.intersect(evidence)) / prob_of_event(p, evidence);
}

// Lewis imaging on A with closeness |δ(ω) - δ(ω')|: the mass of every world
// outside A moves to the members of A at minimal rank distance from it, split
// evenly among them. Worlds outside A end with mass 0.
inline MassAssignment image(const ProbDist& p, const RankingFunction& delta, const Event& evidence) {
  if (!(p.space() == delta.space())) throw Error(Errc::invalid_argument, "p and delta over different spaces");
  if (evidence.space_size() != p.size()) throw Error(Errc::invalid_argument, "event over a different space");
  if (evidence.is_empty()) throw Error(Errc::empty_evidence, "cannot image on the empty event");

  std::vector<Rational> masses(p.size());
  for (auto w : evidence.members()) masses[w] = p.mass(w);

  std::vector<std::size_t> nearest;
  for (std::size_t w = 0; w < p.size(); ++w) {
    if (evidence.contains(w)) continue;
    Rank best = detail::distance(delta.rank(w), delta.rank(evidence.members().front()));
    for (auto a : evidence.members()) best = std::min(best, detail::distance(delta.rank(w), delta.rank(a)));
    nearest.clear();
    for (auto a : evidence.members())
      if (detail::distance(delta.rank(w), delta.rank(a)) == best) nearest.push_back(a);
    Rational share = p.mass(w) / Rational(nearest.size());
    for (auto a : nearest) masses[a] += share;
  }
  return MassAssignment(p.space(), std::move(masses));
}

// Renormalizes the part of `m` on `onto` into a strictly positive
// distribution over the contracted space. Every member must carry mass.
inline Contracted<ProbDist> restrict_to(const MassAssignment& m, const Event& onto) {
  if (onto.is_empty()) throw Error(Errc::empty_evidence, "cannot restrict to the empty event");
  Rational total = prob_of_event(m, onto);
  std::vector<Rational> masses;
  masses.reserve(onto.size());
  for (auto w : onto.members()) masses.push_back(m.mass(w) / total);
  return {ProbDist(m.space().restrict_to(onto), std::move(masses)),
          std::vector<std::size_t>(onto.members().begin(), onto.members().end())};
}

}  // namespace spohn::prob
