#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "spohn/core.hpp"

namespace spohn::transform {

// 1-based positions i of a non-increasing sequence with q_i > q_{i+1} + ... + q_n.
struct LeapIndexSet {
  std::vector<std::size_t> positions;

  std::size_t size() const { return positions.size(); }
  bool contains(std::size_t position) const {
    return std::binary_search(positions.begin(), positions.end(), position);
  }
};

inline LeapIndexSet leap_indices(std::span<const Rational> q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].sign() <= 0) throw Error(Errc::invalid_argument, "leap indices need positive entries");
    if (i > 0 && q[i - 1] < q[i])
      throw Error(Errc::not_sorted, "sequence increases at position " + std::to_string(i + 1));
  }
  LeapIndexSet leaps;
  Rational tail;
  std::vector<bool> leap(q.size(), false);
  for (std::size_t i = q.size(); i-- > 0;) {
    leap[i] = i + 1 < q.size() && q[i] > tail;
    tail += q[i];
  }
  for (std::size_t i = 0; i < q.size(); ++i)
    if (leap[i]) leaps.positions.push_back(i + 1);
  return leaps;
}

// One pass of T over the worlds in non-increasing mass order.
struct KappaTrace {
  std::vector<std::size_t> order;       // world index at each sorted position
  std::vector<Rational> sorted_masses;  // p_i
  std::vector<Rational> remaining;      // M after subtracting p_i
  std::vector<Rank> sorted_ranks;       // d_i
  LeapIndexSet leaps;
  RankingFunction ranking;
};

// T: sort worlds by non-increasing mass (ties keep index order), walk the
// sequence with a disbelief counter r and remaining mass M, and bump r after
// every world whose mass strictly exceeds what remains.
inline KappaTrace trace_to_kappa(const ProbDist& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.mass(a) > p.mass(b); });

  std::vector<Rational> sorted_masses, remaining;
  std::vector<Rank> sorted_ranks;
  std::vector<Rank> ranks(n);
  LeapIndexSet leaps;
  Rank counter = 0;
  Rational mass_left(1);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& pi = p.mass(order[i]);
    sorted_masses.push_back(pi);
    sorted_ranks.push_back(counter);
    ranks[order[i]] = counter;
    mass_left -= pi;
    remaining.push_back(mass_left);
    if (pi > mass_left) {
      ++counter;
      if (i + 1 < n) leaps.positions.push_back(i + 1);
    }
  }
  return {std::move(order),        std::move(sorted_masses), std::move(remaining),
          std::move(sorted_ranks), std::move(leaps),         RankingFunction(p.space(), std::move(ranks))};
}

inline RankingFunction to_kappa(const ProbDist& p) { return trace_to_kappa(p).ranking; }

inline void require_epsilon(const Rational& eps) {
  if (eps.sign() <= 0 || eps >= Rational(1))
    throw Error(Errc::bad_epsilon, "epsilon must lie in (0,1), got " + eps.to_fraction());
}

// The unique k with eps^(k+1) < mass <= eps^k, for 0 < mass <= 1.
inline Rank epsilon_exponent(const Rational& mass, const Rational& eps) {
  require_epsilon(eps);
  if (mass.sign() <= 0 || mass > Rational(1))
    throw Error(Errc::invalid_argument, "epsilon exponent needs a mass in (0,1]");
  // Largest k with mass <= eps^k: gallop, then bisect.
  Rank holds = 0;
  Rank fails = 1;
  while (mass <= eps.pow(fails)) {
    holds = fails;
    fails *= 2;
  }
  while (fails - holds > 1) {
    Rank mid = holds + (fails - holds) / 2;
    (mass <= eps.pow(mid) ? holds : fails) = mid;
  }
  return holds;
}

// Per-world exponents of the epsilon rule, before any re-baselining.
inline std::vector<Rank> epsilon_exponents(const ProbDist& p, const Rational& eps) {
  require_epsilon(eps);
  std::vector<Rank> ks;
  ks.reserve(p.size());
  for (const auto& m : p.masses()) ks.push_back(epsilon_exponent(m, eps));
  return ks;
}

// The epsilon rule, shifted so that the minimum rank is 0.
inline RankingFunction epsilon_rule(const ProbDist& p, const Rational& eps) {
  return RankingFunction::rebaselined(p.space(), epsilon_exponents(p, eps));
}

// Per-rank unnormalized masses u_0..u_s and the constant Z that normalizes
// sum_i k_i u_i to one.
struct RankWeights {
  std::vector<Rational> unnormalized;
  Rational normalizer;

  Rational mass(Rank rank) const { return unnormalized.at(rank) * normalizer; }
};

namespace detail {

inline Rational normalizer_for(const StrataVector& strata, const std::vector<Rational>& u) {
  Rational total;
  for (Rank i = 0; i <= strata.max_rank(); ++i) total += Rational(strata.count(i)) * u[i];
  return total.reciprocal();
}

inline ProbDist masses_by_rank(const RankingFunction& delta, const RankWeights& weights) {
  std::vector<Rational> masses;
  masses.reserve(delta.size());
  for (auto r : delta.ranks()) masses.push_back(weights.mass(r));
  return ProbDist(delta.space(), std::move(masses));
}

}  // namespace detail

// u_i = 1/(k_0+1) * ... * 1/(k_i+1); empty strata contribute a factor of 1.
inline RankWeights congruent_weights(const StrataVector& strata) {
  std::vector<Rational> u;
  Rational running(1);
  for (Rank i = 0; i <= strata.max_rank(); ++i) {
    running /= Rational(strata.count(i) + 1);
    u.push_back(running);
  }
  Rational z = detail::normalizer_for(strata, u);
  return {std::move(u), std::move(z)};
}

// u_i = (1/(k_max+1))^i.
inline RankWeights exponential_weights(const StrataVector& strata) {
  Rational base(1, strata.max_count() + 1);
  std::vector<Rational> u;
  for (Rank i = 0; i <= strata.max_rank(); ++i) u.push_back(base.pow(i));
  Rational z = detail::normalizer_for(strata, u);
  return {std::move(u), std::move(z)};
}

// S: the congruent disbelief-to-probability transformation.
inline ProbDist to_prob(const RankingFunction& delta) {
  return detail::masses_by_rank(delta, congruent_weights(strata_of(delta)));
}

// T': exponential law in the rank with base 1/(k_max+1).
inline ProbDist to_prob_exponential(const RankingFunction& delta) {
  return detail::masses_by_rank(delta, exponential_weights(strata_of(delta)));
}

// Half-open interval [lo, hi).
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x < hi; }
};

// Range of S(δ)(A) over the events A with δ(A) = rank.
inline Interval probability_bounds(const StrataVector& strata, Rank rank) {
  if (rank > strata.max_rank())
    throw Error(Errc::rank_out_of_range, "rank " + std::to_string(rank) + " exceeds max rank " +
                                             std::to_string(strata.max_rank()));
  auto weights = congruent_weights(strata);
  Rational hi = rank == 0 ? weights.normalizer : weights.mass(rank - 1);
  return {weights.mass(rank), std::move(hi)};
}

struct AcceptanceThreshold {
  Rational unnormalized;  // k_0/(k_0+1)
  Rational normalized;    // k_0/(k_0+1) * Z
};

inline AcceptanceThreshold acceptance_threshold(const StrataVector& strata) {
  std::size_t k0 = strata.count(0);
  Rational raw(k0, k0 + 1);
  return {raw, raw * congruent_weights(strata).normalizer};
}

}  // namespace spohn::transform
