#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "spohn/core.hpp"
#include "spohn/kappa.hpp"
#include "spohn/prob.hpp"
#include "spohn/transform.hpp"

// Brute-force verifiers. Event values are recomputed here from the raw
// per-world masses and ranks, never through prob_of_event/rank_of_event, so
// the oracle stays independent of the code paths it checks.
namespace spohn::oracle {

inline constexpr std::size_t kDefaultMaxWorlds = 12;

struct Limits {
  std::size_t max_worlds = kDefaultMaxWorlds;
  std::size_t max_recorded = 64;  // violations kept verbatim; all are counted
  std::size_t workers = 1;
};

struct Violation {
  Event first;
  Event second;
  Rational p_first;
  Rational p_second;
  ExtRank rank_first;
  ExtRank rank_second;
};

struct CongruenceReport {
  bool holds = true;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  std::size_t pairs_checked = 0;

  bool has_violation(const Event& first, const Event& second) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.first == first && v.second == second; });
  }
};

namespace detail {

inline void require_enumerable(std::size_t n, std::size_t limit) {
  constexpr std::size_t kHardCap = 24;
  if (n > limit || n > kHardCap)
    throw Error(Errc::space_too_large, std::to_string(n) + " worlds exceeds the enumeration guard of " +
                                           std::to_string(std::min(limit, kHardCap)));
}

// p(A) and δ(A) for every non-empty bitmask A, plus an ordinal key with
// key[a] < key[b] iff p(a) < p(b).
struct EventTable {
  std::size_t n = 0;
  std::vector<Rational> prob;
  std::vector<Rank> rank;
  std::vector<std::uint32_t> key;

  EventTable(std::span<const Rational> masses, std::span<const Rank> ranks) : n(masses.size()) {
    const std::size_t count = std::size_t{1} << n;
    prob.resize(count);
    rank.resize(count);
    for (std::size_t mask = 1; mask < count; ++mask) {
      Rational total;
      Rank low = ~Rank{0};
      for (std::size_t w = 0; w < n; ++w) {
        if (mask >> w & 1u) {
          total += masses[w];
          low = std::min(low, ranks[w]);
        }
      }
      prob[mask] = std::move(total);
      rank[mask] = low;
    }
    std::vector<std::uint32_t> by_prob(count - 1);
    std::iota(by_prob.begin(), by_prob.end(), std::uint32_t{1});
    std::sort(by_prob.begin(), by_prob.end(),
              [&](std::uint32_t a, std::uint32_t b) { return prob[a] < prob[b]; });
    key.assign(count, 0);
    std::uint32_t level = 0;
    for (std::size_t i = 0; i < by_prob.size(); ++i) {
      if (i > 0 && prob[by_prob[i - 1]] < prob[by_prob[i]]) ++level;
      key[by_prob[i]] = level;
    }
  }

  std::size_t events() const { return (std::size_t{1} << n) - 1; }
};

// Scans all ordered pairs of non-empty events, optionally splitting the outer
// loop across threads; partial reports are concatenated in partition order.
template <class IsViolation>
CongruenceReport scan_pairs(const EventTable& table, const Limits& limits, IsViolation is_violation) {
  const std::size_t last = table.events();
  const std::size_t recorded = std::max<std::size_t>(limits.max_recorded, 1);
  auto scan = [&](std::size_t from, std::size_t to, CongruenceReport& out) {
    for (std::size_t a = from; a < to; ++a) {
      for (std::size_t b = 1; b <= last; ++b) {
        if (!is_violation(a, b)) continue;
        ++out.violation_count;
        if (out.violations.size() < recorded)
          out.violations.push_back({Event::from_mask(table.n, a), Event::from_mask(table.n, b), table.prob[a],
                                    table.prob[b], table.rank[a], table.rank[b]});
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(limits.workers, 1, last);
  std::vector<CongruenceReport> parts(workers);
  if (workers == 1) {
    scan(1, last + 1, parts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (last + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
      std::size_t from = 1 + t * chunk;
      std::size_t to = std::min(last + 1, from + chunk);
      pool.emplace_back([&, from, to, t] { if (from < to) scan(from, to, parts[t]); });
    }
    for (auto& th : pool) th.join();
  }

  CongruenceReport report;
  for (auto& part : parts) {
    report.violation_count += part.violation_count;
    for (auto& v : part.violations)
      if (report.violations.size() < recorded) report.violations.push_back(std::move(v));
  }
  report.holds = report.violation_count == 0;
  report.pairs_checked = last * last;
  return report;
}

}  // namespace detail

// Congruence I: p(A) >= p(B) must imply δ(A) <= δ(B).
inline CongruenceReport check_congruence_I(const ProbDist& p, const RankingFunction& delta,
                                           const Limits& limits = {}) {
  if (!(p.space() == delta.space())) throw Error(Errc::invalid_argument, "p and delta over different spaces");
  detail::require_enumerable(p.size(), limits.max_worlds);
  detail::EventTable table(p.masses(), delta.ranks());
  return detail::scan_pairs(table, limits, [&](std::size_t a, std::size_t b) {
    return table.key[a] >= table.key[b] && table.rank[a] > table.rank[b];
  });
}

// Congruence II: δ(A) < δ(B) must imply p(A) > p(B).
inline CongruenceReport check_congruence_II(const RankingFunction& delta, const ProbDist& p,
                                            const Limits& limits = {}) {
  if (!(p.space() == delta.space())) throw Error(Errc::invalid_argument, "p and delta over different spaces");
  detail::require_enumerable(p.size(), limits.max_worlds);
  detail::EventTable table(p.masses(), delta.ranks());
  return detail::scan_pairs(table, limits, [&](std::size_t a, std::size_t b) {
    return table.rank[a] < table.rank[b] && table.key[a] <= table.key[b];
  });
}

// Number of distinct world ranks.
inline std::size_t coarseness_levels(const RankingFunction& delta) {
  std::set<Rank> levels(delta.ranks().begin(), delta.ranks().end());
  return levels.size();
}

enum class Revision { conditioning, imaging };

inline const char* to_string(Revision mode) {
  return mode == Revision::conditioning ? "conditioning" : "imaging";
}

struct Theorem3Report {
  bool holds = false;
  RankingFunction left;   // densify(δ(·|A))
  RankingFunction right;  // T(revised S(δ))
  std::vector<std::size_t> origin;
  std::string diagnostic;
};

namespace detail {

inline std::string ranks_to_string(const RankingFunction& delta) {
  std::string out = "(";
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(delta.rank(i));
  }
  return out + ")";
}

}  // namespace detail

// Both paths of the commuting square on evidence A, compared world by world.
// In imaging mode the imaged distribution is renormalized onto A before T,
// since T needs strictly positive masses.
inline Theorem3Report check_theorem3(const RankingFunction& delta, const Event& evidence, Revision mode) {
  if (evidence.is_empty()) throw Error(Errc::empty_evidence, "theorem 3 needs non-empty evidence");
  auto conditioned = kappa::condition(delta, evidence);
  RankingFunction left = kappa::densify(conditioned.function);

  ProbDist s = transform::to_prob(delta);
  RankingFunction right = [&] {
    if (mode == Revision::conditioning) return transform::to_kappa(prob::condition(s, evidence).function);
    auto imaged = prob::image(s, delta, evidence);
    return transform::to_kappa(prob::restrict_to(imaged, evidence).function);
  }();

  Theorem3Report report{left.ranks().size() == right.ranks().size() &&
                            std::equal(left.ranks().begin(), left.ranks().end(), right.ranks().begin()),
                        left, right, conditioned.origin, {}};
  std::ostringstream diag;
  diag << to_string(mode) << " on " << evidence.to_string(delta.space()) << ": D(delta(.|A)) = "
       << detail::ranks_to_string(left) << ", T(S(delta)(.|A)) = " << detail::ranks_to_string(right) << ": "
       << (report.holds ? "equal" : "DIFFERENT");
  if (mode == Revision::imaging)
    diag << " [imaged mass renormalized onto A; excluded mass split evenly over nearest-rank members]";
  report.diagnostic = diag.str();
  return report;
}

inline constexpr std::size_t kMaxStrataWorlds = 12;

struct StrataOptions {
  bool include_non_dense = false;
  Rank max_rank = 0;  // bound on s for non-dense vectors; 0 means n
};

// Dense vectors are the compositions of n (2^(n-1) of them). Non-dense ones
// keep k_0 >= 1 and k_s >= 1 so that each is the summary of some ranking
// function; interior strata may be empty.
inline void for_each_strata_vector(std::size_t n, const StrataOptions& options,
                                   const std::function<void(const StrataVector&)>& visit) {
  if (n == 0) throw Error(Errc::invalid_argument, "n must be positive");
  detail::require_enumerable(n, kMaxStrataWorlds);
  const Rank bound = options.max_rank == 0 ? n : options.max_rank;
  std::vector<std::size_t> parts;
  std::function<void(std::size_t)> grow = [&](std::size_t left) {
    if (left == 0) {
      visit(StrataVector(parts));
      return;
    }
    if (parts.size() > bound) return;  // next part would be stratum s > bound
    const std::size_t lowest = (options.include_non_dense && !parts.empty()) ? 0 : 1;
    for (std::size_t k = left;; --k) {
      parts.push_back(k);
      grow(left - k);
      parts.pop_back();
      if (k == lowest) break;
    }
  };
  grow(n);
}

inline std::vector<StrataVector> enumerate_strata_vectors(std::size_t n, const StrataOptions& options = {}) {
  std::vector<StrataVector> out;
  for_each_strata_vector(n, options, [&](const StrataVector& s) { out.push_back(s); });
  return out;
}

inline constexpr std::size_t kMaxLabeledWorlds = 8;

// Every dense ranking function on worlds w1..wn (ordered set partitions).
inline void for_each_dense_ranking(std::size_t n, const std::function<void(const RankingFunction&)>& visit) {
  if (n == 0) throw Error(Errc::invalid_argument, "n must be positive");
  detail::require_enumerable(n, kMaxLabeledWorlds);
  auto space = WorldSpace::indexed(n);
  std::vector<Rank> ranks(n, 0);
  std::vector<std::size_t> used(n, 0);
  for (;;) {
    std::fill(used.begin(), used.end(), 0);
    Rank top = 0;
    for (auto r : ranks) {
      ++used[r];
      top = std::max(top, r);
    }
    if (std::all_of(used.begin(), used.begin() + static_cast<std::ptrdiff_t>(top + 1),
                    [](std::size_t k) { return k > 0; }))
      visit(RankingFunction(space, ranks));
    std::size_t i = 0;
    while (i < n && ++ranks[i] == n) ranks[i++] = 0;
    if (i == n) break;
  }
}

// Outcome of a property verifier: the number of cases examined and the first
// counterexample, if any.
struct PropertyCheck {
  bool holds = true;
  std::size_t cases = 0;
  std::string counterexample;

  void fail(std::string what) {
    if (holds) counterexample = std::move(what);
    holds = false;
  }

  PropertyCheck& merge(const PropertyCheck& other) {
    cases += other.cases;
    if (!other.holds) fail(other.counterexample);
    return *this;
  }
};

// Distinct levels of T(p) equal the leap count of the sorted masses plus one.
inline PropertyCheck check_least_coarse(const ProbDist& p) {
  std::vector<Rational> sorted(p.masses().begin(), p.masses().end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::size_t leaps = 0;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    Rational tail;
    for (std::size_t j = i + 1; j < sorted.size(); ++j) tail += sorted[j];
    if (sorted[i] > tail) ++leaps;
  }
  PropertyCheck check;
  check.cases = 1;
  auto levels = coarseness_levels(transform::to_kappa(p));
  if (levels != leaps + 1)
    check.fail("levels " + std::to_string(levels) + " != leaps " + std::to_string(leaps) + " + 1");
  return check;
}

// For p = S(δ): every world of rank i outweighs all worlds ranked above i together.
inline PropertyCheck check_lemma2(const RankingFunction& delta) {
  ProbDist p = transform::to_prob(delta);
  PropertyCheck check;
  for (std::size_t w = 0; w < delta.size(); ++w) {
    Rational above;
    for (std::size_t v = 0; v < delta.size(); ++v)
      if (delta.rank(v) > delta.rank(w)) above += p.mass(v);
    ++check.cases;
    if (!(p.mass(w) > above))
      check.fail("world " + delta.space().label(w) + ": " + p.mass(w).to_fraction() + " <= tail " +
                 above.to_fraction());
  }
  return check;
}

// T(S(δ)) = D(δ); for dense δ this is the exact round trip.
inline PropertyCheck check_round_trip(const RankingFunction& delta) {
  PropertyCheck check;
  check.cases = 1;
  auto back = transform::to_kappa(transform::to_prob(delta));
  auto expected = kappa::densify(delta);
  if (!(back == expected))
    check.fail("T(S(delta)) = " + detail::ranks_to_string(back) + ", expected " + detail::ranks_to_string(expected));
  return check;
}

// Inserting empty strata below any rank leaves S(δ) unchanged world by world.
inline PropertyCheck check_zero_strata_invariance(const RankingFunction& delta) {
  PropertyCheck check;
  ProbDist base = transform::to_prob(delta);
  auto compare = [&](std::vector<Rank> stretched, const std::string& how) {
    ++check.cases;
    ProbDist moved = transform::to_prob(RankingFunction(delta.space(), std::move(stretched)));
    if (!(moved == base)) check.fail(how + " changed S(delta)");
  };
  for (Rank below = 1; below <= delta.max_rank(); ++below) {
    for (Rank gap : {Rank{1}, Rank{3}}) {
      std::vector<Rank> ranks(delta.ranks().begin(), delta.ranks().end());
      for (auto& r : ranks)
        if (r >= below) r += gap;
      compare(std::move(ranks), std::to_string(gap) + " empty strata below rank " + std::to_string(below));
    }
  }
  std::vector<Rank> tripled(delta.ranks().begin(), delta.ranks().end());
  for (auto& r : tripled) r *= 3;
  compare(std::move(tripled), "tripling every rank");
  return check;
}

// Every non-empty event's S(δ)-probability lies in the interval of its rank.
inline PropertyCheck check_probability_bounds(const RankingFunction& delta, std::size_t max_worlds = kDefaultMaxWorlds) {
  detail::require_enumerable(delta.size(), max_worlds);
  ProbDist p = transform::to_prob(delta);
  auto strata = strata_of(delta);
  std::vector<transform::Interval> bounds;
  for (Rank r = 0; r <= strata.max_rank(); ++r) bounds.push_back(transform::probability_bounds(strata, r));
  detail::EventTable table(p.masses(), delta.ranks());
  PropertyCheck check;
  for (std::size_t mask = 1; mask <= table.events(); ++mask) {
    ++check.cases;
    const auto& interval = bounds[table.rank[mask]];
    if (!interval.contains(table.prob[mask]))
      check.fail(Event::from_mask(table.n, mask).to_string(delta.space()) + " has p = " +
                 table.prob[mask].to_fraction() + " outside [" + interval.lo.to_fraction() + ", " +
                 interval.hi.to_fraction() + ")");
  }
  return check;
}

// For δ(w1) > δ(w2): S ratio >= T' ratio, with equality exactly when every
// stratum j in (δ(w2), δ(w1)] is as full as the fullest one.
inline PropertyCheck check_skewness(const RankingFunction& delta) {
  ProbDist s = transform::to_prob(delta);
  ProbDist t = transform::to_prob_exponential(delta);
  auto strata = strata_of(delta);
  PropertyCheck check;
  for (std::size_t hi = 0; hi < delta.size(); ++hi) {
    for (std::size_t lo = 0; lo < delta.size(); ++lo) {
      if (delta.rank(hi) <= delta.rank(lo)) continue;
      ++check.cases;
      Rational s_ratio = s.mass(hi) / s.mass(lo);
      Rational t_ratio = t.mass(hi) / t.mass(lo);
      bool below_max = false;
      for (Rank j = delta.rank(lo) + 1; j <= delta.rank(hi); ++j)
        below_max = below_max || strata.count(j) < strata.max_count();
      std::string pair = delta.space().label(hi) + "/" + delta.space().label(lo);
      if (s_ratio < t_ratio) check.fail(pair + ": S ratio below T' ratio");
      else if (below_max && s_ratio == t_ratio) check.fail(pair + ": expected strict inequality");
      else if (!below_max && s_ratio != t_ratio) check.fail(pair + ": expected equal ratios");
    }
  }
  return check;
}

// Under p = S(δ): A is plainly believed iff p(A) >= the normalized threshold,
// iff p(A) > the unnormalized threshold k_0/(k_0+1).
inline PropertyCheck check_acceptance_threshold(const RankingFunction& delta, std::size_t max_worlds = kDefaultMaxWorlds) {
  detail::require_enumerable(delta.size(), max_worlds);
  ProbDist p = transform::to_prob(delta);
  auto threshold = transform::acceptance_threshold(strata_of(delta));
  std::uint64_t core = 0;
  for (std::size_t w = 0; w < delta.size(); ++w)
    if (delta.rank(w) == 0) core |= std::uint64_t{1} << w;
  detail::EventTable table(p.masses(), delta.ranks());
  PropertyCheck check;
  for (std::size_t mask = 1; mask <= table.events(); ++mask) {
    ++check.cases;
    bool believed = (mask & core) == core;
    const Rational& pa = table.prob[mask];
    if (believed != (pa >= threshold.normalized) || believed != (pa > threshold.unnormalized))
      check.fail(Event::from_mask(table.n, mask).to_string(delta.space()) + " (p = " + pa.to_fraction() +
                 ", believed = " + (believed ? "yes" : "no") + ") on the wrong side of the threshold");
  }
  return check;
}

// plain_beliefs(δ) is exactly the superset filter of Ω₀, and is closed under
// intersection and superset.
inline PropertyCheck check_deductive_closure(const RankingFunction& delta, std::size_t max_worlds = kDefaultMaxWorlds) {
  detail::require_enumerable(delta.size(), max_worlds);
  const std::size_t n = delta.size();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<char> believed(all + 1, 0);
  for (const auto& e : kappa::plain_beliefs(delta, max_worlds)) believed[e.mask()] = 1;

  std::uint64_t core = 0;
  for (std::size_t w = 0; w < n; ++w)
    if (delta.rank(w) == 0) core |= std::uint64_t{1} << w;

  PropertyCheck check;
  for (std::uint64_t a = 0; a <= all; ++a) {
    ++check.cases;
    if (static_cast<bool>(believed[a]) != ((a & core) == core))
      check.fail(Event::from_mask(n, a).to_string(delta.space()) + " disagrees with the superset filter of Omega_0");
    if (!believed[a]) continue;
    for (std::uint64_t b = 0; b <= all; ++b) {
      if (believed[b] && !believed[a & b])
        check.fail("not closed under intersection at " + Event::from_mask(n, a & b).to_string(delta.space()));
      if ((a & b) == a && !believed[b])
        check.fail("not closed under superset at " + Event::from_mask(n, b).to_string(delta.space()));
    }
  }
  return check;
}

// Random positive rational distribution over w1..wn. Mixes draw styles so
// that ties, leaps and exact tail-sum boundaries all occur.
inline ProbDist random_distribution(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw Error(Errc::invalid_argument, "n must be positive");
  std::uniform_int_distribution<int> style_pick(0, 4);
  std::vector<std::uint64_t> weights(n);
  auto draw = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  switch (style_pick(rng)) {
    case 0:  // small integers: many ties
      for (auto& w : weights) w = draw(1, 6);
      break;
    case 1:  // wide integers
      for (auto& w : weights) w = draw(1, 1'000'000);
      break;
    case 2:  // powers of two with jitter: frequent leaps
      for (auto& w : weights) w = (std::uint64_t{1} << draw(0, 2 * n)) + draw(0, 2);
      break;
    case 3: {  // built from the tail: each weight equals, exceeds or trails the sum below it
      std::uint64_t tail = 0;
      for (std::size_t i = n; i-- > 0;) {
        std::uint64_t w = tail == 0 ? draw(1, 4) : tail + draw(0, 2) - 1;
        if (w == 0) w = 1;
        weights[i] = w;
        tail += w;
      }
      break;
    }
    default:  // decimal-looking masses over a power of ten
      for (auto& w : weights) w = draw(1, 9999);
      break;
  }
  std::shuffle(weights.begin(), weights.end(), rng);
  std::vector<Rational> masses;
  masses.reserve(n);
  for (auto w : weights) masses.emplace_back(w);
  return ProbDist::normalized(WorldSpace::indexed(n), std::move(masses));
}

}  // namespace spohn::oracle
