#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "spohn/error.hpp"
#include "spohn/rational.hpp"

namespace spohn {

using Rank = std::uint64_t;

class Event;

// Finite, ordered, labeled set of possible worlds. Copies share the label
// storage; the labels never change after construction.
class WorldSpace {
 public:
  explicit WorldSpace(std::vector<std::string> labels) {
    if (labels.empty()) throw Error(Errc::validation, "world space must contain at least one world");
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw Error(Errc::validation, "duplicate world label '" + l + "'");
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  }

  // Worlds labeled w1..wn.
  static WorldSpace indexed(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
    return WorldSpace(std::move(labels));
  }

  std::size_t size() const { return labels_->size(); }
  const std::string& label(std::size_t i) const { return labels_->at(i); }
  std::span<const std::string> labels() const { return *labels_; }

  std::optional<std::size_t> index_of(std::string_view label) const {
    auto it = std::find(labels_->begin(), labels_->end(), label);
    if (it == labels_->end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_->begin());
  }

  // The contracted space made of the members of `event`, in index order.
  inline WorldSpace restrict_to(const Event& event) const;

  friend bool operator==(const WorldSpace& a, const WorldSpace& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// A subset of a world space, held as sorted distinct 0-based indices.
class Event {
 public:
  Event(std::size_t space_size, std::vector<std::size_t> members)
      : space_size_(space_size), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= space_size_)
      throw Error(Errc::invalid_argument, "event member " + std::to_string(members_.back()) +
                                              " outside a space of " + std::to_string(space_size_) +
                                              " worlds");
  }

  static Event empty(std::size_t n) { return Event(n, {}); }

  static Event full(std::size_t n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return Event(n, std::move(all));
  }

  static Event singleton(std::size_t n, std::size_t world) { return Event(n, {world}); }

  // Bit i of `mask` selects world i; requires n <= 64.
  static Event from_mask(std::size_t n, std::uint64_t mask) {
    if (n > 64) throw Error(Errc::invalid_argument, "bitmask events need n <= 64");
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) members.push_back(i);
    if (n < 64 && (mask >> n) != 0) throw Error(Errc::invalid_argument, "mask has bits beyond n");
    return Event(n, std::move(members));
  }

  std::size_t space_size() const { return space_size_; }
  std::size_t size() const { return members_.size(); }
  bool is_empty() const { return members_.empty(); }
  bool is_full() const { return members_.size() == space_size_; }
  std::span<const std::size_t> members() const { return members_; }

  bool contains(std::size_t world) const {
    return std::binary_search(members_.begin(), members_.end(), world);
  }

  Event complement() const {
    std::vector<std::size_t> rest;
    rest.reserve(space_size_ - members_.size());
    for (std::size_t i = 0; i < space_size_; ++i)
      if (!contains(i)) rest.push_back(i);
    return Event(space_size_, std::move(rest));
  }

  Event intersect(const Event& other) const {
    require_same_space(other);
    std::vector<std::size_t> common;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(common));
    return Event(space_size_, std::move(common));
  }

  bool is_subset_of(const Event& other) const {
    require_same_space(other);
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }

  std::uint64_t mask() const {
    if (space_size_ > 64) throw Error(Errc::invalid_argument, "bitmask events need n <= 64");
    std::uint64_t m = 0;
    for (auto i : members_) m |= std::uint64_t{1} << i;
    return m;
  }

  std::string to_string(const WorldSpace& space) const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) out += ",";
      out += space.label(members_[i]);
    }
    return out + "}";
  }

  friend bool operator==(const Event&, const Event&) = default;

 private:
  void require_same_space(const Event& other) const {
    if (other.space_size_ != space_size_)
      throw Error(Errc::invalid_argument, "events over different world spaces");
  }

  std::size_t space_size_;
  std::vector<std::size_t> members_;
};

inline WorldSpace WorldSpace::restrict_to(const Event& event) const {
  if (event.space_size() != size()) throw Error(Errc::invalid_argument, "event over a different space");
  if (event.is_empty()) throw Error(Errc::empty_evidence, "cannot contract to the empty event");
  std::vector<std::string> kept;
  kept.reserve(event.size());
  for (auto i : event.members()) kept.push_back(label(i));
  return WorldSpace(std::move(kept));
}

// Event from 0-based world indices of `space`.
inline Event subset(const WorldSpace& space, std::vector<std::size_t> members) {
  return Event(space.size(), std::move(members));
}

// Event from world labels of `space`.
inline Event subset_by_labels(const WorldSpace& space, std::span<const std::string> labels) {
  std::vector<std::size_t> members;
  for (const auto& l : labels) {
    auto idx = space.index_of(l);
    if (!idx) throw Error(Errc::validation, "unknown world '" + l + "'");
    members.push_back(*idx);
  }
  return Event(space.size(), std::move(members));
}

// Finite rank or the INFINITY sentinel, which exceeds every finite rank.
class ExtRank {
 public:
  constexpr ExtRank(Rank value) : value_(value), infinite_(false) {}  // NOLINT

  static constexpr ExtRank infinity() { return ExtRank(); }

  constexpr bool is_finite() const { return !infinite_; }

  Rank value() const {
    if (infinite_) throw Error(Errc::invalid_argument, "value() of an infinite rank");
    return value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend constexpr bool operator==(const ExtRank&, const ExtRank&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtRank& a, const ExtRank& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr ExtRank() : value_(0), infinite_(true) {}

  Rank value_;
  bool infinite_;
};

// Strictly positive exact masses summing to exactly one.
class ProbDist {
 public:
  ProbDist(WorldSpace space, std::vector<Rational> masses)
      : space_(std::move(space)), masses_(std::move(masses)) {
    if (masses_.size() != space_.size())
      throw Error(Errc::validation, "expected " + std::to_string(space_.size()) + " masses, got " +
                                        std::to_string(masses_.size()));
    Rational total;
    for (std::size_t i = 0; i < masses_.size(); ++i) {
      if (masses_[i].sign() <= 0)
        throw Error(Errc::validation, "world '" + space_.label(i) + "' has non-positive mass " +
                                          masses_[i].to_fraction());
      total += masses_[i];
    }
    if (total != Rational(1))
      throw Error(Errc::validation, "masses sum to " + total.to_fraction() + ", not 1");
  }

  // Divides positive weights by their sum. Never applied implicitly.
  static ProbDist normalized(WorldSpace space, std::vector<Rational> weights) {
    Rational total;
    for (const auto& w : weights) {
      if (w.sign() <= 0) throw Error(Errc::validation, "weights must be strictly positive");
      total += w;
    }
    if (total.is_zero()) throw Error(Errc::validation, "no weights given");
    for (auto& w : weights) w /= total;
    return ProbDist(std::move(space), std::move(weights));
  }

  static ProbDist uniform(WorldSpace space) {
    std::vector<Rational> masses(space.size(), Rational(1, space.size()));
    return ProbDist(std::move(space), std::move(masses));
  }

  const WorldSpace& space() const { return space_; }
  std::size_t size() const { return masses_.size(); }
  const Rational& mass(std::size_t world) const { return masses_.at(world); }
  std::span<const Rational> masses() const { return masses_; }

  friend bool operator==(const ProbDist&, const ProbDist&) = default;

 private:
  WorldSpace space_;
  std::vector<Rational> masses_;
};

// Non-negative masses summing to one; the support may be a proper subset.
// Produced by imaging, which empties the worlds excluded by the evidence.
class MassAssignment {
 public:
  MassAssignment(WorldSpace space, std::vector<Rational> masses)
      : space_(std::move(space)), masses_(std::move(masses)) {
    if (masses_.size() != space_.size()) throw Error(Errc::validation, "mass count mismatch");
    Rational total;
    for (const auto& m : masses_) {
      if (m.sign() < 0) throw Error(Errc::validation, "negative mass");
      total += m;
    }
    if (total != Rational(1))
      throw Error(Errc::validation, "masses sum to " + total.to_fraction() + ", not 1");
  }

  explicit MassAssignment(const ProbDist& p)
      : space_(p.space()), masses_(p.masses().begin(), p.masses().end()) {}

  const WorldSpace& space() const { return space_; }
  std::size_t size() const { return masses_.size(); }
  const Rational& mass(std::size_t world) const { return masses_.at(world); }
  std::span<const Rational> masses() const { return masses_; }

  Event support() const {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < masses_.size(); ++i)
      if (masses_[i].sign() > 0) members.push_back(i);
    return Event(masses_.size(), std::move(members));
  }

  friend bool operator==(const MassAssignment&, const MassAssignment&) = default;

 private:
  WorldSpace space_;
  std::vector<Rational> masses_;
};

// Occupancy counts (k_0, ..., k_s) of the rank levels of a ranking function.
class StrataVector {
 public:
  explicit StrataVector(std::vector<std::size_t> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw Error(Errc::invalid_argument, "strata vector must be non-empty");
    if (counts_.back() == 0) throw Error(Errc::invalid_argument, "top stratum k_s must be non-empty");
  }

  std::span<const std::size_t> counts() const { return counts_; }
  std::size_t count(Rank rank) const { return rank < counts_.size() ? counts_[rank] : 0; }
  Rank max_rank() const { return counts_.size() - 1; }

  std::size_t world_count() const {
    std::size_t n = 0;
    for (auto k : counts_) n += k;
    return n;
  }

  std::size_t max_count() const { return *std::max_element(counts_.begin(), counts_.end()); }

  bool is_dense() const { return std::find(counts_.begin(), counts_.end(), 0) == counts_.end(); }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(counts_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const StrataVector&, const StrataVector&) = default;

 private:
  std::vector<std::size_t> counts_;
};

// Disbelief (ranking) function: non-negative integer per world, minimum 0.
class RankingFunction {
 public:
  RankingFunction(WorldSpace space, std::vector<Rank> ranks)
      : space_(std::move(space)), ranks_(std::move(ranks)) {
    if (ranks_.size() != space_.size())
      throw Error(Errc::validation, "expected " + std::to_string(space_.size()) + " ranks, got " +
                                        std::to_string(ranks_.size()));
    if (*std::min_element(ranks_.begin(), ranks_.end()) != 0)
      throw Error(Errc::validation, "minimum rank must be 0");
  }

  // Shifts the ranks down so that their minimum becomes 0.
  static RankingFunction rebaselined(WorldSpace space, std::vector<Rank> ranks) {
    if (ranks.empty()) throw Error(Errc::validation, "no ranks given");
    Rank low = *std::min_element(ranks.begin(), ranks.end());
    for (auto& r : ranks) r -= low;
    return RankingFunction(std::move(space), std::move(ranks));
  }

  static RankingFunction vacuous(WorldSpace space) {
    std::vector<Rank> zeros(space.size(), 0);
    return RankingFunction(std::move(space), std::move(zeros));
  }

  // Canonical arrangement: worlds w1..wn filled stratum by stratum.
  static RankingFunction from_strata(const StrataVector& strata) {
    std::vector<Rank> ranks;
    for (Rank r = 0; r <= strata.max_rank(); ++r) ranks.resize(ranks.size() + strata.count(r), r);
    auto space = WorldSpace::indexed(ranks.size());
    return RankingFunction(std::move(space), std::move(ranks));
  }

  const WorldSpace& space() const { return space_; }
  std::size_t size() const { return ranks_.size(); }
  Rank rank(std::size_t world) const { return ranks_.at(world); }
  std::span<const Rank> ranks() const { return ranks_; }
  Rank max_rank() const { return *std::max_element(ranks_.begin(), ranks_.end()); }

  friend bool operator==(const RankingFunction&, const RankingFunction&) = default;

 private:
  WorldSpace space_;
  std::vector<Rank> ranks_;
};

// A function on a contracted space together with, for each of its worlds,
// the index of that world in the original space.
template <class Function>
struct Contracted {
  Function function;
  std::vector<std::size_t> origin;
};

inline StrataVector strata_of(const RankingFunction& delta) {
  constexpr Rank kMaxStrata = Rank{1} << 24;
  if (delta.max_rank() >= kMaxStrata)
    throw Error(Errc::rank_out_of_range, "max rank " + std::to_string(delta.max_rank()) +
                                             " too large for a strata vector; densify first");
  std::vector<std::size_t> counts(delta.max_rank() + 1, 0);
  for (auto r : delta.ranks()) ++counts[r];
  return StrataVector(std::move(counts));
}

}  // namespace spohn
