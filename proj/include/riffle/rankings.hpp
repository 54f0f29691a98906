#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "riffle/combinatorics.hpp"
#include "riffle/errors.hpp"

namespace riffle {

/// Named item catalog. Construction order defines the canonical item index
/// 0..n-1; everything below works on indices, names appear only at the I/O
/// boundary.
class ItemSet {
 public:
  explicit ItemSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of `name`, or -1 when unknown.
  int find(const std::string& name) const;
  /// Index of `name`; throws std::invalid_argument when unknown.
  int index_of(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// A ranking of a set of items: item_at(0) is the most preferred. The item
/// set may be any set of distinct item indices (a subset of the catalog),
/// which is what relative rankings produce.
class Ranking {
 public:
  explicit Ranking(std::vector<int> item_at_rank);

  int size() const { return static_cast<int>(item_at_rank_.size()); }
  int item_at(int rank_position) const { return item_at_rank_[rank_position]; }
  std::span<const int> items() const { return item_at_rank_; }
  /// Ground set in ascending order.
  std::vector<int> sorted_items() const;
  /// 0-based rank position of `item`; throws when absent.
  int rank_of(int item) const;

  static Ranking identity(int n);

  bool operator==(const Ranking&) const = default;

 private:
  std::vector<int> item_at_rank_;
};

enum class Side : std::uint8_t { A = 0, B = 1 };

/// Which side of a binary split occupies each rank. Exactly count_a() ranks
/// carry Side::A.
class Interleaving {
 public:
  explicit Interleaving(std::vector<Side> side_at_rank);

  int size() const { return static_cast<int>(side_at_rank_.size()); }
  Side side_at(int rank_position) const { return side_at_rank_[rank_position]; }
  std::span<const Side> sides() const { return side_at_rank_; }
  int count_a() const { return count_a_; }
  int count_b() const { return size() - count_a_; }

  bool operator==(const Interleaving&) const = default;

 private:
  std::vector<Side> side_at_rank_;
  int count_a_;
};

/// A binary split of an item set. Canonical form: side `a` contains the
/// smallest item index overall, so interleaving symbols are unambiguous.
/// The constructor swaps the sides if needed.
class Split {
 public:
  Split(std::vector<int> first, std::vector<int> second);

  const std::vector<int>& a() const { return a_; }
  const std::vector<int>& b() const { return b_; }
  int size() const { return static_cast<int>(a_.size() + b_.size()); }

 private:
  std::vector<int> a_, b_;  // each sorted ascending
};

/// Ordered partition Omega_1 | ... | Omega_k of an item set; members of an
/// earlier block outrank all members of a later block, ties within a block.
/// Blocks store sorted item indices.
class PartialRanking {
 public:
  explicit PartialRanking(std::vector<std::vector<int>> blocks);

  static PartialRanking trivial(std::vector<int> items);
  static PartialRanking from_ranking(const Ranking& sigma);
  /// First k items of sigma as singleton blocks, remainder (if any) as one
  /// trailing block.
  static PartialRanking top_k(const Ranking& sigma, int k);

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int i) const { return blocks_[i]; }
  /// Block sizes (the type gamma).
  std::vector<int> type() const;
  int item_count() const { return item_count_; }
  std::vector<int> ground_items() const;

  bool is_trivial() const { return blocks_.size() == 1; }
  bool is_full_ranking() const;
  /// Conversion when every block is a singleton.
  Ranking to_ranking() const;

  bool operator==(const PartialRanking&) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
  int item_count_;
};

struct PartialRankingHash {
  std::size_t operator()(const PartialRanking& pr) const;
};

// ---------------------------------------------------------------------------
// Maps between the objects (Defs. of relative ranking / interleaving and
// their inverse).

/// Ordering sigma induces on `subset` (sorted item indices). Throws when the
/// subset is empty or contains items absent from sigma.
Ranking relative_ranking(const Ranking& sigma, std::span<const int> subset);

/// A/B pattern of sigma under `split`; split sides must partition sigma's
/// item set.
Interleaving interleaving_of(const Ranking& sigma, const Split& split);

/// Inverse of the two maps above: riffle sigma_a and sigma_b together
/// according to tau. tau's counts must match the two sizes.
Ranking compose(const Interleaving& tau, const Ranking& sigma_a,
                const Ranking& sigma_b);

// ---------------------------------------------------------------------------
// Canonical dense indexing.
//
// Rankings: Lehmer code / factorial number system over item_at_rank, i.e.
// lexicographic order of the item sequences. Identity -> 0, reversed -> n!-1.
// Interleavings: combinatorial number system, lexicographic with A < B.
// A..AB..B -> 0, B..BA..A -> C(p+q,p)-1.

std::uint64_t ranking_index(const Ranking& sigma);
Ranking ranking_from_index(std::uint64_t index, std::span<const int> items);
Ranking ranking_from_index(std::uint64_t index, int n);

std::uint64_t interleaving_index(const Interleaving& tau);
Interleaving interleaving_from_index(std::uint64_t index, int count_a,
                                     int count_b);

// ---------------------------------------------------------------------------
// Partial-ranking predicates.

/// True iff sigma is a member of pr (every earlier block fully outranks
/// every later block). Both must share one item set.
bool contains(const PartialRanking& pr, const Ranking& sigma);

/// Restriction of pr to `subset`: intersect each block, drop empties.
PartialRanking restrict_to(const PartialRanking& pr,
                           std::span<const int> subset);

/// Interleaving consistency: for each block of pr, the block's rank range in
/// tau must hold exactly |block ∩ A| A-symbols. tau's counts must match the
/// split sizes and pr must cover the same items.
bool is_consistent_interleaving(const Interleaving& tau,
                                const PartialRanking& pr, const Split& split);

namespace detail {
/// True when `needle` (sorted) is a subset of `haystack` (sorted).
bool sorted_subset(std::span<const int> needle, std::span<const int> haystack);
std::size_t intersection_size(std::span<const int> lhs,
                              std::span<const int> rhs);
}  // namespace detail

}  // namespace riffle
