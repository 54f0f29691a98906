#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riffle/rankings.hpp"
#include "riffle/rng.hpp"

namespace riffle {

/// Binary tree over the item set. Node 0 is the root; children of an
/// internal node nontrivially partition its item set, and the left child
/// always holds the node's smallest item index (the canonical A side).
class Hierarchy {
 public:
  struct Node {
    std::vector<int> items;  // sorted ascending
    int left = -1;
    int right = -1;
    bool is_leaf() const { return left < 0; }
  };

  static Hierarchy single_leaf(std::vector<int> items);
  static Hierarchy single_leaf(int n);
  /// One item split off per level: {0} | {1} | ... | {n-1}.
  static Hierarchy chain(int n);
  /// New root over two hierarchies with disjoint item sets.
  static Hierarchy merge(const Hierarchy& first, const Hierarchy& second);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int index) const { return nodes_[index]; }
  const std::vector<int>& items(int index) const { return nodes_[index].items; }
  bool is_leaf(int index) const { return nodes_[index].is_leaf(); }
  int item_count() const { return static_cast<int>(nodes_[0].items.size()); }
  int leaf_count() const;
  int internal_count() const { return node_count() - leaf_count(); }

  Split split_at(int index) const;

  /// Canonical textual form, e.g. "(({0,1}|{2,3})|{4,5})". Equal hierarchies
  /// have equal fingerprints.
  std::string fingerprint() const;

  /// Table length at a node: C(p+q,p) for internal nodes, |L|! for leaves.
  std::uint64_t table_size(int index) const;
  std::uint64_t largest_table_size() const;

  bool operator==(const Hierarchy& other) const;

 private:
  Hierarchy() = default;
  void validate() const;

  std::vector<Node> nodes_;  // pre-order: node, A subtree, B subtree
};

/// Free parameters after normalization: one per table entry minus one per
/// table.
std::uint64_t parameter_count(const Hierarchy& h);

/// Hierarchical riffle-independent distribution: an interleaving table per
/// internal node, a relative-ranking table per leaf. Immutable once built.
class RiffleModel {
 public:
  RiffleModel(Hierarchy hierarchy, std::vector<std::vector<double>> tables);

  static RiffleModel uniform(const Hierarchy& h);
  static RiffleModel random(const Hierarchy& h, Rng& rng, double concentration);

  const Hierarchy& hierarchy() const { return hierarchy_; }
  int item_count() const { return hierarchy_.item_count(); }
  const std::vector<double>& table(int node) const { return tables_[node]; }
  const std::vector<std::vector<double>>& tables() const { return tables_; }

  /// h(sigma); sigma must rank exactly the model's item set.
  double evaluate(const Ranking& sigma) const;
  /// log h(sigma); -inf when any factor is zero.
  double log_evaluate(const Ranking& sigma) const;

  Ranking sample(Rng& rng) const;

 private:
  Hierarchy hierarchy_;
  std::vector<std::vector<double>> tables_;
};

/// Exact/Monte-Carlo query result. `std_error` is 0 on the exact path.
struct MarginalEstimate {
  double value = 0.0;
  bool exact = true;
  std::uint64_t samples = 0;
  double std_error = 0.0;
};

struct QueryConfig {
  std::uint64_t mc_samples = 100000;
  std::uint64_t seed = 0;
};

/// P(item_i ranked before item_j). Exact by enumeration for n <= 10, seeded
/// Monte Carlo above.
MarginalEstimate pairwise_marginal(const RiffleModel& model, int item_i,
                                   int item_j, const QueryConfig& cfg = {});

struct FirstPlaceDistribution {
  std::vector<double> probabilities;  // indexed by item
  bool exact = true;
  std::uint64_t samples = 0;
};

/// P(item ranked first) for every item. Exact for n <= 10, Monte Carlo above.
FirstPlaceDistribution first_place_distribution(const RiffleModel& model,
                                                const QueryConfig& cfg = {});

/// Calls fn(sigma) for every ranking of 0..n-1 in ranking_index order.
template <typename Fn>
void for_each_ranking(int n, Fn&& fn) {
  const std::uint64_t total = factorial(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    fn(ranking_from_index(idx, n));
  }
}

}  // namespace riffle
