#include "riffle/rankings.hpp"

#include <algorithm>
#include <stdexcept>

namespace riffle {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

bool is_sorted_distinct(std::span<const int> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] >= v[i]) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// ItemSet

ItemSet::ItemSet(std::vector<std::string> names) : names_(std::move(names)) {
  require(!names_.empty(), "ItemSet: need at least one item");
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    require(!names_[i].empty(), "ItemSet: empty item name");
    auto [_, inserted] = index_.emplace(names_[i], i);
    require(inserted, "ItemSet: duplicate item name");
  }
}

int ItemSet::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int ItemSet::index_of(const std::string& name) const {
  int i = find(name);
  if (i < 0) throw std::invalid_argument("unknown item: " + name);
  return i;
}

// ---------------------------------------------------------------------------
// Ranking

Ranking::Ranking(std::vector<int> item_at_rank)
    : item_at_rank_(std::move(item_at_rank)) {
  require(!item_at_rank_.empty(), "Ranking: empty");
  std::vector<int> sorted = item_at_rank_;
  std::sort(sorted.begin(), sorted.end());
  require(sorted.front() >= 0, "Ranking: negative item index");
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "Ranking: duplicate item");
}

std::vector<int> Ranking::sorted_items() const {
  std::vector<int> sorted = item_at_rank_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

int Ranking::rank_of(int item) const {
  for (int r = 0; r < size(); ++r) {
    if (item_at_rank_[r] == item) return r;
  }
  throw std::invalid_argument("Ranking::rank_of: item not present");
}

Ranking Ranking::identity(int n) {
  require(n >= 1, "Ranking::identity: n must be >= 1");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return Ranking(std::move(order));
}

// ---------------------------------------------------------------------------
// Interleaving

Interleaving::Interleaving(std::vector<Side> side_at_rank)
    : side_at_rank_(std::move(side_at_rank)), count_a_(0) {
  require(!side_at_rank_.empty(), "Interleaving: empty");
  for (Side s : side_at_rank_) {
    if (s == Side::A) ++count_a_;
  }
}

// ---------------------------------------------------------------------------
// Split

Split::Split(std::vector<int> first, std::vector<int> second)
    : a_(std::move(first)), b_(std::move(second)) {
  require(!a_.empty() && !b_.empty(), "Split: both sides must be nonempty");
  std::sort(a_.begin(), a_.end());
  std::sort(b_.begin(), b_.end());
  require(is_sorted_distinct(a_) && is_sorted_distinct(b_),
          "Split: duplicate items within a side");
  require(detail::intersection_size(a_, b_) == 0, "Split: sides overlap");
  if (b_.front() < a_.front()) std::swap(a_, b_);
}

// ---------------------------------------------------------------------------
// PartialRanking

PartialRanking::PartialRanking(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)), item_count_(0) {
  require(!blocks_.empty(), "PartialRanking: no blocks");
  std::vector<int> all;
  for (auto& block : blocks_) {
    require(!block.empty(), "PartialRanking: empty block");
    std::sort(block.begin(), block.end());
    require(is_sorted_distinct(block), "PartialRanking: duplicate in block");
    all.insert(all.end(), block.begin(), block.end());
    item_count_ += static_cast<int>(block.size());
  }
  std::sort(all.begin(), all.end());
  require(all.front() >= 0, "PartialRanking: negative item index");
  require(std::adjacent_find(all.begin(), all.end()) == all.end(),
          "PartialRanking: blocks overlap");
}

PartialRanking PartialRanking::trivial(std::vector<int> items) {
  return PartialRanking({std::move(items)});
}

PartialRanking PartialRanking::from_ranking(const Ranking& sigma) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(sigma.size());
  for (int r = 0; r < sigma.size(); ++r) blocks.push_back({sigma.item_at(r)});
  return PartialRanking(std::move(blocks));
}

PartialRanking PartialRanking::top_k(const Ranking& sigma, int k) {
  require(k >= 1 && k <= sigma.size(), "top_k: k out of range");
  std::vector<std::vector<int>> blocks;
  // k = n-1 pins the last item too, so the result is the full ranking.
  const int singles = (k >= sigma.size() - 1) ? sigma.size() : k;
  for (int r = 0; r < singles; ++r) blocks.push_back({sigma.item_at(r)});
  if (singles < sigma.size()) {
    std::vector<int> rest;
    for (int r = singles; r < sigma.size(); ++r) rest.push_back(sigma.item_at(r));
    blocks.push_back(std::move(rest));
  }
  return PartialRanking(std::move(blocks));
}

std::vector<int> PartialRanking::type() const {
  std::vector<int> gamma;
  gamma.reserve(blocks_.size());
  for (const auto& block : blocks_) gamma.push_back(static_cast<int>(block.size()));
  return gamma;
}

std::vector<int> PartialRanking::ground_items() const {
  std::vector<int> all;
  all.reserve(item_count_);
  for (const auto& block : blocks_) all.insert(all.end(), block.begin(), block.end());
  std::sort(all.begin(), all.end());
  return all;
}

bool PartialRanking::is_full_ranking() const {
  for (const auto& block : blocks_) {
    if (block.size() != 1) return false;
  }
  return true;
}

Ranking PartialRanking::to_ranking() const {
  require(is_full_ranking(), "to_ranking: blocks are not all singletons");
  std::vector<int> order;
  order.reserve(blocks_.size());
  for (const auto& block : blocks_) order.push_back(block.front());
  return Ranking(std::move(order));
}

std::size_t PartialRankingHash::operator()(const PartialRanking& pr) const {
  // FNV-1a over items with a block separator sentinel.
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  for (const auto& block : pr.blocks()) {
    for (int item : block) mix(static_cast<std::size_t>(item) + 1);
    mix(0);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Maps

namespace detail {

bool sorted_subset(std::span<const int> needle, std::span<const int> haystack) {
  std::size_t j = 0;
  for (int x : needle) {
    while (j < haystack.size() && haystack[j] < x) ++j;
    if (j == haystack.size() || haystack[j] != x) return false;
    ++j;
  }
  return true;
}

std::size_t intersection_size(std::span<const int> lhs,
                              std::span<const int> rhs) {
  std::size_t count = 0, i = 0, j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (lhs[i] < rhs[j]) {
      ++i;
    } else if (rhs[j] < lhs[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace detail

Ranking relative_ranking(const Ranking& sigma, std::span<const int> subset) {
  require(!subset.empty(), "relative_ranking: empty subset");
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "relative_ranking: duplicate items in subset");
  std::vector<int> kept;
  kept.reserve(sorted.size());
  for (int r = 0; r < sigma.size(); ++r) {
    int item = sigma.item_at(r);
    if (std::binary_search(sorted.begin(), sorted.end(), item)) {
      kept.push_back(item);
    }
  }
  require(kept.size() == sorted.size(),
          "relative_ranking: subset contains items absent from the ranking");
  return Ranking(std::move(kept));
}

Interleaving interleaving_of(const Ranking& sigma, const Split& split) {
  require(split.size() == sigma.size(),
          "interleaving_of: split does not partition the ranking's items");
  std::vector<Side> sides;
  sides.reserve(sigma.size());
  int seen_a = 0;
  for (int r = 0; r < sigma.size(); ++r) {
    int item = sigma.item_at(r);
    if (std::binary_search(split.a().begin(), split.a().end(), item)) {
      sides.push_back(Side::A);
      ++seen_a;
    } else if (std::binary_search(split.b().begin(), split.b().end(), item)) {
      sides.push_back(Side::B);
    } else {
      throw std::invalid_argument(
          "interleaving_of: ranking item missing from both split sides");
    }
  }
  require(seen_a == static_cast<int>(split.a().size()),
          "interleaving_of: split does not partition the ranking's items");
  return Interleaving(std::move(sides));
}

Ranking compose(const Interleaving& tau, const Ranking& sigma_a,
                const Ranking& sigma_b) {
  require(tau.count_a() == sigma_a.size() && tau.count_b() == sigma_b.size(),
          "compose: interleaving counts do not match the side rankings");
  std::vector<int> order;
  order.reserve(tau.size());
  int next_a = 0, next_b = 0;
  for (int r = 0; r < tau.size(); ++r) {
    order.push_back(tau.side_at(r) == Side::A ? sigma_a.item_at(next_a++)
                                              : sigma_b.item_at(next_b++));
  }
  return Ranking(std::move(order));  // ctor rejects overlapping side sets
}

// ---------------------------------------------------------------------------
// Indexing

std::uint64_t ranking_index(const Ranking& sigma) {
  const int n = sigma.size();
  if (n > kMaxFactorialItems) {
    throw capacity_error("ranking_index: more than 20 items");
  }
  std::uint64_t index = 0;
  std::uint64_t place = factorial(n - 1);
  for (int i = 0; i < n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j) {
      if (sigma.item_at(j) < sigma.item_at(i)) ++smaller_later;
    }
    index += static_cast<std::uint64_t>(smaller_later) * place;
    if (i + 1 < n) place /= static_cast<std::uint64_t>(n - 1 - i);
  }
  return index;
}

Ranking ranking_from_index(std::uint64_t index, std::span<const int> items) {
  const int n = static_cast<int>(items.size());
  if (n > kMaxFactorialItems) {
    throw capacity_error("ranking_from_index: more than 20 items");
  }
  require(n >= 1, "ranking_from_index: empty item list");
  std::vector<int> pool(items.begin(), items.end());
  std::sort(pool.begin(), pool.end());
  require(std::adjacent_find(pool.begin(), pool.end()) == pool.end(),
          "ranking_from_index: duplicate items");
  if (index >= factorial(n)) {
    throw std::invalid_argument("ranking_from_index: index out of range");
  }
  std::vector<int> order;
  order.reserve(pool.size());
  std::uint64_t place = factorial(n - 1);
  for (int i = 0; i < n; ++i) {
    const auto digit = static_cast<std::size_t>(index / place);
    index %= place;
    order.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    if (i + 1 < n) place /= static_cast<std::uint64_t>(n - 1 - i);
  }
  return Ranking(std::move(order));
}

Ranking ranking_from_index(std::uint64_t index, int n) {
  require(n >= 1, "ranking_from_index: n must be >= 1");
  std::vector<int> items(n);
  for (int i = 0; i < n; ++i) items[i] = i;
  return ranking_from_index(index, items);
}

std::uint64_t interleaving_index(const Interleaving& tau) {
  int a = tau.count_a();
  int b = tau.count_b();
  binomial(a + b, a);  // capacity probe: index space must fit 64 bits
  std::uint64_t index = 0;
  for (int r = 0; r < tau.size(); ++r) {
    if (tau.side_at(r) == Side::A) {
      --a;
    } else {
      if (a > 0) index += binomial(a + b - 1, a - 1);
      --b;
    }
  }
  return index;
}

Interleaving interleaving_from_index(std::uint64_t index, int count_a,
                                     int count_b) {
  require(count_a >= 0 && count_b >= 0 && count_a + count_b >= 1,
          "interleaving_from_index: bad counts");
  if (index >= binomial(count_a + count_b, count_a)) {
    throw std::invalid_argument("interleaving_from_index: index out of range");
  }
  std::vector<Side> sides;
  sides.reserve(static_cast<std::size_t>(count_a + count_b));
  int a = count_a, b = count_b;
  while (a + b > 0) {
    if (a == 0) {
      sides.push_back(Side::B);
      --b;
    } else if (b == 0) {
      sides.push_back(Side::A);
      --a;
    } else {
      const std::uint64_t with_a = binomial(a + b - 1, a - 1);
      if (index < with_a) {
        sides.push_back(Side::A);
        --a;
      } else {
        index -= with_a;
        sides.push_back(Side::B);
        --b;
      }
    }
  }
  return Interleaving(std::move(sides));
}

// ---------------------------------------------------------------------------
// Predicates

bool contains(const PartialRanking& pr, const Ranking& sigma) {
  require(pr.item_count() == sigma.size(),
          "contains: partial ranking and ranking cover different item sets");
  // sigma is a member iff each block occupies its own contiguous rank range.
  int offset = 0;
  for (const auto& block : pr.blocks()) {
    std::vector<int> window(sigma.items().begin() + offset,
                            sigma.items().begin() + offset +
                                static_cast<std::ptrdiff_t>(block.size()));
    std::sort(window.begin(), window.end());
    if (!std::equal(window.begin(), window.end(), block.begin(), block.end())) {
      return false;
    }
    offset += static_cast<int>(block.size());
  }
  return true;
}

PartialRanking restrict_to(const PartialRanking& pr,
                           std::span<const int> subset) {
  require(!subset.empty(), "restrict_to: empty subset");
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> blocks;
  for (const auto& block : pr.blocks()) {
    std::vector<int> kept;
    for (int item : block) {
      if (std::binary_search(sorted.begin(), sorted.end(), item)) {
        kept.push_back(item);
      }
    }
    if (!kept.empty()) blocks.push_back(std::move(kept));
  }
  require(!blocks.empty(), "restrict_to: subset disjoint from the partial ranking");
  return PartialRanking(std::move(blocks));
}

bool is_consistent_interleaving(const Interleaving& tau,
                                const PartialRanking& pr, const Split& split) {
  require(tau.count_a() == static_cast<int>(split.a().size()) &&
              tau.count_b() == static_cast<int>(split.b().size()),
          "is_consistent_interleaving: counts do not match the split");
  require(pr.item_count() == tau.size(),
          "is_consistent_interleaving: partial ranking covers a different set");
  int offset = 0;
  for (const auto& block : pr.blocks()) {
    const auto need_a =
        static_cast<int>(detail::intersection_size(block, split.a()));
    int got_a = 0;
    for (std::size_t r = 0; r < block.size(); ++r) {
      if (tau.side_at(offset + static_cast<int>(r)) == Side::A) ++got_a;
    }
    if (got_a != need_a) return false;
    offset += static_cast<int>(block.size());
  }
  return true;
}

}  // namespace riffle
