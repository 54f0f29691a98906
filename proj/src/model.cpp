#include "riffle/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace riffle {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

constexpr double kTableSumTolerance = 1e-9;

}  // namespace

// ---------------------------------------------------------------------------
// Hierarchy

Hierarchy Hierarchy::single_leaf(std::vector<int> items) {
  Hierarchy h;
  std::sort(items.begin(), items.end());
  h.nodes_.push_back(Node{std::move(items), -1, -1});
  h.validate();
  return h;
}

Hierarchy Hierarchy::single_leaf(int n) {
  std::vector<int> items(n);
  for (int i = 0; i < n; ++i) items[i] = i;
  return single_leaf(std::move(items));
}

Hierarchy Hierarchy::chain(int n) {
  require(n >= 1, "Hierarchy::chain: n must be >= 1");
  Hierarchy h = single_leaf({n - 1});
  for (int i = n - 2; i >= 0; --i) {
    h = merge(single_leaf({i}), h);
  }
  return h;
}

Hierarchy Hierarchy::merge(const Hierarchy& first, const Hierarchy& second) {
  const Hierarchy* a = &first;
  const Hierarchy* b = &second;
  if (b->items(0).front() < a->items(0).front()) std::swap(a, b);

  Hierarchy h;
  std::vector<int> items;
  items.reserve(a->items(0).size() + b->items(0).size());
  std::merge(a->items(0).begin(), a->items(0).end(), b->items(0).begin(),
             b->items(0).end(), std::back_inserter(items));
  const int left = 1;
  const int right = 1 + a->node_count();
  h.nodes_.push_back(Node{std::move(items), left, right});
  for (const Node& n : a->nodes_) {
    h.nodes_.push_back(Node{n.items, n.left < 0 ? -1 : n.left + left,
                            n.right < 0 ? -1 : n.right + left});
  }
  for (const Node& n : b->nodes_) {
    h.nodes_.push_back(Node{n.items, n.left < 0 ? -1 : n.left + right,
                            n.right < 0 ? -1 : n.right + right});
  }
  h.validate();
  return h;
}

void Hierarchy::validate() const {
  require(!nodes_.empty(), "Hierarchy: empty");
  std::vector<bool> seen(nodes_.size(), false);
  auto walk = [&](auto&& self, int idx) -> void {
    require(idx >= 0 && idx < node_count(), "Hierarchy: child index out of range");
    require(!seen[idx], "Hierarchy: node reached twice");
    seen[idx] = true;
    const Node& n = nodes_[idx];
    require(!n.items.empty(), "Hierarchy: node with empty item set");
    require(std::is_sorted(n.items.begin(), n.items.end()) &&
                std::adjacent_find(n.items.begin(), n.items.end()) == n.items.end(),
            "Hierarchy: node items not sorted/distinct");
    if (n.is_leaf()) {
      require(n.right < 0, "Hierarchy: half-leaf node");
      return;
    }
    require(n.right >= 0, "Hierarchy: internal node missing a child");
    const Node& l = nodes_[n.left];
    const Node& r = nodes_[n.right];
    std::vector<int> merged;
    std::merge(l.items.begin(), l.items.end(), r.items.begin(), r.items.end(),
               std::back_inserter(merged));
    require(merged == n.items, "Hierarchy: children do not partition the node");
    require(l.items.front() < r.items.front(),
            "Hierarchy: left child must hold the smallest item");
    self(self, n.left);
    self(self, n.right);
  };
  walk(walk, 0);
  for (bool s : seen) require(s, "Hierarchy: unreachable node");
}

int Hierarchy::leaf_count() const {
  int count = 0;
  for (const Node& n : nodes_) {
    if (n.is_leaf()) ++count;
  }
  return count;
}

Split Hierarchy::split_at(int index) const {
  const Node& n = nodes_[index];
  require(!n.is_leaf(), "Hierarchy::split_at: leaf node");
  return Split(nodes_[n.left].items, nodes_[n.right].items);
}

std::string Hierarchy::fingerprint() const {
  auto walk = [&](auto&& self, int idx) -> std::string {
    const Node& n = nodes_[idx];
    if (n.is_leaf()) {
      std::string s = "{";
      for (std::size_t i = 0; i < n.items.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(n.items[i]);
      }
      return s + "}";
    }
    return "(" + self(self, n.left) + "|" + self(self, n.right) + ")";
  };
  return walk(walk, 0);
}

std::uint64_t Hierarchy::table_size(int index) const {
  const Node& n = nodes_[index];
  if (n.is_leaf()) return factorial(static_cast<int>(n.items.size()));
  return binomial(static_cast<int>(n.items.size()),
                  static_cast<int>(nodes_[n.left].items.size()));
}

std::uint64_t Hierarchy::largest_table_size() const {
  std::uint64_t largest = 0;
  for (int i = 0; i < node_count(); ++i) {
    largest = std::max(largest, table_size(i));
  }
  return largest;
}

bool Hierarchy::operator==(const Hierarchy& other) const {
  return fingerprint() == other.fingerprint();
}

std::uint64_t parameter_count(const Hierarchy& h) {
  std::uint64_t total = 0;
  for (int i = 0; i < h.node_count(); ++i) {
    total += h.table_size(i) - 1;
  }
  return total;
}

// ---------------------------------------------------------------------------
// RiffleModel

RiffleModel::RiffleModel(Hierarchy hierarchy,
                         std::vector<std::vector<double>> tables)
    : hierarchy_(std::move(hierarchy)), tables_(std::move(tables)) {
  require(static_cast<int>(tables_.size()) == hierarchy_.node_count(),
          "RiffleModel: one table per hierarchy node required");
  for (int i = 0; i < hierarchy_.node_count(); ++i) {
    const std::uint64_t want = hierarchy_.table_size(i);
    if (tables_[i].size() != want) {
      throw std::invalid_argument("RiffleModel: table length mismatch at node " +
                                  std::to_string(i));
    }
    double sum = 0.0;
    for (double p : tables_[i]) {
      if (!(p >= 0.0) || !std::isfinite(p)) {
        throw std::invalid_argument("RiffleModel: negative or non-finite entry");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kTableSumTolerance) {
      throw std::invalid_argument("RiffleModel: table at node " +
                                  std::to_string(i) + " sums to " +
                                  std::to_string(sum) + ", expected 1");
    }
  }
}

RiffleModel RiffleModel::uniform(const Hierarchy& h) {
  std::vector<std::vector<double>> tables(h.node_count());
  for (int i = 0; i < h.node_count(); ++i) {
    const auto size = static_cast<std::size_t>(h.table_size(i));
    tables[i].assign(size, 1.0 / static_cast<double>(size));
  }
  return RiffleModel(h, std::move(tables));
}

RiffleModel RiffleModel::random(const Hierarchy& h, Rng& rng,
                                double concentration) {
  require(concentration > 0.0, "RiffleModel::random: concentration must be > 0");
  std::vector<std::vector<double>> tables(h.node_count());
  for (int i = 0; i < h.node_count(); ++i) {
    tables[i].resize(static_cast<std::size_t>(h.table_size(i)));
    sample_dirichlet(rng, concentration, tables[i]);
  }
  return RiffleModel(h, std::move(tables));
}

double RiffleModel::evaluate(const Ranking& sigma) const {
  require(sigma.sorted_items() == hierarchy_.items(0),
          "evaluate: ranking is not over the model's item set");
  auto walk = [&](auto&& self, int idx, const Ranking& rel) -> double {
    if (hierarchy_.is_leaf(idx)) {
      return tables_[idx][ranking_index(rel)];
    }
    const Split split = hierarchy_.split_at(idx);
    const double m = tables_[idx][interleaving_index(interleaving_of(rel, split))];
    if (m == 0.0) return 0.0;
    const double fa =
        self(self, hierarchy_.node(idx).left, relative_ranking(rel, split.a()));
    const double gb =
        self(self, hierarchy_.node(idx).right, relative_ranking(rel, split.b()));
    return m * fa * gb;
  };
  return walk(walk, 0, sigma);
}

double RiffleModel::log_evaluate(const Ranking& sigma) const {
  const double p = evaluate(sigma);
  return p > 0.0 ? std::log(p) : -std::numeric_limits<double>::infinity();
}

Ranking RiffleModel::sample(Rng& rng) const {
  // Leaf rankings first, then interleave upward.
  auto walk = [&](auto&& self, int idx) -> Ranking {
    const auto& items = hierarchy_.items(idx);
    if (hierarchy_.is_leaf(idx)) {
      const std::size_t pick = sample_categorical(rng, tables_[idx]);
      return ranking_from_index(pick, items);
    }
    const Ranking a = self(self, hierarchy_.node(idx).left);
    const Ranking b = self(self, hierarchy_.node(idx).right);
    const std::size_t pick = sample_categorical(rng, tables_[idx]);
    return compose(interleaving_from_index(pick, a.size(), b.size()), a, b);
  };
  return walk(walk, 0);
}

// ---------------------------------------------------------------------------
// Queries

namespace {

constexpr int kExactQueryLimit = 10;

template <typename Fn>
void enumerate_rankings_of(const std::vector<int>& ground, Fn&& fn) {
  std::vector<int> order = ground;  // sorted -> lexicographic first
  do {
    fn(Ranking(order));
  } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace

MarginalEstimate pairwise_marginal(const RiffleModel& model, int item_i,
                                   int item_j, const QueryConfig& cfg) {
  require(item_i != item_j, "pairwise_marginal: items must differ");
  const std::vector<int>& ground = model.hierarchy().items(0);
  require(std::binary_search(ground.begin(), ground.end(), item_i) &&
              std::binary_search(ground.begin(), ground.end(), item_j),
          "pairwise_marginal: unknown item");
  MarginalEstimate out;
  if (model.item_count() <= kExactQueryLimit) {
    double total = 0.0;
    enumerate_rankings_of(ground, [&](const Ranking& sigma) {
      if (sigma.rank_of(item_i) < sigma.rank_of(item_j)) {
        total += model.evaluate(sigma);
      }
    });
    out.value = total;
    return out;
  }
  Rng rng = derive_rng(cfg.seed, 0x7061697277697365ULL);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < cfg.mc_samples; ++s) {
    const Ranking sigma = model.sample(rng);
    if (sigma.rank_of(item_i) < sigma.rank_of(item_j)) ++hits;
  }
  const double p =
      static_cast<double>(hits) / static_cast<double>(cfg.mc_samples);
  out.value = p;
  out.exact = false;
  out.samples = cfg.mc_samples;
  out.std_error = std::sqrt(std::max(p * (1.0 - p), 0.0) /
                            static_cast<double>(cfg.mc_samples));
  return out;
}

FirstPlaceDistribution first_place_distribution(const RiffleModel& model,
                                                const QueryConfig& cfg) {
  const std::vector<int>& ground = model.hierarchy().items(0);
  const int max_item = ground.back();
  FirstPlaceDistribution out;
  out.probabilities.assign(static_cast<std::size_t>(max_item) + 1, 0.0);
  if (model.item_count() <= kExactQueryLimit) {
    enumerate_rankings_of(ground, [&](const Ranking& sigma) {
      out.probabilities[sigma.item_at(0)] += model.evaluate(sigma);
    });
    return out;
  }
  Rng rng = derive_rng(cfg.seed, 0x6669727374706cULL);
  for (std::uint64_t s = 0; s < cfg.mc_samples; ++s) {
    out.probabilities[model.sample(rng).item_at(0)] += 1.0;
  }
  for (double& p : out.probabilities) {
    p /= static_cast<double>(cfg.mc_samples);
  }
  out.exact = false;
  out.samples = cfg.mc_samples;
  return out;
}

}  // namespace riffle
