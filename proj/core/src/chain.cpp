#include "statecut/chain.hpp"

#include <algorithm>
#include <numeric>

namespace statecut {

namespace {

constexpr int kSplitRetries = 100;
constexpr int kSeedTreeRetries = 1000;
constexpr int kSeedRestarts = 50;

// Uniform spanning tree of the subgraph induced by `members` via Wilson's
// loop-erased random walks. Returns parent links rooted at members[0].
// parent[v] is a node index, -1 for the root; only entries for members are
// meaningful.
std::vector<int> wilson_tree(const GraphInstance& g, const std::vector<int>& members,
                             const std::vector<char>& in_region, Rng& rng) {
  std::vector<int> parent(g.nodes.size(), -2);  // -2: not yet in tree
  parent[members[0]] = -1;
  std::vector<int> path;
  for (int start : members) {
    if (parent[start] != -2) continue;
    path.assign(1, start);
    int v = start;
    while (parent[v] == -2) {
      const auto& nbrs = g.adjacency[v];
      int w = -1;
      do {
        w = nbrs[rng.below(nbrs.size())].first;
      } while (!in_region[w]);
      // loop erasure: if w already on the path, truncate back to it
      auto it = std::find(path.begin(), path.end(), w);
      if (it != path.end()) {
        path.erase(it + 1, path.end());
      } else {
        path.push_back(w);
      }
      v = w;
    }
    for (size_t k = 0; k + 1 < path.size(); ++k) parent[path[k]] = path[k + 1];
  }
  return parent;
}

// Subtree populations of a parent-link tree, computed by processing nodes in
// decreasing depth.
std::vector<std::int64_t> subtree_populations(const GraphInstance& g,
                                              const std::vector<int>& members,
                                              const std::vector<int>& parent) {
  std::vector<std::int64_t> pop(g.nodes.size(), 0);
  std::vector<int> depth(g.nodes.size(), 0);
  for (int v : members) {
    int d = 0;
    for (int u = v; parent[u] >= 0; u = parent[u]) ++d;
    depth[v] = d;
  }
  std::vector<int> order = members;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return depth[a] > depth[b]; });
  for (int v : order) {
    pop[v] += g.nodes[v].population;
    if (parent[v] >= 0) pop[parent[v]] += pop[v];
  }
  return pop;
}

// Population-feasible split of `members` by removing one tree edge. Bounds
// are inclusive on both sides. Picks uniformly among feasible edges; empty
// result when none.
std::vector<int> try_tree_split(const GraphInstance& g, const std::vector<int>& members,
                                const std::vector<int>& parent,
                                std::int64_t lo_below, std::int64_t hi_below,
                                std::int64_t lo_above, std::int64_t hi_above,
                                std::int64_t total, Rng& rng) {
  std::vector<std::int64_t> pop = subtree_populations(g, members, parent);
  std::vector<int> feasible;
  for (int v : members) {
    if (parent[v] < 0) continue;
    std::int64_t below = pop[v];
    std::int64_t above = total - below;
    if (below >= lo_below && below <= hi_below && above >= lo_above && above <= hi_above)
      feasible.push_back(v);
  }
  if (feasible.empty()) return {};
  int cut = feasible[rng.below(feasible.size())];
  // nodes in the subtree under `cut`, via parent chains
  std::vector<int> below_set;
  for (int v : members) {
    int u = v;
    while (u >= 0 && u != cut) u = parent[u];
    if (u == cut) below_set.push_back(v);
  }
  return below_set;
}

}  // namespace

Districting recom_step(const GraphInstance& g, const Districting& d, Rng& rng) {
  std::vector<int> cut_edges;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (d.assignment[g.edges[e].a] != d.assignment[g.edges[e].b])
      cut_edges.push_back(static_cast<int>(e));
  }
  if (cut_edges.empty()) return d;  // single district; nothing to recombine

  const GraphEdge& edge = g.edges[cut_edges[rng.below(cut_edges.size())]];
  int label_a = d.assignment[edge.a];
  int label_b = d.assignment[edge.b];

  std::vector<int> members;
  std::vector<char> in_region(g.nodes.size(), 0);
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    if (d.assignment[v] == label_a || d.assignment[v] == label_b) {
      members.push_back(static_cast<int>(v));
      in_region[v] = 1;
    }
  }
  std::int64_t merged_pop = 0;
  for (int v : members) merged_pop += g.nodes[v].population;
  auto [lo, hi] = g.population_bounds();

  for (int attempt = 0; attempt < kSplitRetries; ++attempt) {
    std::vector<int> parent = wilson_tree(g, members, in_region, rng);
    std::vector<int> below =
        try_tree_split(g, members, parent, lo, hi, lo, hi, merged_pop, rng);
    if (below.empty()) continue;
    Districting next = d;
    // deterministic relabel: label_a goes to the side holding the smallest node
    std::vector<char> in_below(g.nodes.size(), 0);
    for (int v : below) in_below[v] = 1;
    int smallest = members.front();
    for (int v : members) {
      if (v < smallest) smallest = v;
    }
    int below_label = in_below[smallest] ? label_a : label_b;
    int above_label = below_label == label_a ? label_b : label_a;
    for (int v : members) next.assignment[v] = in_below[v] ? below_label : above_label;
    return next;
  }
  return d;  // self-loop
}

namespace {

// Recursively split `members` into `parts` districts, writing labels
// [first_label, first_label + parts).
bool bisect(const GraphInstance& g, std::vector<int> members, int parts, int first_label,
            std::int64_t lo, std::int64_t hi, Districting& out, Rng& rng) {
  if (parts == 1) {
    for (int v : members) out.assignment[v] = first_label;
    return true;
  }
  int parts_below = parts / 2;
  int parts_above = parts - parts_below;
  std::int64_t total = 0;
  for (int v : members) total += g.nodes[v].population;

  std::vector<char> in_region(g.nodes.size(), 0);
  for (int v : members) in_region[v] = 1;

  for (int attempt = 0; attempt < kSeedTreeRetries; ++attempt) {
    std::vector<int> parent = wilson_tree(g, members, in_region, rng);
    std::vector<int> below =
        try_tree_split(g, members, parent, parts_below * lo, parts_below * hi,
                       parts_above * lo, parts_above * hi, total, rng);
    if (below.empty()) continue;
    std::vector<char> in_below(g.nodes.size(), 0);
    for (int v : below) in_below[v] = 1;
    std::vector<int> above;
    for (int v : members) {
      if (!in_below[v]) above.push_back(v);
    }
    if (bisect(g, below, parts_below, first_label, lo, hi, out, rng) &&
        bisect(g, above, parts_above, first_label + parts_below, lo, hi, out, rng))
      return true;
  }
  return false;
}

}  // namespace

Districting seed_districting(const GraphInstance& g, Rng& rng) {
  auto [lo, hi] = g.population_bounds();
  std::vector<int> all(g.nodes.size());
  std::iota(all.begin(), all.end(), 0);
  for (int restart = 0; restart < kSeedRestarts; ++restart) {
    Districting d;
    d.assignment.assign(g.nodes.size(), -1);
    if (bisect(g, all, g.m, 0, lo, hi, d, rng) && is_valid_districting(g, d)) return d;
  }
  throw infeasible_seeding("no balanced connected districting found");
}

std::vector<Districting> sample_chain(const GraphInstance& g, int steps, int burn_in,
                                      std::uint64_t seed) {
  if (burn_in < 0 || steps < burn_in)
    throw std::invalid_argument("need steps >= burn_in >= 0");
  Rng rng(seed);
  Districting state = seed_districting(g, rng);
  std::vector<Districting> out;
  out.reserve(static_cast<size_t>(steps - burn_in));
  for (int step = 0; step < steps; ++step) {
    state = recom_step(g, state, rng);
    if (step >= burn_in) out.push_back(state);
  }
  return out;
}

}  // namespace statecut
