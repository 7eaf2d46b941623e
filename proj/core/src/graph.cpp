#include "statecut/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace statecut {

void GraphInstance::rebuild_adjacency() {
  adjacency.assign(nodes.size(), {});
  for (size_t e = 0; e < edges.size(); ++e) {
    adjacency[edges[e].a].push_back({edges[e].b, static_cast<int>(e)});
    adjacency[edges[e].b].push_back({edges[e].a, static_cast<int>(e)});
  }
}

void GraphInstance::validate() const {
  if (m < 1) throw parse_error("graph instance needs m >= 1");
  if (nodes.empty()) throw parse_error("graph instance has no nodes");
  if (static_cast<int>(nodes.size()) < m)
    throw parse_error("fewer nodes than districts");
  for (const GraphEdge& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= static_cast<int>(nodes.size()) ||
        e.b >= static_cast<int>(nodes.size()) || e.a == e.b)
      throw parse_error("edge endpoints out of range");
    if (e.shared < 0 ||
        e.shared > std::min(nodes[e.a].perimeter, nodes[e.b].perimeter))
      throw parse_error("shared perimeter exceeds a node perimeter");
  }
  std::vector<double> shared_sum(nodes.size(), 0.0);
  for (const GraphEdge& e : edges) {
    shared_sum[e.a] += e.shared;
    shared_sum[e.b] += e.shared;
  }
  for (const GraphNode& n : nodes) {
    if (n.population < 0 || n.area < 0 || n.perimeter < 0 || n.exterior < 0)
      throw parse_error("node with negative population or geometry");
    if (n.perimeter + 1e-9 < shared_sum[n.id] + n.exterior)
      throw parse_error("node perimeter smaller than its shared + exterior length");
  }
  for (const auto& [name, ds] : datasets) {
    if (ds.votes.size() != nodes.size())
      throw parse_error("dataset '" + name + "' needs one vote pair per node");
    if (ds.scale < 1) throw parse_error("dataset scale must be positive");
    for (const VotePair& v : ds.votes) {
      if (v.p1 < 0 || v.p2 < 0) throw parse_error("negative vote count");
    }
  }

  // connectivity
  std::vector<char> seen(nodes.size(), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  size_t reached = 1;
  std::vector<std::vector<int>> adj(nodes.size());
  for (const GraphEdge& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  if (reached != nodes.size()) throw parse_error("graph is not connected");
}

std::int64_t GraphInstance::total_population() const {
  std::int64_t total = 0;
  for (const GraphNode& n : nodes) total += n.population;
  return total;
}

std::pair<std::int64_t, std::int64_t> GraphInstance::population_bounds() const {
  // Exact rational bounds from the (binary) value of epsilon.
  Rational eps(epsilon);
  Rational target = Rational(total_population()) / m;
  std::int64_t lo = ceil_rational((1 - eps) * target).convert_to<std::int64_t>();
  std::int64_t hi = floor_rational((1 + eps) * target).convert_to<std::int64_t>();
  return {lo, hi};
}

bool districts_connected(const GraphInstance& g, const Districting& d) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<int> first(g.m, -1);
  for (int v = 0; v < n; ++v) {
    int label = d.assignment[v];
    if (label < 0 || label >= g.m) return false;
    if (first[label] < 0) first[label] = v;
  }
  std::vector<char> seen(n, 0);
  for (int label = 0; label < g.m; ++label) {
    if (first[label] < 0) return false;  // empty district
    std::queue<int> frontier;
    frontier.push(first[label]);
    seen[first[label]] = 1;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (auto [w, e] : g.adjacency[v]) {
        if (!seen[w] && d.assignment[w] == label) {
          seen[w] = 1;
          frontier.push(w);
        }
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool population_balanced(const GraphInstance& g, const Districting& d) {
  auto [lo, hi] = g.population_bounds();
  std::vector<std::int64_t> pop(g.m, 0);
  for (size_t v = 0; v < g.nodes.size(); ++v)
    pop[d.assignment[v]] += g.nodes[v].population;
  return std::all_of(pop.begin(), pop.end(),
                     [&](std::int64_t p) { return lo <= p && p <= hi; });
}

bool is_valid_districting(const GraphInstance& g, const Districting& d) {
  if (d.assignment.size() != g.nodes.size()) return false;
  return districts_connected(g, d) && population_balanced(g, d);
}

std::vector<int> canonical_assignment(const Districting& d) {
  std::vector<int> relabel;
  std::vector<int> out;
  out.reserve(d.assignment.size());
  std::vector<int> map(d.assignment.size(), -1);
  int next = 0;
  for (int label : d.assignment) {
    if (map[label] < 0) map[label] = next++;
    out.push_back(map[label]);
  }
  return out;
}

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

}  // namespace

GraphInstance parse_graph_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("graph JSON: ") + e.what());
  }
  GraphInstance g;
  try {
    g.m = doc.at("m").get<int>();
    g.epsilon = doc.at("epsilon").get<double>();
    for (const json& n : doc.at("nodes")) {
      GraphNode node;
      node.id = n.at("id").get<int>();
      node.population = n.at("pop").get<std::int64_t>();
      node.area = n.at("area").get<double>();
      node.perimeter = n.at("perimeter").get<double>();
      node.exterior = n.at("exterior").get<double>();
      if (node.id != static_cast<int>(g.nodes.size()))
        throw parse_error("node ids must be 0..n-1 in order");
      g.nodes.push_back(node);
      const json& votes = n.at("votes");
      for (auto it = votes.begin(); it != votes.end(); ++it) {
        VoteDataset& ds = g.datasets[it.key()];
        if (it.value().contains("scale")) ds.scale = it.value()["scale"].get<std::int64_t>();
        if (ds.votes.size() + 1 != g.nodes.size())
          throw parse_error("dataset '" + it.key() + "' missing on some nodes");
        ds.votes.push_back({it.value().at("1").get<std::int64_t>(),
                            it.value().at("2").get<std::int64_t>()});
      }
    }
    for (const json& e : doc.at("edges")) {
      g.edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(),
                         e.at("shared").get<double>()});
    }
  } catch (const json::exception& e) {
    throw parse_error(std::string("graph JSON: ") + e.what());
  }
  for (auto& [name, ds] : g.datasets) {
    if (ds.votes.size() != g.nodes.size())
      throw parse_error("dataset '" + name + "' missing on some nodes");
  }
  g.validate();
  g.rebuild_adjacency();
  return g;
}

std::string graph_to_json(const GraphInstance& g) {
  ordered_json doc;
  doc["m"] = g.m;
  doc["epsilon"] = g.epsilon;
  doc["nodes"] = ordered_json::array();
  for (const GraphNode& n : g.nodes) {
    ordered_json votes;
    for (const auto& [name, ds] : g.datasets) {
      ordered_json entry;
      entry["1"] = ds.votes[n.id].p1;
      entry["2"] = ds.votes[n.id].p2;
      if (ds.scale != 1) entry["scale"] = ds.scale;
      votes[name] = std::move(entry);
    }
    doc["nodes"].push_back({{"id", n.id},
                            {"pop", n.population},
                            {"area", n.area},
                            {"perimeter", n.perimeter},
                            {"exterior", n.exterior},
                            {"votes", std::move(votes)}});
  }
  doc["edges"] = ordered_json::array();
  for (const GraphEdge& e : g.edges)
    doc["edges"].push_back({{"a", e.a}, {"b", e.b}, {"shared", e.shared}});
  return doc.dump(2);
}

GridPattern grid_pattern_from_string(const std::string& name) {
  if (name == "uniform") return GridPattern::uniform;
  if (name == "gradient") return GridPattern::gradient;
  if (name == "clustered") return GridPattern::clustered;
  throw parse_error("unknown grid pattern '" + name + "'");
}

GraphInstance make_grid_instance(int rows, int cols, int m, double epsilon,
                                 GridPattern pattern, double lean,
                                 std::int64_t node_population, std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw parse_error("grid needs positive dimensions");
  GraphInstance g;
  g.m = m;
  g.epsilon = epsilon;

  Rng rng(seed);
  std::vector<std::pair<double, double>> blob_centers;
  if (pattern == GridPattern::clustered) {
    int blobs = 2 + static_cast<int>(rng.below(3));
    for (int b = 0; b < blobs; ++b)
      blob_centers.push_back({rng.unit() * rows, rng.unit() * cols});
  }

  auto share_at = [&](int r, int c) {
    switch (pattern) {
      case GridPattern::uniform:
        return lean;
      case GridPattern::gradient: {
        // Linear in the column, spanning lean +/- 0.15, clamped to [0.05, 0.95].
        double t = cols > 1 ? static_cast<double>(c) / (cols - 1) : 0.5;
        return std::clamp(lean + 0.15 - 0.3 * t, 0.05, 0.95);
      }
      case GridPattern::clustered: {
        double bump = 0.0;
        for (auto [br, bc] : blob_centers) {
          double dr = r + 0.5 - br, dc = c + 0.5 - bc;
          double dist2 = dr * dr + dc * dc;
          double radius = 0.15 * (rows + cols);
          bump += 0.35 * std::exp(-dist2 / (radius * radius));
        }
        return std::clamp(lean - 0.15 + bump, 0.05, 0.95);
      }
    }
    return lean;
  };

  VoteDataset base;
  base.scale = 1;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      GraphNode n;
      n.id = r * cols + c;
      n.population = node_population;
      n.area = 1.0;
      n.perimeter = 4.0;
      n.exterior = (r == 0) + (r == rows - 1) + (c == 0) + (c == cols - 1);
      g.nodes.push_back(n);
      std::int64_t v1 = std::llround(share_at(r, c) * static_cast<double>(node_population));
      base.votes.push_back({v1, node_population - v1});
      if (c + 1 < cols) g.edges.push_back({n.id, n.id + 1, 1.0});
      if (r + 1 < rows) g.edges.push_back({n.id, n.id + cols, 1.0});
    }
  }
  g.datasets["base"] = std::move(base);
  g.validate();
  g.rebuild_adjacency();
  return g;
}

}  // namespace statecut
