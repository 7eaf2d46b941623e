#pragma once

#include "statecut/instance.hpp"
#include "statecut/rng.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace statecut {

struct GraphNode {
  int id = 0;
  std::int64_t population = 0;
  double area = 0;
  double perimeter = 0;
  double exterior = 0;  // boundary length not shared with any neighbor
};

struct GraphEdge {
  int a = 0;
  int b = 0;
  double shared = 0;  // perimeter length the two nodes share
};

struct VotePair {
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;

  std::int64_t total() const { return p1 + p2; }
  std::int64_t party(Party p) const { return p == Party::one ? p1 : p2; }
};

// Per-node vote counts under one belief dataset. Deviated datasets carry a
// common integer scale so adjusted shares stay exact; scaling every count by
// the same factor changes no winner, share, or gap.
struct VoteDataset {
  std::int64_t scale = 1;
  std::vector<VotePair> votes;
};

// Discrete redistricting state: an adjacency graph of indivisible regions
// with population, geometry, and one or more vote datasets.
struct GraphInstance {
  int m = 1;
  double epsilon = 0.02;  // allowed fractional deviation from equal population
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::map<std::string, VoteDataset> datasets;

  // adjacency[v] lists (neighbor, edge index).
  std::vector<std::vector<std::pair<int, int>>> adjacency;

  void rebuild_adjacency();
  // Checks connectivity and the geometric sanity of perimeters; throws
  // parse_error on violation.
  void validate() const;

  std::int64_t total_population() const;
  // Inclusive per-district population bounds [(1-eps)T/m, (1+eps)T/m],
  // evaluated exactly.
  std::pair<std::int64_t, std::int64_t> population_bounds() const;
};

// assignment[node] = district label in [0, m).
struct Districting {
  std::vector<int> assignment;

  bool operator==(const Districting& other) const = default;
};

bool districts_connected(const GraphInstance& g, const Districting& d);
bool population_balanced(const GraphInstance& g, const Districting& d);
bool is_valid_districting(const GraphInstance& g, const Districting& d);

// Relabels districts by first appearance so label permutations compare equal.
std::vector<int> canonical_assignment(const Districting& d);

GraphInstance parse_graph_json(const std::string& text);
std::string graph_to_json(const GraphInstance& g);

enum class GridPattern { uniform, gradient, clustered };
GridPattern grid_pattern_from_string(const std::string& name);

// rows x cols unit cells with a planted party-one vote share field:
// uniform (= lean everywhere), gradient (linear in the column index,
// averaging lean), or clustered (seeded blobs of concentrated support).
GraphInstance make_grid_instance(int rows, int cols, int m, double epsilon,
                                 GridPattern pattern, double lean,
                                 std::int64_t node_population, std::uint64_t seed);

}  // namespace statecut
