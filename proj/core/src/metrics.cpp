#include "statecut/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace statecut {

DistrictVotes aggregate_votes(const GraphInstance& g, const Districting& d,
                              const VoteDataset& dataset) {
  DistrictVotes out(static_cast<size_t>(g.m));
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    out[d.assignment[v]].p1 += dataset.votes[v].p1;
    out[d.assignment[v]].p2 += dataset.votes[v].p2;
  }
  return out;
}

std::pair<int, int> seats_won(const DistrictVotes& votes) {
  int s1 = 0, s2 = 0;
  for (const VotePair& v : votes) {
    if (v.p1 > v.p2) {
      ++s1;
    } else {
      ++s2;  // ties to party two
    }
  }
  return {s1, s2};
}

double efficiency_gap(const DistrictVotes& votes) {
  // Doubled waste keeps everything integral: 2*(votes - total/2) = 2v - total.
  std::int64_t waste_1 = 0, waste_2 = 0, total = 0;
  for (const VotePair& v : votes) {
    total += v.total();
    if (v.p1 > v.p2) {
      waste_1 += 2 * v.p1 - v.total();
      waste_2 += 2 * v.p2;
    } else if (v.p2 > v.p1) {
      waste_1 += 2 * v.p1;
      waste_2 += 2 * v.p2 - v.total();
    }
    // exact tie: both at the threshold, no waste on either side
  }
  if (total == 0) throw std::invalid_argument("no votes cast");
  return static_cast<double>(waste_1 - waste_2) / (2.0 * static_cast<double>(total));
}

int competitive_count(const DistrictVotes& votes) {
  int count = 0;
  for (const VotePair& v : votes) {
    // max share <= 54/100, i.e. 50 * max <= 27 * total
    std::int64_t winner = std::max(v.p1, v.p2);
    if (50 * winner <= 27 * v.total()) ++count;
  }
  return count;
}

CompactnessScores polsby_popper(const GraphInstance& g, const Districting& d) {
  std::vector<double> area(g.m, 0.0);
  std::vector<double> perimeter(g.m, 0.0);
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    area[d.assignment[v]] += g.nodes[v].area;
    perimeter[d.assignment[v]] += g.nodes[v].exterior;
  }
  for (const GraphEdge& e : g.edges) {
    if (d.assignment[e.a] != d.assignment[e.b]) {
      perimeter[d.assignment[e.a]] += e.shared;
      perimeter[d.assignment[e.b]] += e.shared;
    }
  }
  CompactnessScores out;
  out.per_district.resize(g.m);
  for (int k = 0; k < g.m; ++k) {
    out.per_district[k] = 4.0 * std::numbers::pi * area[k] / (perimeter[k] * perimeter[k]);
    out.mean += out.per_district[k];
  }
  out.mean /= g.m;
  return out;
}

}  // namespace statecut
