#pragma once

#include "statecut/graph.hpp"

#include <vector>

namespace statecut {

// Per-district vote totals under one dataset (scale folded in).
using DistrictVotes = std::vector<VotePair>;

DistrictVotes aggregate_votes(const GraphInstance& g, const Districting& d,
                              const VoteDataset& dataset);

// Seats per party. District winners by exact integer comparison; an exact
// vote tie goes to party two.
std::pair<int, int> seats_won(const DistrictVotes& votes);

// Net wasted-vote difference as a fraction of all votes; positive means
// party one is disadvantaged. The winner's waste is its votes above half the
// district total (continuous threshold); the loser wastes everything. In an
// exactly tied district both parties sit at the threshold and waste nothing.
double efficiency_gap(const DistrictVotes& votes);

// Districts where the leading party's two-party share is at most 54%
// (inclusive), by exact integer comparison.
int competitive_count(const DistrictVotes& votes);

struct CompactnessScores {
  std::vector<double> per_district;
  double mean = 0;
};

// 4*pi*A/P^2 per district: area is the node-area sum, perimeter the exterior
// lengths plus shared lengths on district-crossing edges.
CompactnessScores polsby_popper(const GraphInstance& g, const Districting& d);

}  // namespace statecut
