#pragma once

#include "statecut/graph.hpp"

#include <stdexcept>
#include <vector>

namespace statecut {

class infeasible_seeding : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Starting districting by recursive bisection with random spanning trees.
// Throws infeasible_seeding when no balanced split is found after bounded
// retries.
Districting seed_districting(const GraphInstance& g, Rng& rng);

// One recombination move: pick a uniformly random cut edge, merge its two
// districts, draw a uniform spanning tree of the merged region (Wilson), and
// split it at a random tree edge whose sides are both within the population
// bounds. Up to 100 tree redraws; if none splits, the state self-loops.
Districting recom_step(const GraphInstance& g, const Districting& d, Rng& rng);

// steps moves from a fresh seed, recording every post-burn-in state.
// Deterministic per seed.
std::vector<Districting> sample_chain(const GraphInstance& g, int steps, int burn_in,
                                      std::uint64_t seed);

}  // namespace statecut
