#pragma once

#include "statecut/instance.hpp"

#include <array>
#include <utility>
#include <vector>

namespace statecut {

// Discretization of an instance onto n = m * atoms_per_district equal-width
// atoms. Any instance whose density breakpoints lie on the 1/n grid maps
// losslessly to one of these.
struct AtomInstance {
  int m = 1;
  int atoms_per_district = 1;
  // values[p][a]: own-belief support of party p+1 on atom a, in [0,1].
  std::array<std::vector<Rational>, 2> values;

  int atom_count() const { return m * atoms_per_district; }
  const std::vector<Rational>& own_values(Party p) const {
    return values[party_id(p) - 1];
  }
};

// Samples a grid-aligned instance's densities onto n atoms. Throws if a
// density breakpoint falls strictly inside an atom.
AtomInstance atomize(const Instance& inst, int atom_count);

// Exact extremes of the evaluator's own seat count over every partition of
// the atoms into m districts of atoms_per_district atoms each, taking the
// best and worst tiebreak per district. Enumeration; rejects more than 14
// atoms.
std::pair<int, int> brute_minmax_seats(const AtomInstance& a, Party evaluator);

// Largest k such that some set of k * atoms_per_district atoms carries
// exactly half its measure in support. Subset enumeration; same atom bound.
int brute_max_competitive(const AtomInstance& a, Party i);

}  // namespace statecut
