#pragma once

#include "statecut/density.hpp"

#include <string>

namespace statecut {

enum class Party : int { one = 1, two = 2 };

constexpr Party other(Party p) { return p == Party::one ? Party::two : Party::one; }
constexpr int party_id(Party p) { return static_cast<int>(p); }
Party party_from_id(int id);

// A two-party redistricting problem on [0,1]: the district count m and each
// party's belief about its own support. The cross beliefs are the pointwise
// complements, so these two densities fully specify the instance.
struct Instance {
  int m = 1;
  Density density_1;
  Density density_2;

  Instance(int m_, Density d1, Density d2);

  // Party i's belief about its own support density.
  const Density& own_belief(Party i) const;

  // Density of support for `candidate` according to `evaluator`.
  Density belief(Party evaluator, Party candidate) const;

  // v_evaluator^candidate(d): support mass for `candidate` in d, per
  // `evaluator`'s belief.
  Rational support(Party evaluator, Party candidate, const District& d) const;

  // Statewide support for i's own party per its own belief.
  Rational own_total(Party i) const;
};

// Instance JSON: {"m": int, "densities": {"1": [[lo,hi,value],...], "2": ...}}
// where lo/hi/value are strings ("p/q" or decimal) or integers, parsed
// exactly. Non-integer JSON numbers are rejected to keep parsing exact.
Instance parse_instance_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

}  // namespace statecut
