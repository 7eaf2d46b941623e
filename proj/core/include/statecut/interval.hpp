#pragma once

#include "statecut/rational.hpp"

#include <vector>

namespace statecut {

// Closed subinterval of [0,1].
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
};

// A finite union of closed intervals in canonical form: sorted ascending,
// zero-length intervals dropped, intervals that touch or overlap merged.
// The empty district is the empty list.
class District {
 public:
  District() = default;
  explicit District(std::vector<Interval> intervals);

  static District unit();  // the whole state [0,1]

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  Rational measure() const;

  bool operator==(const District& other) const = default;

 private:
  std::vector<Interval> intervals_;
};

District district_union(const District& a, const District& b);
District district_intersect(const District& a, const District& b);
// Closure of the set difference: endpoint-only overlaps are retained.
District district_subtract(const District& a, const District& b);

std::string format_district(const District& d);

}  // namespace statecut
