#include "statecut/interval.hpp"

#include <algorithm>

namespace statecut {

District::District(std::vector<Interval> intervals) {
  for (const Interval& iv : intervals) {
    if (iv.lo > iv.hi) throw internal_error("interval with lo > hi");
    if (iv.lo < 0 || iv.hi > 1) throw internal_error("interval outside [0,1]");
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
            });
  for (Interval& iv : intervals) {
    if (iv.lo == iv.hi) continue;  // dropped below
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
      if (iv.hi > intervals_.back().hi) intervals_.back().hi = iv.hi;
    } else {
      intervals_.push_back(iv);
    }
  }
}

District District::unit() { return District({Interval{Rational(0), Rational(1)}}); }

Rational District::measure() const {
  Rational total(0);
  for (const Interval& iv : intervals_) total += iv.length();
  return total;
}

District district_union(const District& a, const District& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return District(std::move(all));
}

District district_intersect(const District& a, const District& b) {
  std::vector<Interval> out;
  size_t i = 0, j = 0;
  const auto& xs = a.intervals();
  const auto& ys = b.intervals();
  while (i < xs.size() && j < ys.size()) {
    Rational lo = std::max(xs[i].lo, ys[j].lo);
    Rational hi = std::min(xs[i].hi, ys[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (xs[i].hi < ys[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return District(std::move(out));
}

District district_subtract(const District& a, const District& b) {
  std::vector<Interval> out;
  const auto& ys = b.intervals();
  for (const Interval& iv : a.intervals()) {
    Rational lo = iv.lo;
    for (const Interval& cut : ys) {
      if (cut.hi <= lo) continue;
      if (cut.lo >= iv.hi) break;
      if (cut.lo > lo) out.push_back({lo, cut.lo});
      lo = std::max(lo, cut.hi);
      if (lo >= iv.hi) break;
    }
    if (lo < iv.hi) out.push_back({lo, iv.hi});
  }
  return District(std::move(out));
}

std::string format_district(const District& d) {
  std::string s = "{";
  bool first = true;
  for (const Interval& iv : d.intervals()) {
    if (!first) s += ", ";
    first = false;
    s += "[" + format_rational(iv.lo) + ", " + format_rational(iv.hi) + "]";
  }
  return s + "}";
}

}  // namespace statecut
