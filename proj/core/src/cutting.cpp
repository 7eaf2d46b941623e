#include "statecut/cutting.hpp"

#include <algorithm>

namespace statecut {

namespace {

struct Segment {
  Rational lo;  // relabeled coordinates in [0, t]
  Rational hi;
  Rational value;
};

struct SegmentMap {
  std::vector<Segment> segments;  // tile [0, t]
  // Per source interval of d: relabeled range [rel_lo, rel_lo + len) starts
  // at actual coordinate act_lo.
  struct Span {
    Rational rel_lo;
    Rational rel_hi;
    Rational act_lo;
  };
  std::vector<Span> spans;
  Rational t;
};

SegmentMap relabel(const Density& f, const District& d) {
  SegmentMap out;
  out.t = Rational(0);
  for (const Interval& iv : d.intervals()) {
    Rational rel_lo = out.t;
    out.t += iv.length();
    out.spans.push_back({rel_lo, out.t, iv.lo});
    for (const DensityPiece& p : f.pieces()) {
      if (p.hi <= iv.lo) continue;
      if (p.lo >= iv.hi) break;
      Rational lo = std::max(p.lo, iv.lo);
      Rational hi = std::min(p.hi, iv.hi);
      out.segments.push_back({rel_lo + (lo - iv.lo), rel_lo + (hi - iv.lo), p.value});
    }
  }
  return out;
}

// Value of the doubled density g at y, for y in [0, 2t).
const Rational& value_at(const SegmentMap& map, Rational y) {
  if (y >= map.t) y -= map.t;
  for (const Segment& seg : map.segments) {
    if (y >= seg.lo && y < seg.hi) return seg.value;
  }
  throw internal_error("relabeled coordinate outside tiled segments");
}

// Integral of g over [a, b] within the doubled domain [0, 2t].
Rational integrate_tiled(const SegmentMap& map, const Rational& a, const Rational& b) {
  Rational total(0);
  for (int copy = 0; copy < 2; ++copy) {
    Rational shift = copy == 0 ? Rational(0) : map.t;
    for (const Segment& seg : map.segments) {
      Rational lo = seg.lo + shift;
      Rational hi = seg.hi + shift;
      if (hi <= a) continue;
      if (lo >= b) break;
      total += seg.value * (std::min(hi, b) - std::max(lo, a));
    }
  }
  return total;
}

District map_back(const SegmentMap& map, const Rational& lo, const Rational& hi) {
  std::vector<Interval> out;
  for (const SegmentMap::Span& span : map.spans) {
    if (span.rel_hi <= lo) continue;
    if (span.rel_lo >= hi) break;
    Rational a = std::max(span.rel_lo, lo);
    Rational b = std::min(span.rel_hi, hi);
    out.push_back({span.act_lo + (a - span.rel_lo), span.act_lo + (b - span.rel_lo)});
  }
  return District(std::move(out));
}

}  // namespace

CutResult austin_cut(const Density& f, const District& d, const Rational& s) {
  if (s < 0 || s > 1) throw std::invalid_argument("cut fraction must lie in [0,1]");
  if (s == 0 || d.empty()) return {District(), d};
  if (s == 1) return {d, District()};

  SegmentMap map = relabel(f, d);
  const Rational t = map.t;
  const Rational window = s * t;
  const Rational target = s * integrate(f, d);

  // Breakpoints of h: offsets where either window edge crosses a segment
  // boundary.
  std::vector<Rational> xs;
  for (const Segment& seg : map.segments) {
    for (const Rational& b : {seg.lo, seg.hi}) {
      for (const Rational& cand : {b, b - window, b + t - window}) {
        if (cand >= 0 && cand <= t) xs.push_back(cand);
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  Rational h = integrate_tiled(map, Rational(0), window);
  Rational found(-1);
  if (h == target) {
    found = 0;
  } else {
    for (size_t k = 0; k + 1 < xs.size() && found < 0; ++k) {
      Rational mid = (xs[k] + xs[k + 1]) / 2;
      Rational slope = value_at(map, mid + window) - value_at(map, mid);
      Rational h_next = h + slope * (xs[k + 1] - xs[k]);
      if (h == target) {
        found = xs[k];
      } else if ((h < target && h_next >= target) || (h > target && h_next <= target)) {
        found = xs[k] + (target - h) / slope;
      }
      h = h_next;
    }
    if (found < 0 && h == target) found = t;
  }
  if (found < 0) throw internal_error("window scan found no offset at the target mass");

  District piece_1;
  if (found + window <= t) {
    piece_1 = map_back(map, found, found + window);
  } else {
    piece_1 = district_union(map_back(map, found, t),
                             map_back(map, Rational(0), found + window - t));
  }
  District piece_2 = district_subtract(d, piece_1);

  if (piece_1.measure() != window || integrate(f, piece_1) != target)
    throw internal_error("proportional cut postcondition failed");
  return {std::move(piece_1), std::move(piece_2)};
}

std::vector<District> iterated_cut(const Density& f, const District& d, const Rational& s) {
  if (s <= 0) throw std::invalid_argument("cut fraction must be positive");
  long long count = s > 1 ? 0 : floor_to_int(Rational(1) / s);
  std::vector<District> out;
  out.reserve(static_cast<size_t>(count));
  District remaining = d;
  for (long long k = 0; k < count; ++k) {
    Rational fraction = s / (1 - k * s);
    CutResult cut = austin_cut(f, remaining, fraction);
    out.push_back(std::move(cut.piece_1));
    remaining = std::move(cut.piece_2);
  }
  return out;
}

std::vector<District> slice_by_measure(const District& d, int count) {
  if (count <= 0) {
    if (d.measure() != 0) throw internal_error("cannot slice a nonempty district into 0 chunks");
    return {};
  }
  Rational chunk = d.measure() / count;
  std::vector<District> out;
  std::vector<Interval> current;
  Rational need = chunk;
  for (Interval iv : d.intervals()) {
    while (iv.length() >= need && static_cast<int>(out.size()) + 1 < count) {
      current.push_back({iv.lo, iv.lo + need});
      iv.lo += need;
      out.push_back(District(std::move(current)));
      current.clear();
      need = chunk;
    }
    if (iv.length() > 0) {
      need -= iv.length();
      current.push_back(iv);
    }
  }
  out.push_back(District(std::move(current)));
  if (static_cast<int>(out.size()) != count)
    throw internal_error("measure slicing produced the wrong chunk count");
  return out;
}

}  // namespace statecut
