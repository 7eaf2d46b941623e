#pragma once

#include "statecut/density.hpp"

#include <vector>

namespace statecut {

struct CutResult {
  District piece_1;
  District piece_2;
};

// Splits d into two pieces whose measures AND f-integrals are exactly
// proportional to s and 1-s.
//
// Works on a relabeling of d onto [0, t], t = measure(d): slide a window of
// measure s*t across the relabeled interval (wrapping around the end) and
// track the window's f-mass h(x). h is piecewise linear, so the offset x*
// with h(x*) = s * integral(f, d) is found by an exact scan of its linear
// segments; the smallest such x* is used. The window maps back to actual
// subintervals of d.
CutResult austin_cut(const Density& f, const District& d, const Rational& s);

// floor(1/s) pairwise measure-disjoint sub-districts of d, each with measure
// s*measure(d) and integral s*integral(f,d), by repeated proportional cuts
// with fractions s, s/(1-s), s/(1-2s), ...  Rejects s <= 0.
std::vector<District> iterated_cut(const Density& f, const District& d, const Rational& s);

// count equal-measure chunks of d taken left to right. No proportionality in
// f; used where any partition of a remainder region will do.
std::vector<District> slice_by_measure(const District& d, int count);

}  // namespace statecut
