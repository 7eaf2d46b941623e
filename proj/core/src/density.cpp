#include "statecut/density.hpp"

namespace statecut {

Density::Density(std::vector<DensityPiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw parse_error("density has no pieces");
  if (pieces_.front().lo != 0 || pieces_.back().hi != 1)
    throw parse_error("density pieces must tile [0,1]");
  for (size_t i = 0; i < pieces_.size(); ++i) {
    const DensityPiece& p = pieces_[i];
    if (p.lo >= p.hi) throw parse_error("density piece with nonpositive length");
    if (p.value < 0 || p.value > 1) throw parse_error("density value outside [0,1]");
    if (i > 0 && pieces_[i - 1].hi != p.lo)
      throw parse_error("density pieces must abut");
  }
}

Density Density::constant(const Rational& value) {
  return Density({DensityPiece{Rational(0), Rational(1), value}});
}

Density Density::complement() const {
  std::vector<DensityPiece> out = pieces_;
  for (DensityPiece& p : out) p.value = 1 - p.value;
  return Density(std::move(out));
}

Rational integrate(const Density& f, const District& d) {
  Rational total(0);
  for (const Interval& iv : d.intervals()) {
    for (const DensityPiece& p : f.pieces()) {
      if (p.hi <= iv.lo) continue;
      if (p.lo >= iv.hi) break;
      total += p.value * (std::min(p.hi, iv.hi) - std::max(p.lo, iv.lo));
    }
  }
  return total;
}

}  // namespace statecut
