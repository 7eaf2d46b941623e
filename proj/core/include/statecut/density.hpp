#pragma once

#include "statecut/interval.hpp"
#include "statecut/rational.hpp"

#include <vector>

namespace statecut {

struct DensityPiece {
  Rational lo;
  Rational hi;
  Rational value;  // in [0,1]
};

// Piecewise-constant support density on [0,1]. Pieces tile the interval
// exactly: first lo = 0, last hi = 1, consecutive pieces abut.
class Density {
 public:
  explicit Density(std::vector<DensityPiece> pieces);

  static Density constant(const Rational& value);

  const std::vector<DensityPiece>& pieces() const { return pieces_; }

  // Pointwise 1 - f; the other party's share of the same belief.
  Density complement() const;

  bool operator==(const Density& other) const = default;

 private:
  std::vector<DensityPiece> pieces_;
};

// Exact integral of f over d.
Rational integrate(const Density& f, const District& d);

}  // namespace statecut
