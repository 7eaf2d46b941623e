#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace statecut {

// Exact rational arithmetic; kept in lowest terms with positive denominator
// by the backend. All model quantities (measures, supports, thresholds) live
// in this type so ties are honest equalities, never float coincidences.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal construction violates one of its own provable
// invariants. Indicates a bug, never bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Accepts "p/q", integers, and plain decimals ("0.25"), all parsed exactly.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

BigInt floor_rational(const Rational& r);
BigInt ceil_rational(const Rational& r);

// Floor as a machine int; throws if out of range.
long long floor_to_int(const Rational& r);

}  // namespace statecut
