#pragma once

#include <string>

#include "rbss/rational.hpp"

namespace rbss {

// A closed rational interval certified to contain its target.
struct Enclosure {
  Rat lo;
  Rat hi;

  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / Rat(2); }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  std::string str() const;  // "[p/q, r/s]"

  friend bool operator==(const Enclosure& a, const Enclosure& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Lower and upper Riemann sums for the integral of 1/t over [1, x] cut into
// n equal pieces: [L_n, U_n] contains ln x and the width is exactly
// (x-1)^2 / (n x). Fully exact, so the cost grows with n; certified
// accuracy targets go through ln_cert instead. Throws std::invalid_argument
// unless x > 1 and n >= 1.
Enclosure ln_bounds(const Rat& x, long n);

// Enclosure of ln x with width <= eps for any rational x > 0: the Riemann
// bracket at the least sufficient interval count, summed exactly when that
// count is small and with outward rounding on a fixed denominator grid when
// it is large (half the budget buys the bracket, half absorbs the
// rounding). Arguments in (0, 1) reduce through ln(1/x) negated; ln 1 is
// [0, 0]. Throws std::invalid_argument unless x > 0 and eps > 0, or when
// eps is so small the interval count overflows.
Enclosure ln_cert(const Rat& x, const Rat& eps);

// Enclosure of e^x with width <= eps: bisection of the a-priori bracket
// [0, max(4^ceil(x), 1)], deciding each midpoint m by whether a certified
// enclosure of ln m lands above or below x (tightened until conclusive,
// which it always becomes since ln m = x has no rational solution besides
// m = 1, x = 0 -- and that case returns [1, 1] outright). Throws
// std::invalid_argument unless eps > 0.
Enclosure exp_cert(const Rat& x, const Rat& eps);

}  // namespace rbss
