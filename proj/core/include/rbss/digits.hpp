#pragma once

#include <functional>
#include <optional>
#include <string>

#include "rbss/rational.hpp"

namespace rbss {

// A real given through its decimal truncations: stage n sees the sign plus
// floor(|x| * 10^n) / 10^n and nothing else. Wrapping a rational keeps the
// exact value around; the producer form is the hook for digit sources with
// no rational to offer (say, the trailing-nines expansion of 1). Stage
// access is deterministic, so repeated scans agree.
class DigitStream {
 public:
  using Producer = std::function<Rat(long)>;  // stage -> unsigned truncation

  explicit DigitStream(const Rat& x);
  DigitStream(bool negative, Producer producer);

  // floor(|x| * 10^n) / 10^n: the first n fractional digits of the magnitude
  Rat magnitude(long n) const;
  // signed stage value; a zero magnitude carries no sign in exact arithmetic
  Rat approx(long n) const;

  bool negative() const { return negative_; }
  const std::optional<Rat>& source() const { return source_; }

 private:
  bool negative_ = false;
  Producer producer_;
  std::optional<Rat> source_;
};

// the decimal-expansion parameterization of a rational
DigitStream xi(const Rat& x);

// Verdict of a stage-by-stage consistency scan: either every stage up to
// the one asked about passed, or the scan stopped at the first failure.
// Refutations are final: scanning further stages keeps the same verdict.
struct CheckVerdict {
  bool refuted = false;
  long stage = 0;  // stages scanned when consistent; the failing stage otherwise

  bool consistent() const { return !refuted; }
  std::string str() const;  // "consistent@n" / "refuted@k"

  friend bool operator==(const CheckVerdict& a, const CheckVerdict& b) {
    return a.refuted == b.refuted && a.stage == b.stage;
  }
};

// Scans stages 1..n of the claim "x and y expand the same real". A stage
// tolerates truncations that agree exactly, or that sit one grid step
// apart provided the coarser stage already sat one (coarser) step apart --
// that is the trailing-nines pattern, the only way two distinct expansions
// name one real. Never refutes streams of the same real.
CheckVerdict eq_check(const DigitStream& x, const DigitStream& y, long n);

enum class ArithOp { Add, Mul };

// Scans stages 1..n of "x + y = z" (or "x * y = z"). Addition tolerates
// |x_m + y_m - z_m| <= 10^(1-m); multiplication the same slack scaled by
// 1 + |x_m| + |y_m|, since the truncation error of a product grows with
// the factors. Never refutes a true relation.
CheckVerdict arith_check(ArithOp op, const DigitStream& x, const DigitStream& y,
                         const DigitStream& z, long n);

}  // namespace rbss
