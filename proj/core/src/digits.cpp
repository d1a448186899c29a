#include "rbss/digits.hpp"

#include <stdexcept>
#include <utility>

namespace rbss {

DigitStream::DigitStream(const Rat& x) : negative_(x.sign() < 0), source_(x) {}

DigitStream::DigitStream(bool negative, Producer producer)
    : negative_(negative), producer_(std::move(producer)) {
  if (!producer_) throw std::invalid_argument("digit stream needs a producer");
}

Rat DigitStream::magnitude(long n) const {
  if (source_) {
    Rat scaled = source_->abs() * Rat::pow10(n);
    return Rat(mpq_class(scaled.floor())) * Rat::pow10(-n);
  }
  return producer_(n);
}

Rat DigitStream::approx(long n) const {
  Rat m = magnitude(n);
  return negative_ ? m.neg() : m;
}

DigitStream xi(const Rat& x) { return DigitStream(x); }

std::string CheckVerdict::str() const {
  return (refuted ? "refuted@" : "consistent@") + std::to_string(stage);
}

namespace {

// Stage-m equality tolerance: equal values, or a one-step gap that was
// already a one-step gap at stage m-1. A fresh one-step gap with agreeing
// coarser truncations can only mean distinct reals, because truncations of
// one real drift apart only along the nines/zeros ladder from the stage
// where the gap first opened.
bool eq_stage_ok(const DigitStream& x, const DigitStream& y, long m) {
  Rat gap = (x.approx(m) - y.approx(m)).abs();
  if (gap.is_zero()) return true;
  if (gap != Rat::pow10(-m)) return false;
  return (x.approx(m - 1) - y.approx(m - 1)).abs() == Rat::pow10(-(m - 1));
}

}  // namespace

CheckVerdict eq_check(const DigitStream& x, const DigitStream& y, long n) {
  for (long m = 1; m <= n; ++m)
    if (!eq_stage_ok(x, y, m)) return {true, m};
  return {false, n < 0 ? 0 : n};
}

CheckVerdict arith_check(ArithOp op, const DigitStream& x, const DigitStream& y,
                         const DigitStream& z, long n) {
  for (long m = 1; m <= n; ++m) {
    Rat xm = x.approx(m), ym = y.approx(m), zm = z.approx(m);
    Rat slack = Rat::pow10(1 - m);
    bool ok = op == ArithOp::Add
                  ? (xm + ym - zm).abs() <= slack
                  : (xm * ym - zm).abs() <= slack * (Rat(1) + xm.abs() + ym.abs());
    if (!ok) return {true, m};
  }
  return {false, n < 0 ? 0 : n};
}

}  // namespace rbss
