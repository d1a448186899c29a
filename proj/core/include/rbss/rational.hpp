#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace rbss {

// Exact rational scalar. Always canonical: gcd(num, den) == 1, den > 0.
// Backed by GMP; construction from raw parts canonicalizes.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, literals read naturally
  Rat(long n, long d);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p", "p/q", and exact decimal literals like "-2.75".
  // Throws std::invalid_argument with a reason on malformed text.
  static Rat parse(const std::string& text);
  static std::optional<Rat> try_parse(const std::string& text);

  // 10^k for any integer k (negative k gives 1/10^|k|).
  static Rat pow10(long k);

  const mpq_class& raw() const { return v_; }
  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat abs() const;
  Rat neg() const { return Rat(mpq_class(-v_)); }
  Rat inv() const;  // throws std::domain_error on zero
  Rat pow(unsigned long e) const;
  mpz_class floor() const;  // largest integer <= value
  mpz_class ceil() const;
  mpz_class trunc() const;  // toward zero

  // Value as long when it is an integer fitting a long.
  std::optional<long> as_long() const;

  // Canonical text: "p" when den == 1, else "p/q".
  std::string str() const;
  // Truncated decimal with exactly `digits` fractional digits (toward zero).
  std::string decimal(int digits) const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b);  // throws std::domain_error on b == 0
  Rat operator-() const { return neg(); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  size_t hash() const;

 private:
  mpq_class v_;
};

// Compare for ordered containers.
struct RatLess {
  bool operator()(const Rat& a, const Rat& b) const { return a < b; }
};

}  // namespace rbss

template <>
struct std::hash<rbss::Rat> {
  size_t operator()(const rbss::Rat& r) const { return r.hash(); }
};
