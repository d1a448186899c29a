#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>

#include "rbss/rational.hpp"

namespace rbss {

// Exponent map var-index -> power, zero powers never stored.
using Monomial = std::map<long, unsigned>;

// Sparse multivariate polynomial with exact rational coefficients over
// integer-indexed variables (machine coordinates / input positions).
class Poly {
 public:
  Poly() = default;

  static Poly constant(const Rat& c);
  static Poly var(long index);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
  Rat const_value() const;  // requires is_constant()

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly neg() const;
  Poly scale(const Rat& c) const;
  Poly pow(unsigned e) const;

  // Exact evaluation; lookup returns the value of a variable (0 for absent).
  Rat eval(const std::function<Rat(long)>& lookup) const;

  std::set<long> vars() const;
  const std::map<Monomial, Rat>& terms() const { return t_; }

  // Deterministic canonical rendering, e.g. "x1^2 - 2/3*x2 + 1".
  std::string str(const std::string& varprefix = "x") const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void add_term(const Monomial& m, const Rat& c);
  std::map<Monomial, Rat> t_;
};

// Quotient of polynomials. Denominator is never the zero polynomial; a zero
// numerator normalizes the denominator to 1. No polynomial gcd reduction is
// attempted; equality of values is decided by evaluation, not by form.
struct RatFun {
  Poly num;
  Poly den = Poly::constant(1);

  static RatFun constant(const Rat& c) { return {Poly::constant(c), Poly::constant(1)}; }
  static RatFun var(long index) { return {Poly::var(index), Poly::constant(1)}; }

  RatFun normalized() const;
  bool is_constant() const { return num.is_constant() && den.is_constant(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun reciprocal() const;  // swaps; requires num not identically zero (caller guards)

  std::string str(const std::string& varprefix = "x") const;
};

// Substitutes rational functions for variables (absent variables read as 0).
RatFun subst(const Poly& p, const std::map<long, RatFun>& env);

}  // namespace rbss
