#include "rbss/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace rbss {

Poly Poly::constant(const Rat& c) {
  Poly p;
  if (!c.is_zero()) p.t_.emplace(Monomial{}, c);
  return p;
}

Poly Poly::var(long index) {
  Poly p;
  p.t_.emplace(Monomial{{index, 1u}}, Rat(1));
  return p;
}

Rat Poly::const_value() const {
  if (t_.empty()) return Rat(0);
  if (t_.size() == 1 && t_.begin()->first.empty()) return t_.begin()->second;
  throw std::logic_error("const_value on non-constant polynomial");
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c.neg());
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : t_) {
    for (const auto& [mb, cb] : o.t_) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::neg() const {
  Poly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, c.neg());
  return r;
}

Poly Poly::scale(const Rat& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : t_) r.t_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

Rat Poly::eval(const std::function<Rat(long)>& lookup) const {
  Rat acc(0);
  for (const auto& [m, c] : t_) {
    Rat term = c;
    for (const auto& [v, e] : m) term *= lookup(v).pow(e);
    acc += term;
  }
  return acc;
}

std::set<long> Poly::vars() const {
  std::set<long> s;
  for (const auto& [m, c] : t_) {
    (void)c;
    for (const auto& [v, e] : m) {
      (void)e;
      s.insert(v);
    }
  }
  return s;
}

std::string Poly::str(const std::string& varprefix) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    Rat coef = c;
    if (first) {
      if (coef.sign() < 0) {
        os << '-';
        coef = coef.neg();
      }
    } else {
      os << (coef.sign() < 0 ? " - " : " + ");
      if (coef.sign() < 0) coef = coef.neg();
    }
    first = false;
    if (m.empty()) {
      os << coef.str();
      continue;
    }
    bool printed = false;
    if (!coef.is_one()) {
      os << coef.str() << '*';
    }
    bool firstv = true;
    for (const auto& [v, e] : m) {
      if (!firstv) os << '*';
      firstv = false;
      os << varprefix << v;
      if (e != 1) os << '^' << e;
      printed = true;
    }
    (void)printed;
  }
  return os.str();
}

RatFun RatFun::normalized() const {
  RatFun r = *this;
  if (r.num.is_zero()) r.den = Poly::constant(1);
  if (r.den.is_constant() && !r.den.is_zero()) {
    Rat d = r.den.const_value();
    r.num = r.num.scale(d.inv());
    r.den = Poly::constant(1);
  }
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun{num * o.den + o.num * den, den * o.den}.normalized();
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun{num * o.den - o.num * den, den * o.den}.normalized();
}

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun{num * o.num, den * o.den}.normalized();
}

RatFun RatFun::reciprocal() const { return RatFun{den, num}; }

std::string RatFun::str(const std::string& varprefix) const {
  if (den.is_constant() && den.const_value().is_one()) return num.str(varprefix);
  return "(" + num.str(varprefix) + ") / (" + den.str(varprefix) + ")";
}

RatFun subst(const Poly& p, const std::map<long, RatFun>& env) {
  RatFun acc = RatFun::constant(Rat(0));
  for (const auto& [m, c] : p.terms()) {
    RatFun term = RatFun::constant(c);
    for (const auto& [v, e] : m) {
      auto it = env.find(v);
      RatFun base = it == env.end() ? RatFun::constant(Rat(0)) : it->second;
      for (unsigned k = 0; k < e; ++k) term = term * base;
    }
    acc = acc + term;
  }
  return acc.normalized();
}

}  // namespace rbss
