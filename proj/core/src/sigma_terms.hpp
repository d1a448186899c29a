#pragma once

// Shorthand shared by the sigma translation units. Everything here builds
// formula fragments over the tagged-pair code conventions: a pair is
// {{tag},{payload}} with an atom tag and a set payload, a sequence code is
// the set of pairs (position, {value}) over the nonzero positions.

#include <string>
#include <utility>
#include <vector>

#include "rbss/encode.hpp"
#include "rbss/formula.hpp"

namespace rbss::sig {

// Deterministic fresh-name supply; every generated binder starts with "_"
// so it can never collide with the free variables "x", "y", "x1", ...
struct NameGen {
  long n = 0;
  std::string operator()(const char* stem) { return "_" + std::string(stem) + std::to_string(n++); }
};

inline TermPtr v(const std::string& name) { return Term::var(name); }
inline TermPtr lit(HFRef h) { return Term::lit(std::move(h)); }
inline TermPtr alit(const Rat& q) { return Term::lit(HFSet::atom(q)); }
inline HFRef satom(const Rat& q) { return HFSet::set({HFSet::atom(q)}); }
inline TermPtr slit(const Rat& q) { return Term::lit(satom(q)); }  // the singleton {q}
inline TermPtr sing(TermPtr t) { return Term::mk_set({std::move(t)}); }

// {{tag},{payload}}; tag is an atom-valued term, payload a set-valued one
inline TermPtr pairt(TermPtr tag, TermPtr payload) {
  return Term::mk_set({sing(std::move(tag)), sing(std::move(payload))});
}

inline FormulaPtr eq(TermPtr a, TermPtr b) { return Formula::equal(std::move(a), std::move(b)); }
inline FormulaPtr in(TermPtr a, TermPtr b) { return Formula::member(std::move(a), std::move(b)); }
inline FormulaPtr and_(std::vector<FormulaPtr> k) { return Formula::conj(std::move(k)); }
inline FormulaPtr or_(std::vector<FormulaPtr> k) { return Formula::disj(std::move(k)); }
inline FormulaPtr not_(FormulaPtr f) { return Formula::negate(std::move(f)); }
inline FormulaPtr bex(const std::string& var, TermPtr bound, FormulaPtr body) {
  return Formula::bounded_exists(var, std::move(bound), std::move(body));
}
inline FormulaPtr ball(const std::string& var, TermPtr bound, FormulaPtr body) {
  return Formula::bounded_forall(var, std::move(bound), std::move(body));
}
inline FormulaPtr addp(TermPtr a, TermPtr b, TermPtr c) {
  return Formula::pred(BasePred::Add, {std::move(a), std::move(b), std::move(c)});
}
inline FormulaPtr mulp(TermPtr a, TermPtr b, TermPtr c) {
  return Formula::pred(BasePred::Mul, {std::move(a), std::move(b), std::move(c)});
}
inline FormulaPtr lessp(TermPtr a, TermPtr b) {
  return Formula::pred(BasePred::Less, {std::move(a), std::move(b)});
}
inline FormulaPtr zerop(TermPtr a) { return Formula::pred(BasePred::IsZero, {std::move(a)}); }

// True exactly when the variable holds an atom: t + 0 = t succeeds on reals
// and fails (leniently) on sets, which is the only discrimination the base
// predicates offer.
inline FormulaPtr atomish(const std::string& var) {
  return addp(sing(v(var)), slit(0), sing(v(var)));
}

// Payload-term variant of the same trick ({t} + {0} = {t} for singletons).
inline FormulaPtr atomish_t(const TermPtr& t) { return addp(t, slit(0), t); }

// No element of the set carries the given position tag.
inline FormulaPtr no_tag(const TermPtr& set, const Rat& tag, NameGen& g) {
  std::string q = g("q");
  return ball(q, set, not_(in(slit(tag), v(q))));
}

// Every atom tag picks out at most one element of c.
inline FormulaPtr tag_functional(const TermPtr& c, NameGen& g) {
  std::string e1 = g("e"), a1 = g("a"), t1 = g("t");
  std::string e2 = g("e"), a2 = g("a"), t2 = g("t");
  return ball(e1, c, ball(a1, v(e1), ball(t1, v(a1),
         ball(e2, c, ball(a2, v(e2), ball(t2, v(a2),
             or_({not_(and_({atomish(t1), in(sing(v(t1)), v(e1)),
                             atomish(t2), in(sing(v(t2)), v(e2)),
                             eq(v(t1), v(t2))})),
                  eq(v(e1), v(e2))})))))));
}

}  // namespace rbss::sig
