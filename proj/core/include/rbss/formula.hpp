#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rbss/hfset.hpp"

namespace rbss {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Set-valued term: a variable, a literal, or a set former {t1, ..., tk}.
struct Term {
  enum class Kind { Var, Lit, MkSet };
  Kind kind;
  std::string name;            // Var
  HFRef value;                 // Lit
  std::vector<TermPtr> elems;  // MkSet

  static TermPtr var(std::string name);
  static TermPtr lit(HFRef v);
  // Normalizing: a set former whose parts are all literals becomes a literal.
  static TermPtr mk_set(std::vector<TermPtr> elems);

  std::string str() const;
};

// Base relations of the ground structure, lifted to sets: every argument
// must be a singleton holding an atom, and the relation applies to the
// wrapped reals, e.g. Add({a},{b},{c}) holds when a + b = c.
enum class BasePred { Less, Add, Mul, IsZero, IsOne };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Member, Equal, Base, And, Or, Not, BoundedExists, BoundedForall, Exists };

  Kind kind;
  TermPtr a, b;                  // Member (a in b), Equal
  BasePred base = BasePred::Less;
  std::vector<TermPtr> args;     // Base arguments
  std::vector<FormulaPtr> kids;  // And / Or (n-ary), Not (one)
  std::string var;               // quantifiers
  TermPtr bound;                 // bounded quantifiers: var ranges over this set
  FormulaPtr body;               // quantifiers

  static FormulaPtr member(TermPtr x, TermPtr s);
  static FormulaPtr equal(TermPtr x, TermPtr y);
  static FormulaPtr pred(BasePred p, std::vector<TermPtr> args);  // checks arity
  static FormulaPtr conj(std::vector<FormulaPtr> kids);  // empty conjunction is true
  static FormulaPtr disj(std::vector<FormulaPtr> kids);  // empty disjunction is false
  static FormulaPtr negate(FormulaPtr f);
  static FormulaPtr bounded_exists(std::string var, TermPtr bound, FormulaPtr body);
  static FormulaPtr bounded_forall(std::string var, TermPtr bound, FormulaPtr body);
  static FormulaPtr exists(std::string var, FormulaPtr body);

  std::string str() const;
};

// A formula is bounded when it has no unbounded existential anywhere.
bool is_delta0(const FormulaPtr& f);
// The searchable fragment: negation only around bounded subformulas, and
// otherwise closed under and/or, bounded quantifiers, and exists.
bool is_sigma(const FormulaPtr& f);

// Occurrences of variables not captured by any quantifier, sorted, unique.
std::vector<std::string> free_vars(const FormulaPtr& f);

// Substitution var := repl. Intended for closed replacement terms
// (literals); stops at quantifiers that rebind the variable.
TermPtr subst_term(const TermPtr& t, const std::string& var, const TermPtr& repl);
FormulaPtr subst(const FormulaPtr& f, const std::string& var, const TermPtr& repl);

// S-expression syntax, e.g. (exists y (mul {y} {y} {atom(4)})).
// Forms: and, or, not, in/member, =/equal, less, add, mul, zero, one,
// bex/bounded-exists, ball/bounded-forall, exists, plus literals true/false.
// Terms: variable names, atom(p/q), and {t1, t2, ...}.
// Throws std::invalid_argument with a position on malformed input.
FormulaPtr parse_formula(const std::string& text);
TermPtr parse_term(const std::string& text);

}  // namespace rbss
