#pragma once

#include <map>
#include <string>
#include <vector>

#include "rbss/formula.hpp"

namespace rbss {

using Env = std::map<std::string, HFRef>;

// Strict: base predicates demand singleton-of-atom arguments; violations
// raise std::domain_error. Lenient: such applications are simply false
// (useful when formulas are generated rather than written). Membership with
// an atom on the right is false in both modes -- atoms have no elements.
enum class EvalMode { Strict, Lenient };

// Value of a closed-under-env term. Throws std::domain_error on unbound
// variables.
HFRef eval_term(const TermPtr& t, const Env& env);

// Decides a bounded formula by structural recursion. Throws
// std::invalid_argument when the formula has an unbounded existential.
bool eval_delta0(const FormulaPtr& f, const Env& env, EvalMode mode = EvalMode::Strict);

// Knobs for the existential witness search.
struct SearchBudget {
  long max_witnesses = 2000;   // candidates tried per unbounded existential
  std::vector<Rat> atom_pool;  // atom values the generator may draw from
  long max_rank = 3;           // rank cap on generated candidates
  std::vector<HFRef> hints;    // tried first at every existential
};

// Outcome of the search: either the formula was established, together with a
// bounded certificate (all existential witnesses substituted as literals;
// eval_delta0(certificate, env, Lenient) is true), or nothing was found
// within budget -- which decides nothing.
struct SigmaResult {
  bool established = false;
  FormulaPtr certificate;
  std::map<std::string, HFRef> witnesses;  // by bound variable name
  long candidates_tried = 0;

  std::string str() const { return established ? "true" : "unknown"; }
};

// Semi-decision for the searchable fragment: sound for "true", never claims
// falsity. Throws std::invalid_argument when the formula is outside it.
SigmaResult eval_sigma(const FormulaPtr& f, const Env& env, const SearchBudget& budget);

// All canonical sets of the given tree size whose atoms come from the pool
// (used by the witness generator; exposed for tests and tooling).
std::vector<HFRef> sets_of_weight(size_t weight, const std::vector<Rat>& pool);

}  // namespace rbss
