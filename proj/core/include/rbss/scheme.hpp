#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbss/eval.hpp"
#include "rbss/machine.hpp"
#include "rbss/sigma.hpp"

namespace rbss {

// One named relation of a presented structure. Machine-backed relations keep
// the decider around for witness hints and direct evaluation; their formulas
// take the coded argument tuple through the free variable "x". Relations
// supplied as bare formulas use "x1".."xk" bound to value singletons instead.
struct SchemeRelation {
  std::string name;
  long arity = 0;
  FormulaPtr pos;                  // establishes membership
  FormulaPtr neg;                  // establishes the complement; may be null
  std::optional<Machine> machine;  // present when backed by a decider
};

// A structure presented inside the hereditarily finite sets: carrier
// membership and exclusion (psi0 / psi0_star, free variable "x"), the
// congruence fixed to equality (psi1 / psi1_star, free "x1", "x2"), and one
// formula pair per relation.
struct SigmaScheme {
  FormulaPtr psi0;
  FormulaPtr psi0_star;
  FormulaPtr psi1;
  FormulaPtr psi1_star;
  std::vector<SchemeRelation> phi;
  std::optional<Machine> universe;

  const SchemeRelation* find(const std::string& name) const;
};

// Builds the scheme from total deciders (inclusion in the map is the
// totality declaration). The carrier decider must sit under the key "U";
// every machine needs a fixed arity, the universe arity 1. Membership
// formulas are the machines' graphs pinned at output (1), the starred ones
// pinned at output (0).
SigmaScheme structure_presentation(const std::map<std::string, Machine>& machines);

// Budgeted semi-decision of relation(args) in the presented structure.
// Arguments arrive as codes of single register states (value at coordinate
// 0); every argument is first gated through psi0 with a fresh universe run
// as the hint. Never throws: unknown relation names, arity mismatches, and
// undecodable arguments all come back not-established.
SigmaResult sigma_semidecide(const SigmaScheme& scheme, const std::string& relation,
                             const std::vector<HFRef>& args, const SearchBudget& budget,
                             bool complement = false);

// A point of the witness-paired companion structure: the carrier tuple the
// point stands for plus the register state whose code satisfied the carrier
// matrix. Equality ignores the witness.
struct MPrimeElement {
  std::vector<HFRef> carrier;
  RInf witness;
};

// Enumerates companion points: candidate carrier codes and witness states
// are built from the budget's atom pool, and a pair survives when the
// carrier matrix (free "x1".."xk" plus "w" for the coded witness) holds.
// The matrix must be bounded -- this layer never searches.
std::vector<MPrimeElement> build_m_prime(const SigmaScheme& scheme,
                                         const FormulaPtr& psi0_matrix,
                                         const SearchBudget& bound);

bool m_prime_equal(const MPrimeElement& a, const MPrimeElement& b);

// Atomic relation evaluation on companion points: machine-backed relations
// run their decider on the values the carriers stand for, formula-backed
// ones must be bounded and are evaluated directly.
bool m_prime_holds(const SigmaScheme& scheme, const std::string& relation,
                   const std::vector<MPrimeElement>& elements, long fuel = 512);

}  // namespace rbss
