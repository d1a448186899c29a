#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbss/formula.hpp"
#include "rbss/hfset.hpp"
#include "rbss/machine.hpp"
#include "rbss/rinf.hpp"

namespace rbss {

// Code of a finite tuple under the standard embedding: the sequence code of
// the state holding the length at coordinate 0 and the values at 1..n. Zero
// entries vanish, so the empty tuple codes as {} and (0) as its bare marker.
HFRef tuple_code(const RFin& tuple);

// Inverse: accepts exactly the sets tuple_code produces.
std::optional<RFin> tuple_decode(const HFRef& code);

// A function between real tuples presented by formulas. graph holds at
// (x, y) exactly when the function maps the tuple coded by x to the one
// coded by y; cograph, when present, holds exactly when it maps x somewhere
// else. Free variables are "x" and "y"; everything bound inside starts
// with "_".
struct SigmaFunctionDef {
  FormulaPtr graph;
  FormulaPtr cograph;          // null unless totality was declared
  std::optional<long> arity;   // input arity; null for variable-arity machines
};

// Compiles a machine into the formula "some set codes an accepting run on x
// ending with output y". The trace code is a set of (stage, configuration)
// pairs plus one (-1, scratch-pool) pair holding the intermediate values the
// step clauses need. The complement formula (same run, output differing
// from y) is only sound for machines that halt everywhere, so it is emitted
// only when the caller declares totality.
//
// Output lists are translated as written except that the length marker `n`
// may only appear as the single item [1..n]; other marker shapes throw
// std::invalid_argument.
SigmaFunctionDef graph_formula(const Machine& m, bool totality_declared);

// The honest witness for graph_formula's leading existential: the coded
// trace of an actual run, ready to pass as a search hint.
struct TraceWitness {
  HFRef code;                 // the trace code itself
  std::vector<HFRef> hints;   // everything the search needs, code included
  HFRef input_code;
  HFRef output_code;
  long stages = 0;            // index of the final (output) configuration
};

// Runs the machine and codes the trace; empty when the run does not end in
// an output within the fuel.
std::optional<TraceWitness> trace_witness(const Machine& m, const RFin& input, long fuel);

// Bounded formula: `whole` codes the concatenation of the tuples coded by
// `left` and `right`. Any terms may be supplied for the three slots.
FormulaPtr concat_relation(const TermPtr& left, const TermPtr& right, const TermPtr& whole);

// f after g: y = f(g(x)). The complement needs g total (its graph pins the
// intermediate value) and f's own complement.
SigmaFunctionDef compose_formula(const SigmaFunctionDef& f, const SigmaFunctionDef& g);

// x -> (f(x), g(x)) for equal input arities. The complement needs both
// totalities: it asserts y is not the concatenation of the two true outputs.
SigmaFunctionDef juxtapose_formula(const SigmaFunctionDef& f, const SigmaFunctionDef& g);

// Least-root search: f(x2..xk) = the least natural t with phi(t, x2..xk) = 0.
// Needs phi's complement to state that no earlier stage vanishes. The stage
// set {0..t-1} is carried as a bound set of atoms whose arithmetic chain
// forces t to be a genuine natural.
SigmaFunctionDef mu_formula(const SigmaFunctionDef& phi);

// Primitive recursion: f(0, params) = g(params), f(s+1, params) =
// h(s, f(s, params), params), via a coded course-of-values chain whose
// stage s cell carries {f(s, params)} (zero values kept: the chain is a
// private table, not a sequence code). g and h must both carry complements,
// which is the totality evidence the chain needs.
SigmaFunctionDef primrec_formula(const SigmaFunctionDef& g, const SigmaFunctionDef& h);

}  // namespace rbss
