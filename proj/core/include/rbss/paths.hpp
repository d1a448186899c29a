#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbss/interp.hpp"
#include "rbss/machine.hpp"

namespace rbss {

// A sign/definedness constraint on a rational function of the input
// variables x1..xarity. With f = p/q the semantics at an input point are:
//   NonNeg:  q != 0 and p*q >= 0      (f defined and f >= 0)
//   Neg:     q != 0 and p*q < 0       (f defined and f < 0)
//   NonZero: q != 0 and p != 0        (f defined and f != 0)
struct PathCondition {
  enum class Kind { NonNeg, Neg, NonZero };
  Kind kind;
  RatFun fn;

  std::string str() const;
};

// One control path from the input node to an output node, with the exact
// conditions an input must satisfy to follow it and the outputs it yields.
struct PathSpec {
  long arity = 0;
  std::vector<std::string> nodes;
  std::vector<PathCondition> conditions;
  std::vector<RatFun> outputs;
};

// All paths of at most `depth` visited nodes from the input node to an
// output node, for the given input arity. Branches whose test is constant
// along the path are folded rather than forked; other paths may still carry
// unsatisfiable condition sets. Distinct paths are mutually exclusive.
// Throws std::invalid_argument when the machine declares a different arity,
// and std::runtime_error if an output range bound depends on the input.
std::vector<PathSpec> enumerate_paths(const Machine& m, long arity, long depth);

// Exact membership test: the outputs if `input` satisfies every condition,
// nullopt otherwise. Throws std::invalid_argument on arity mismatch.
std::optional<RFin> eval_path(const PathSpec& p, const RFin& input);

}  // namespace rbss
