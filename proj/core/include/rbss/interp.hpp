#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rbss/machine.hpp"
#include "rbss/rinf.hpp"

namespace rbss {

struct Configuration {
  std::string node;
  RInf state;
  long step_count = 0;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.node == b.node && a.state == b.state && a.step_count == b.step_count;
  }
};

struct RunResult {
  enum class Kind { Output, Undefined, Diverged };
  enum class UndefinedReason { DivisionByZero, MalformedOutput };

  Kind kind = Kind::Diverged;
  RFin output;               // Kind::Output
  UndefinedReason reason = UndefinedReason::DivisionByZero;
  long fuel = 0;             // Kind::Diverged

  static RunResult make_output(RFin v);
  static RunResult make_undefined(UndefinedReason r);
  static RunResult make_diverged(long fuel);

  bool is_output() const { return kind == Kind::Output; }
  std::string str() const;

  friend bool operator==(const RunResult& a, const RunResult& b);
};

struct Trace {
  std::string machine;
  std::vector<Configuration> steps;
  RunResult result;
};

// The input embedding happens here: the initial configuration sits at the
// input node with the standard embedding of `input` as its state.
// Throws std::invalid_argument when the machine declares a different arity.
Configuration initial_configuration(const Machine& m, const RFin& input);

// One transition. Yields either the successor configuration or, from an
// output node (or on a failing computation), the terminal result.
using StepOutcome = std::variant<Configuration, RunResult>;
StepOutcome step(const Machine& m, const Configuration& c);

// Runs until termination or until `fuel` configurations have been visited.
RunResult run(const Machine& m, const RFin& input, long fuel);

// Like run, but records every visited configuration.
Trace trace(const Machine& m, const RFin& input, long fuel);

}  // namespace rbss
