#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbss/poly.hpp"

namespace rbss {

// Reserved id for the (unique, implicit) input node.
inline constexpr const char* kInputNodeId = "@input";

// One item of an output node's coordinate list: a plain index or a range.
// A range bound is either a literal integer or `n`, the value the machine
// holds at coordinate 0 when the output node is reached.
struct OutBound {
  bool is_marker = false;  // true: resolve from coordinate 0 at output time
  long value = 0;
};

struct OutItem {
  bool is_range = false;
  long index = 0;  // when !is_range
  OutBound lo, hi;
};

struct Node {
  enum class Kind { Compute, Branch, Shift, Output };
  std::string id;
  Kind kind;

  // Compute: simultaneous assignments target -> rational function of the
  // current coordinates; the key set is the rational map's window.
  std::map<long, RatFun> assigns;
  std::string next;  // successor for Compute and Shift

  // Branch: edge taken is `on_nonneg` when test >= 0, else `on_neg`.
  Poly test;
  std::string on_nonneg, on_neg;

  // Shift
  bool shifts_left = true;

  // Output
  std::vector<OutItem> outputs;
};

struct Machine {
  std::string name = "machine";
  std::optional<long> arity;  // nullopt: declared variable-arity ('*')
  std::string entry;          // node the input edge points to
  std::map<std::string, Node> nodes;

  const Node& node(const std::string& id) const;
};

struct Diagnostic {
  int line = 0;
  std::string message;
};

class MachineParseError : public std::runtime_error {
 public:
  explicit MachineParseError(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  static std::string format(const std::vector<Diagnostic>& diags);
  std::vector<Diagnostic> diags_;
};

// Parses the machine description language. Collects every syntax and
// validation violation (with line numbers) before throwing.
Machine parse_machine(const std::string& text);

}  // namespace rbss
