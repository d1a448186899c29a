#include "rbss/interp.hpp"

#include <sstream>
#include <stdexcept>

namespace rbss {

namespace {
// Hard cap on materialized output length; beyond this the output list is
// treated as malformed rather than exhausting memory.
constexpr long kMaxOutputLen = 1l << 20;
}  // namespace

RunResult RunResult::make_output(RFin v) {
  RunResult r;
  r.kind = Kind::Output;
  r.output = std::move(v);
  return r;
}

RunResult RunResult::make_undefined(UndefinedReason reason) {
  RunResult r;
  r.kind = Kind::Undefined;
  r.reason = reason;
  return r;
}

RunResult RunResult::make_diverged(long fuel) {
  RunResult r;
  r.kind = Kind::Diverged;
  r.fuel = fuel;
  return r;
}

bool operator==(const RunResult& a, const RunResult& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RunResult::Kind::Output:
      return a.output == b.output;
    case RunResult::Kind::Undefined:
      return a.reason == b.reason;
    case RunResult::Kind::Diverged:
      return a.fuel == b.fuel;
  }
  return false;
}

std::string RunResult::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Output: {
      os << "output(";
      for (size_t i = 0; i < output.size(); ++i) {
        if (i) os << ", ";
        os << output[i].str();
      }
      os << ')';
      break;
    }
    case Kind::Undefined:
      os << "undefined("
         << (reason == UndefinedReason::DivisionByZero ? "division-by-zero" : "malformed-output")
         << ')';
      break;
    case Kind::Diverged:
      os << "diverged(" << fuel << ')';
      break;
  }
  return os.str();
}

Configuration initial_configuration(const Machine& m, const RFin& input) {
  if (m.arity && *m.arity != static_cast<long>(input.size()))
    throw std::invalid_argument("machine '" + m.name + "' expects arity " +
                                std::to_string(*m.arity) + ", got " +
                                std::to_string(input.size()));
  return Configuration{kInputNodeId, RInf::embed_input(input), 0};
}

namespace {

std::variant<RFin, RunResult::UndefinedReason> resolve_output(const Node& n, const RInf& state) {
  RFin out;
  auto resolve_bound = [&](const OutBound& b, long& v) -> bool {
    if (!b.is_marker) {
      v = b.value;
      return true;
    }
    const Rat& marker = state.get(0);
    auto iv = marker.as_long();
    if (!iv || *iv < 0) return false;
    v = *iv;
    return true;
  };
  for (const auto& item : n.outputs) {
    if (!item.is_range) {
      out.push_back(state.get(item.index));
      continue;
    }
    long lo = 0, hi = 0;
    if (!resolve_bound(item.lo, lo) || !resolve_bound(item.hi, hi))
      return RunResult::UndefinedReason::MalformedOutput;
    if (hi < lo) continue;  // empty range contributes nothing
    if (hi - lo + 1 > kMaxOutputLen ||
        static_cast<long>(out.size()) + (hi - lo + 1) > kMaxOutputLen)
      return RunResult::UndefinedReason::MalformedOutput;
    for (long i = lo; i <= hi; ++i) out.push_back(state.get(i));
  }
  return out;
}

}  // namespace

StepOutcome step(const Machine& m, const Configuration& c) {
  if (c.node == kInputNodeId) {
    // The embedding was applied when the configuration was formed; the input
    // node then hands over to its unique successor.
    return Configuration{m.entry, c.state, c.step_count + 1};
  }
  const Node& n = m.node(c.node);
  switch (n.kind) {
    case Node::Kind::Compute: {
      auto lookup = [&](long i) { return c.state.get(i); };
      RInf next = c.state;
      for (const auto& [target, fn] : n.assigns) {
        Rat den = fn.den.eval(lookup);
        if (den.is_zero())
          return RunResult::make_undefined(RunResult::UndefinedReason::DivisionByZero);
        next.set(target, fn.num.eval(lookup) / den);
      }
      return Configuration{n.next, std::move(next), c.step_count + 1};
    }
    case Node::Kind::Branch: {
      auto lookup = [&](long i) { return c.state.get(i); };
      Rat h = n.test.eval(lookup);
      const std::string& target = h.sign() >= 0 ? n.on_nonneg : n.on_neg;
      return Configuration{target, c.state, c.step_count + 1};
    }
    case Node::Kind::Shift:
      return Configuration{n.next, n.shifts_left ? c.state.shift_left() : c.state.shift_right(),
                           c.step_count + 1};
    case Node::Kind::Output: {
      auto r = resolve_output(n, c.state);
      if (std::holds_alternative<RFin>(r))
        return RunResult::make_output(std::get<RFin>(std::move(r)));
      return RunResult::make_undefined(std::get<RunResult::UndefinedReason>(r));
    }
  }
  throw std::logic_error("unreachable node kind");
}

Trace trace(const Machine& m, const RFin& input, long fuel) {
  if (fuel < 1) throw std::invalid_argument("fuel must be at least 1");
  Trace t;
  t.machine = m.name;
  t.steps.push_back(initial_configuration(m, input));
  while (true) {
    StepOutcome next = step(m, t.steps.back());
    if (std::holds_alternative<RunResult>(next)) {
      t.result = std::get<RunResult>(std::move(next));
      return t;
    }
    if (static_cast<long>(t.steps.size()) == fuel) {
      t.result = RunResult::make_diverged(fuel);
      return t;
    }
    t.steps.push_back(std::get<Configuration>(std::move(next)));
  }
}

RunResult run(const Machine& m, const RFin& input, long fuel) {
  if (fuel < 1) throw std::invalid_argument("fuel must be at least 1");
  Configuration c = initial_configuration(m, input);
  long visited = 1;
  while (true) {
    StepOutcome next = step(m, c);
    if (std::holds_alternative<RunResult>(next)) return std::get<RunResult>(std::move(next));
    if (visited == fuel) return RunResult::make_diverged(fuel);
    c = std::get<Configuration>(std::move(next));
    ++visited;
  }
}

}  // namespace rbss
