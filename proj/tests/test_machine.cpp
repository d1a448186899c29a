#include "doctest.h"
#include "rbss/interp.hpp"
#include "rbss/machine.hpp"
#include "rbss/rinf.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace rbss;

static std::string load_fixture(const std::string& name) {
  std::ifstream in(std::string(RBSS_FIXTURES_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

static Machine fixture(const std::string& name) { return parse_machine(load_fixture(name)); }

TEST_CASE("sparse sequence basics") {
  RInf s = RInf::from_entries({{1, Rat(7)}});
  CHECK(s.shift_left() == RInf::from_entries({{0, Rat(7)}}));
  CHECK(s.shift_right() == RInf::from_entries({{2, Rat(7)}}));
  CHECK(s.get(1) == Rat(7));
  CHECK(s.get(5) == Rat(0));
  CHECK(s.get(-3) == Rat(0));

  s.set(1, Rat(0));  // zeroing drops the entry entirely
  CHECK(s.empty());
  s.set(-2, Rat(1, 3));
  CHECK(s.support_size() == 1);
  CHECK(s.str() == "{-2: 1/3}");

  CHECK(RInf::embed_input({}) == RInf());
  CHECK(RInf::embed_input({Rat(5), Rat(0), Rat(7)}) ==
        RInf::from_entries({{0, Rat(3)}, {1, Rat(5)}, {3, Rat(7)}}));
}

TEST_CASE("parsing a well-formed machine") {
  Machine m = fixture("sq.bssm");
  CHECK(m.name == "sq");
  CHECK(m.arity == 1);
  CHECK(m.entry == "body");
  CHECK(m.nodes.size() == 2);
  CHECK(m.node("body").kind == Node::Kind::Compute);
  CHECK(m.node("body").next == "done");
  CHECK(m.node("done").kind == Node::Kind::Output);
  CHECK_THROWS_AS(m.node("nope"), std::out_of_range);

  Machine id = fixture("id.bssm");
  CHECK(!id.arity.has_value());  // declared with '*'
  const Node& out = id.node("out");
  REQUIRE(out.outputs.size() == 1);
  CHECK(out.outputs[0].is_range);
  CHECK(out.outputs[0].lo.value == 1);
  CHECK(out.outputs[0].hi.is_marker);
}

TEST_CASE("unknown goto target is reported at the offending line") {
  const char* text =
      "machine bad\n"
      "input 1 -> a\n"
      "node a compute x1 := x1 goto b\n";
  try {
    parse_machine(text);
    FAIL("expected a parse error");
  } catch (const MachineParseError& e) {
    REQUIRE(e.diagnostics().size() == 1);
    CHECK(e.diagnostics()[0].line == 3);
    CHECK(e.diagnostics()[0].message.find("unknown node 'b'") != std::string::npos);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("all syntax errors are collected in one pass") {
  const char* text =
      "machine syn\n"
      "input 1 -> ok\n"
      "node bad1 compute x1 := (x1 goto ok\n"
      "node bad2 compute x1 := x1 gotoo ok\n"
      "node ok output [1]\n";
  try {
    parse_machine(text);
    FAIL("expected a parse error");
  } catch (const MachineParseError& e) {
    REQUIRE(e.diagnostics().size() == 2);
    CHECK(e.diagnostics()[0].line == 3);
    CHECK(e.diagnostics()[1].line == 4);
    CHECK(std::string(e.what()).find("2 errors") != std::string::npos);
  }
}

TEST_CASE("structural validation") {
  auto diag_of = [](const char* text) {
    try {
      parse_machine(text);
      return Diagnostic{-1, "no error"};
    } catch (const MachineParseError& e) {
      REQUIRE(e.diagnostics().size() == 1);
      return e.diagnostics()[0];
    }
  };

  SUBCASE("unreachable node") {
    Diagnostic d = diag_of(
        "machine island\n"
        "input 1 -> out\n"
        "node out output [1]\n"
        "node lost compute x1 := x1 goto lost\n");
    CHECK(d.line == 4);
    CHECK(d.message.find("not reachable") != std::string::npos);
  }
  SUBCASE("duplicate node id") {
    Diagnostic d = diag_of(
        "machine dup\n"
        "input 1 -> a\n"
        "node a output [1]\n"
        "node a output [1]\n");
    CHECK(d.line == 4);
    CHECK(d.message.find("duplicate node id") != std::string::npos);
  }
  SUBCASE("second input line") {
    Diagnostic d = diag_of(
        "machine twoin\n"
        "input 1 -> a\n"
        "input 2 -> a\n"
        "node a output [1]\n");
    CHECK(d.line == 3);
    CHECK(d.message.find("unique input node") != std::string::npos);
  }
  SUBCASE("missing input line") {
    Diagnostic d = diag_of("machine noin\nnode a output [1]\n");
    CHECK(d.message.find("missing 'input'") != std::string::npos);
  }
  SUBCASE("input edge to nowhere") {
    Diagnostic d = diag_of("machine gone\ninput 1 -> ghost\n");
    CHECK(d.line == 2);
    CHECK(d.message.find("unknown node 'ghost'") != std::string::npos);
  }
  SUBCASE("branch test must not divide by coordinates") {
    Diagnostic d = diag_of(
        "machine divtest\n"
        "input 1 -> t\n"
        "node t branch 1/x1 ? a : b\n"
        "node a output [1]\n"
        "node b output [1]\n");
    CHECK(d.line == 3);
    CHECK(d.message.find("polynomial") != std::string::npos);
  }
  SUBCASE("reserved node id") {
    Diagnostic d = diag_of(
        "machine res\n"
        "input 1 -> ok\n"
        "node ok output [1]\n"
        "node @input output [1]\n");
    CHECK(d.line == 4);
    CHECK(d.message.find("reserved") != std::string::npos);
  }
}

TEST_CASE("branch tests may divide by constants") {
  Machine m = parse_machine(
      "machine halftest\n"
      "input 1 -> t\n"
      "node t branch x1/2 - 1/2 ? a : b\n"
      "node a compute x1 := 1 goto out\n"
      "node b compute x1 := 0 goto out\n"
      "node out output [1]\n");
  CHECK(run(m, {Rat(1)}, 100) == RunResult::make_output({Rat(1)}));
  CHECK(run(m, {Rat(99, 100)}, 100) == RunResult::make_output({Rat(0)}));
}

TEST_CASE("squaring: full trace shape") {
  Machine m = fixture("sq.bssm");
  Trace t = trace(m, {Rat(3)}, 10);
  REQUIRE(t.steps.size() == 3);
  CHECK(t.steps[0].node == kInputNodeId);
  CHECK(t.steps[0].state == RInf::from_entries({{0, Rat(1)}, {1, Rat(3)}}));
  CHECK(t.steps[0].step_count == 0);
  CHECK(t.steps[1].node == "body");
  CHECK(t.steps[1].state == t.steps[0].state);
  CHECK(t.steps[2].node == "done");
  CHECK(t.steps[2].state == RInf::from_entries({{0, Rat(1)}, {1, Rat(9)}}));
  CHECK(t.result == RunResult::make_output({Rat(9)}));

  // three configurations suffice; two do not
  CHECK(run(m, {Rat(3)}, 3) == RunResult::make_output({Rat(9)}));
  CHECK(run(m, {Rat(3)}, 2) == RunResult::make_diverged(2));
  CHECK(run(m, {Rat(-5, 2)}, 10) == RunResult::make_output({Rat(25, 4)}));
}

TEST_CASE("fuel exhaustion on a loop") {
  Machine m = fixture("loop.bssm");
  Trace t = trace(m, {Rat(0)}, 5);
  CHECK(t.steps.size() == 5);
  CHECK(t.result == RunResult::make_diverged(5));
  CHECK(t.result.str() == "diverged(5)");
  CHECK(t.steps[4].node == "spin");
  CHECK(t.steps[4].state.get(1) == Rat(3));  // incremented three times by then
  CHECK(run(m, {Rat(0)}, 1000) == RunResult::make_diverged(1000));
}

TEST_CASE("division by zero is undefined, not fatal") {
  Machine m = fixture("recip.bssm");
  CHECK(run(m, {Rat(4)}, 10) == RunResult::make_output({Rat(1, 4)}));
  RunResult r = run(m, {Rat(0)}, 10);
  CHECK(r == RunResult::make_undefined(RunResult::UndefinedReason::DivisionByZero));
  CHECK(r.str() == "undefined(division-by-zero)");
}

TEST_CASE("branch takes the nonnegative edge at zero") {
  Machine m = fixture("abs.bssm");
  CHECK(run(m, {Rat(-3)}, 10) == RunResult::make_output({Rat(3)}));
  CHECK(run(m, {Rat(7, 2)}, 10) == RunResult::make_output({Rat(7, 2)}));
  Trace t = trace(m, {Rat(0)}, 10);
  REQUIRE(t.steps.size() == 3);  // @input, test, done -- no flip on the boundary
  CHECK(t.steps[2].node == "done");
  CHECK(t.result == RunResult::make_output({Rat(0)}));
}

TEST_CASE("shift moves the window") {
  Machine m = fixture("sumshift.bssm");
  CHECK(run(m, {Rat(4), Rat(9)}, 10) == RunResult::make_output({Rat(13)}));
  CHECK(run(m, {Rat(1, 3), Rat(1, 6)}, 10) == RunResult::make_output({Rat(1, 2)}));
}

TEST_CASE("assignments in one node are simultaneous") {
  Machine m = fixture("swap.bssm");
  CHECK(run(m, {Rat(2), Rat(9)}, 10) == RunResult::make_output({Rat(9), Rat(2)}));
}

TEST_CASE("variable arity with dynamic output range") {
  Machine m = fixture("id.bssm");
  CHECK(run(m, {Rat(5), Rat(7)}, 10) == RunResult::make_output({Rat(5), Rat(7)}));
  CHECK(run(m, {}, 10) == RunResult::make_output({}));
  CHECK(run(m, {Rat(0), Rat(1, 2), Rat(0)}, 10) ==
        RunResult::make_output({Rat(0), Rat(1, 2), Rat(0)}));
}

TEST_CASE("fold loop over a variable-length input") {
  Machine m = fixture("sum.bssm");
  CHECK(run(m, {}, 100) == RunResult::make_output({Rat(0)}));
  CHECK(run(m, {Rat(5)}, 100) == RunResult::make_output({Rat(5)}));
  CHECK(run(m, {Rat(5), Rat(7), Rat(2)}, 100) == RunResult::make_output({Rat(14)}));
  CHECK(run(m, {Rat(1, 2), Rat(1, 3), Rat(1, 6)}, 100) == RunResult::make_output({Rat(1)}));
}

TEST_CASE("helper machines for later constructions") {
  CHECK(run(fixture("max0.bssm"), {Rat(5, 2), Rat(3)}, 100) ==
        RunResult::make_output({Rat(0)}));
  CHECK(run(fixture("max0.bssm"), {Rat(3), Rat(5, 2)}, 100) ==
        RunResult::make_output({Rat(1, 2)}));

  Machine unit = fixture("unit.bssm");
  CHECK(run(unit, {Rat(0)}, 100) == RunResult::make_output({Rat(1)}));
  CHECK(run(unit, {Rat(1)}, 100) == RunResult::make_output({Rat(1)}));
  CHECK(run(unit, {Rat(1, 2)}, 100) == RunResult::make_output({Rat(1)}));
  CHECK(run(unit, {Rat(-1, 1000000)}, 100) == RunResult::make_output({Rat(0)}));
  CHECK(run(unit, {Rat(1000001, 1000000)}, 100) == RunResult::make_output({Rat(0)}));

  CHECK(run(fixture("const1.bssm"), {Rat(99)}, 100) == RunResult::make_output({Rat(1)}));
  CHECK(run(fixture("stepmul.bssm"), {Rat(5), Rat(3), Rat(2)}, 100) ==
        RunResult::make_output({Rat(6)}));
}

TEST_CASE("malformed dynamic output bounds") {
  // the machine scribbles over coordinate 0 before reaching the output node
  auto with_marker = [](const char* expr) {
    return parse_machine(std::string("machine mo\n"
                                     "input 1 -> set\n"
                                     "node set compute x0 := ") +
                         expr + " goto out\n" + "node out output [1..n]\n");
  };
  auto undef = RunResult::make_undefined(RunResult::UndefinedReason::MalformedOutput);
  CHECK(run(with_marker("1/2"), {Rat(4)}, 10) == undef);
  CHECK(run(with_marker("0 - 1"), {Rat(4)}, 10) == undef);
  CHECK(run(with_marker("1048577"), {Rat(4)}, 10) == undef);  // over the length cap
  CHECK(run(with_marker("1/2"), {Rat(4)}, 10).str() == "undefined(malformed-output)");

  // an honest zero-length window is fine: it denotes the empty tuple
  CHECK(run(with_marker("0"), {Rat(4)}, 10) == RunResult::make_output({}));
}

TEST_CASE("arity and fuel misuse throw") {
  Machine m = fixture("sq.bssm");
  CHECK_THROWS_AS(run(m, {Rat(1), Rat(2)}, 10), std::invalid_argument);
  CHECK_THROWS_AS(run(m, {}, 10), std::invalid_argument);
  CHECK_THROWS_AS(run(m, {Rat(1)}, 0), std::invalid_argument);
  CHECK_THROWS_AS(trace(m, {Rat(1)}, -3), std::invalid_argument);
}
