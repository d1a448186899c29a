#include "doctest.h"
#include "rbss/interp.hpp"
#include "rbss/machine.hpp"
#include "rbss/paths.hpp"
#include "rbss/poly.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace rbss;

static Machine fixture(const std::string& name) {
  std::ifstream in(std::string(RBSS_FIXTURES_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_machine(os.str());
}

TEST_CASE("polynomial arithmetic and printing") {
  Poly p = Poly::var(1).pow(2) - Poly::constant(Rat(2, 3)) * Poly::var(2) + Poly::constant(1);
  CHECK(p.str() == "1 + x1^2 - 2/3*x2");
  CHECK(Poly().str() == "0");
  CHECK(Poly().is_zero());
  CHECK((Poly::var(1) - Poly::var(1)).is_zero());
  CHECK((Poly::var(2).pow(3) * Poly::var(1)).str() == "x1*x2^3");

  auto at = [](Rat a, Rat b) {
    return [a, b](long i) { return i == 1 ? a : i == 2 ? b : Rat(0); };
  };
  CHECK(p.eval(at(Rat(3), Rat(6))) == Rat(6));  // 1 + 9 - 4
  CHECK(p.eval(at(Rat(1, 2), Rat(0))) == Rat(5, 4));

  // (x1 + 1)(x1 - 1) = x1^2 - 1
  Poly prod = (Poly::var(1) + Poly::constant(1)) * (Poly::var(1) - Poly::constant(1));
  CHECK(prod == Poly::var(1).pow(2) - Poly::constant(1));
  CHECK(Poly::constant(Rat(7, 2)).const_value() == Rat(7, 2));
  CHECK_THROWS_AS(Poly::var(1).const_value(), std::logic_error);
}

TEST_CASE("rational functions") {
  RatFun f = RatFun::var(1).reciprocal();
  CHECK(f.str() == "(1) / (x1)");
  CHECK((RatFun::var(1) * RatFun::var(1)).normalized().str() == "x1^2");

  // constant denominators fold away on normalization
  RatFun g{Poly::var(1), Poly::constant(2)};
  CHECK(g.normalized().str() == "1/2*x1");

  // substitute x1 := 1/x2 into x1^2 + 1
  std::map<long, RatFun> env{{1, RatFun::var(2).reciprocal()}};
  RatFun s = subst(Poly::var(1).pow(2) + Poly::constant(1), env);
  CHECK(s.num.eval([](long) { return Rat(3); }) / s.den.eval([](long) { return Rat(3); }) ==
        Rat(10, 9));
}

TEST_CASE("straight-line machine has one condition-free path") {
  Machine m = fixture("sq.bssm");
  auto paths = enumerate_paths(m, 1, 10);
  REQUIRE(paths.size() == 1);
  const PathSpec& p = paths[0];
  CHECK(p.arity == 1);
  CHECK(p.nodes == std::vector<std::string>{kInputNodeId, "body", "done"});
  CHECK(p.conditions.empty());
  REQUIRE(p.outputs.size() == 1);
  CHECK(p.outputs[0].str() == "x1^2");
  CHECK(eval_path(p, {Rat(3)}) == RFin{Rat(9)});
  CHECK(eval_path(p, {Rat(-5, 2)}) == RFin{Rat(25, 4)});

  // too little depth: the output node is out of reach
  CHECK(enumerate_paths(m, 1, 2).empty());
}

TEST_CASE("branching yields complementary conditions") {
  Machine m = fixture("abs.bssm");
  auto paths = enumerate_paths(m, 1, 10);
  REQUIRE(paths.size() == 2);
  // the >= 0 edge is explored first
  REQUIRE(paths[0].conditions.size() == 1);
  REQUIRE(paths[1].conditions.size() == 1);
  CHECK(paths[0].conditions[0].str() == "x1 >= 0");
  CHECK(paths[1].conditions[0].str() == "x1 < 0");
  CHECK(paths[0].outputs[0].str() == "x1");
  CHECK(paths[1].outputs[0].str() == "-x1");

  // the boundary point satisfies exactly the nonnegative path
  CHECK(eval_path(paths[0], {Rat(0)}) == RFin{Rat(0)});
  CHECK(!eval_path(paths[1], {Rat(0)}).has_value());
}

TEST_CASE("division records a definedness condition") {
  Machine m = fixture("recip.bssm");
  auto paths = enumerate_paths(m, 1, 10);
  REQUIRE(paths.size() == 1);
  REQUIRE(paths[0].conditions.size() == 1);
  CHECK(paths[0].conditions[0].kind == PathCondition::Kind::NonZero);
  CHECK(paths[0].conditions[0].str() == "x1 != 0");
  CHECK(paths[0].outputs[0].str() == "(1) / (x1)");
  CHECK(eval_path(paths[0], {Rat(4)}) == RFin{Rat(1, 4)});
  CHECK(!eval_path(paths[0], {Rat(0)}).has_value());
}

TEST_CASE("constant branch tests fold instead of forking") {
  Machine m = fixture("sum.bssm");
  auto paths = enumerate_paths(m, 2, 50);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].nodes.size() == 11);  // three passes through 'test', two folds
  CHECK(paths[0].conditions.empty());
  CHECK(eval_path(paths[0], {Rat(4), Rat(9)}) == RFin{Rat(13)});

  auto zero = enumerate_paths(m, 0, 50);
  REQUIRE(zero.size() == 1);
  CHECK(eval_path(zero[0], {}) == RFin{Rat(0)});
}

TEST_CASE("dynamic output ranges resolve when the length is path-constant") {
  Machine m = fixture("id.bssm");
  auto paths = enumerate_paths(m, 3, 10);
  REQUIRE(paths.size() == 1);
  REQUIRE(paths[0].outputs.size() == 3);
  CHECK(eval_path(paths[0], {Rat(1), Rat(2), Rat(3)}) == RFin{Rat(1), Rat(2), Rat(3)});
  CHECK(enumerate_paths(m, 0, 10)[0].outputs.empty());

  // but a marker that varies with the input has no symbolic reading
  Machine bad = parse_machine(
      "machine varlen\n"
      "input 1 -> set\n"
      "node set compute x0 := x1 goto out\n"
      "node out output [1..n]\n");
  CHECK_THROWS_AS(enumerate_paths(bad, 1, 10), std::runtime_error);
}

TEST_CASE("machines without reachable output have no paths") {
  CHECK(enumerate_paths(fixture("loop.bssm"), 1, 40).empty());
}

TEST_CASE("eval_path rejects wrong arity") {
  auto paths = enumerate_paths(fixture("sq.bssm"), 1, 10);
  CHECK_THROWS_AS(eval_path(paths[0], {Rat(1), Rat(2)}), std::invalid_argument);
}

// run() and the path semantics must tell the same story: an input produces
// output v exactly when exactly one enumerated path accepts it with value v
static void check_agreement(const Machine& m, const std::vector<PathSpec>& paths,
                            const RFin& in) {
  RunResult r = run(m, in, 2000);
  int hits = 0;
  RFin got;
  for (const auto& p : paths) {
    auto v = eval_path(p, in);
    if (v) {
      ++hits;
      got = *v;
    }
  }
  CHECK(hits <= 1);  // mutual exclusivity, empirically
  if (r.is_output()) {
    CHECK(hits == 1);
    CHECK(got == r.output);
  } else {
    CHECK(hits == 0);
  }
}

TEST_CASE("path semantics agree with execution on a sample grid") {
  const std::vector<Rat> grid = {Rat(-3),   Rat(-1), Rat(-1, 2), Rat(0),
                                 Rat(1, 3), Rat(1),  Rat(5, 2),  Rat(4)};
  auto sweep = [&](const char* name, long arity) {
    Machine m = fixture(name);
    auto paths = enumerate_paths(m, arity, 60);
    std::vector<size_t> idx(static_cast<size_t>(arity), 0);
    while (true) {
      RFin in;
      for (size_t j : idx) in.push_back(grid[j]);
      check_agreement(m, paths, in);
      size_t k = 0;
      for (; k < idx.size(); ++k) {
        if (++idx[k] < grid.size()) break;
        idx[k] = 0;
      }
      if (k == idx.size()) break;
    }
  };
  sweep("sq.bssm", 1);
  sweep("abs.bssm", 1);
  sweep("recip.bssm", 1);
  sweep("unit.bssm", 1);
  sweep("loop.bssm", 1);
  sweep("max0.bssm", 2);
  sweep("sumshift.bssm", 2);
  sweep("swap.bssm", 2);
  sweep("sum.bssm", 2);
  sweep("sum.bssm", 3);
  sweep("stepmul.bssm", 3);
}
