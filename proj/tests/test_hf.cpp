#include "doctest.h"
#include "rbss/eval.hpp"
#include "rbss/formula.hpp"
#include "rbss/hfset.hpp"

#include <stdexcept>

using namespace rbss;

static HFRef A(long v) { return HFSet::atom(Rat(v)); }
static HFRef S(std::vector<HFRef> e) { return HFSet::set(std::move(e)); }
static const HFRef& E() { return HFSet::empty_set(); }

TEST_CASE("construction canonicalizes: sorted, duplicate-free") {
  CHECK(hf_equal(S({E(), E()}), S({E()})));
  // {{1},{0}} normalizes to {{0},{1}}
  HFRef x = S({S({A(1)}), S({A(0)})});
  CHECK(x->elems().size() == 2);
  CHECK(hf_equal(x->elems()[0], S({A(0)})));
  CHECK(hf_equal(x->elems()[1], S({A(1)})));
  // order independence all the way down
  CHECK(hf_equal(S({E(), S({E()})}), S({S({E()}), E()})));
  CHECK(S({E(), S({E()})})->hash() == S({S({E()}), E()})->hash());
  // same value, same canonical object contents
  CHECK(!hf_equal(S({A(0)}), S({A(1)})));
  CHECK(hf_equal(S({A(2), A(2)}), S({A(2)})));
}

TEST_CASE("canonical total order") {
  // atoms before sets; atoms by value; sets lexicographically, prefix first
  CHECK(hf_compare(A(-1), A(2)) < 0);
  CHECK(hf_compare(A(5), E()) < 0);
  CHECK(hf_compare(E(), S({E()})) < 0);
  CHECK(hf_compare(S({A(1)}), S({A(2)})) < 0);
  CHECK(hf_compare(S({A(1)}), S({A(1), A(2)})) < 0);
  CHECK(hf_compare(S({A(1)}), S({E()})) < 0);
  CHECK(hf_compare(S({A(3)}), S({A(3)})) == 0);
}

TEST_CASE("rank and size bookkeeping") {
  CHECK(A(7)->rank() == 0);
  CHECK(E()->rank() == 0);
  CHECK(S({E()})->rank() == 1);
  CHECK(S({S({E()})})->rank() == 2);
  CHECK(S({A(1)})->rank() == 1);
  CHECK(S({A(1), S({E()})})->rank() == 2);

  CHECK(A(7)->node_count() == 1);
  CHECK(E()->node_count() == 1);
  CHECK(S({E()})->node_count() == 2);
  CHECK(S({A(1), S({A(2)})})->node_count() == 4);
}

TEST_CASE("membership") {
  CHECK(hf_member(E(), S({E()})));
  CHECK(!hf_member(S({E()}), E()));
  CHECK(hf_member(A(2), S({A(1), A(2)})));
  CHECK(!hf_member(A(3), S({A(1), A(2)})));
  CHECK(hf_member(S({E()}), S({S({E()})})));
  CHECK_THROWS_AS(hf_member(E(), A(1)), std::domain_error);
}

TEST_CASE("set text round trips") {
  CHECK(A(-22)->str() == "atom(-22)");
  CHECK(HFSet::atom(Rat(7, 3))->str() == "atom(7/3)");
  CHECK(E()->str() == "{}");
  CHECK(S({A(1), S({A(2)})})->str() == "{atom(1), {atom(2)}}");

  auto back = [](const HFRef& v) { return hf_equal(HFSet::parse(v->str()), v); };
  CHECK(back(E()));
  CHECK(back(A(0)));
  CHECK(back(S({A(1), S({A(2), E()}), S({E()})})));
  CHECK(hf_equal(HFSet::parse(" { atom(1/2) ,{} } "), S({HFSet::atom(Rat(1, 2)), E()})));

  CHECK_THROWS_AS(HFSet::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(HFSet::parse("{"), std::invalid_argument);
  CHECK_THROWS_AS(HFSet::parse("atom(x)"), std::invalid_argument);
  CHECK_THROWS_AS(HFSet::parse("{} junk"), std::invalid_argument);
}

TEST_CASE("formula text round trips") {
  const char* samples[] = {
      "(exists y (mul {y} {y} {atom(4)}))",
      "(bex u {atom(1), atom(2)} (in u {atom(2)}))",
      "(ball v {} (or (zero {v}) (one {v})))",
      "(and (less {atom(1)} {atom(2)}) (not (= x y)))",
      "(add {atom(1/2)} {atom(1/2)} {atom(1)})",
      "true",
      "false",
  };
  for (const char* s : samples) CHECK(parse_formula(s)->str() == s);

  // sugar normalizes to the canonical spelling
  CHECK(parse_formula("(member x {2})")->str() == "(in x {atom(2)})");
  CHECK(parse_formula("(equal x y)")->str() == "(= x y)");
  CHECK(parse_formula("(bounded-exists u {} true)")->str() == "(bex u {} true)");
  CHECK(parse_formula("(iszero {0})")->str() == "(zero {atom(0)})");

  CHECK_THROWS_AS(parse_formula("(frob x)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(and true"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(less {1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(= x y) etc"), std::invalid_argument);
}

TEST_CASE("formula classification") {
  CHECK(is_delta0(parse_formula("(ball u {} (bex v u (in v u)))")));
  CHECK(!is_delta0(parse_formula("(exists y (zero {y}))")));
  CHECK(is_sigma(parse_formula("(exists y (zero {y}))")));
  CHECK(is_sigma(parse_formula("(and (not (less {1} {2})) (exists y (in y x)))")));
  CHECK(!is_sigma(parse_formula("(not (exists y (in y x)))")));
  CHECK(is_sigma(parse_formula("(bex u x (exists y (in y u)))")));
}

TEST_CASE("free variables and substitution") {
  auto f = parse_formula("(bex u x (and (in u y) (exists y (in y u))))");
  CHECK(free_vars(f) == std::vector<std::string>{"x", "y"});

  auto g = subst(f, "y", Term::lit(E()));
  // the outer y is replaced, the rebound inner one is untouched
  CHECK(g->str() == "(bex u x (and (in u {}) (exists y (in y u))))");
  auto h = subst(g, "x", Term::lit(S({E()})));
  CHECK(free_vars(h).empty());
}

TEST_CASE("bounded evaluation matches the intended semantics") {
  Env empty;
  auto ev = [&](const char* s) { return eval_delta0(parse_formula(s), empty); };

  CHECK(ev("(bex x {{}} (= x {}))"));       // exists x in {∅}: x = ∅
  CHECK(ev("(less {2} {3})"));
  CHECK(!ev("(add {1} {1} {3})"));
  CHECK(ev("(add {1/2} {1/2} {1})"));
  CHECK(ev("(mul {2/3} {3} {2})"));
  CHECK(ev("(zero {0})"));
  CHECK(!ev("(zero {1})"));
  CHECK(ev("(one {1})"));
  CHECK(ev("(in {} {{}})"));
  CHECK(!ev("(in {{}} {})"));
  CHECK(ev("(in atom(2) {2})"));
  CHECK(!ev("(in atom(2) atom(2))"));  // atoms have no elements
  CHECK(ev("(ball u {} false)"));      // vacuous
  CHECK(!ev("(bex u {} true)"));
  CHECK(ev("(ball u {1, 2, 3} (less {0} {u}))"));
  CHECK(!ev("(ball u {1, 2, 3} (less {u} {3}))"));
  CHECK(ev("(and)") == ev("true"));
  CHECK(ev("(not false)"));
  CHECK(ev("(or false (= {} {}))"));

  // quantifying over an atom is vacuous: no elements to range over
  CHECK(ev("(ball u atom(7) false)"));
  CHECK(!ev("(bex u atom(7) true)"));
}

TEST_CASE("strictness of the lifted predicates") {
  Env empty;
  auto f = parse_formula("(less {} {3})");  // lhs is ∅, not a singleton
  CHECK_THROWS_AS(eval_delta0(f, empty, EvalMode::Strict), std::domain_error);
  CHECK(!eval_delta0(f, empty, EvalMode::Lenient));

  auto g = parse_formula("(less {1, 2} {3})");  // two elements is too many
  CHECK_THROWS_AS(eval_delta0(g, empty, EvalMode::Strict), std::domain_error);
  CHECK(!eval_delta0(g, empty, EvalMode::Lenient));

  CHECK_THROWS_AS(eval_delta0(parse_formula("(exists y true)"), empty), std::invalid_argument);
  CHECK_THROWS_AS(eval_delta0(parse_formula("(in x {})"), empty), std::domain_error);
}

TEST_CASE("environments bind variables, set formers build sets") {
  Env env{{"x", A(3)}, {"y", S({A(3)})}};
  CHECK(eval_delta0(parse_formula("(in x y)"), env));
  CHECK(eval_delta0(parse_formula("(= {x} y)"), env));
  CHECK(eval_delta0(parse_formula("(mul {x} {x} {9})"), env));
  CHECK(hf_equal(eval_term(parse_term("{x, {y}}"), env), S({A(3), S({S({A(3)})})})));
}

TEST_CASE("candidate levels enumerate canonical sets by size") {
  // over an empty pool these are the pure sets; counts follow the
  // distinct-children tree numbers 1, 1, 1, 2, 3, 6, 12
  std::vector<Rat> none;
  CHECK(sets_of_weight(1, none).size() == 1);
  CHECK(sets_of_weight(2, none).size() == 1);
  CHECK(sets_of_weight(3, none).size() == 1);
  CHECK(sets_of_weight(4, none).size() == 2);
  CHECK(sets_of_weight(5, none).size() == 3);
  CHECK(sets_of_weight(6, none).size() == 6);
  CHECK(sets_of_weight(7, none).size() == 12);

  std::vector<Rat> pool{Rat(0), Rat(1)};
  auto w1 = sets_of_weight(1, pool);
  REQUIRE(w1.size() == 3);
  CHECK(hf_equal(w1[0], A(0)));
  CHECK(hf_equal(w1[1], A(1)));
  CHECK(hf_equal(w1[2], E()));

  // every level is duplicate-free and sorted
  for (size_t w = 1; w <= 5; ++w) {
    auto level = sets_of_weight(w, pool);
    for (const auto& c : level) CHECK(c->node_count() == w);
    for (size_t i = 1; i < level.size(); ++i) CHECK(hf_compare(level[i - 1], level[i]) < 0);
  }
}

TEST_CASE("witness search: squares") {
  SearchBudget budget;
  budget.atom_pool = {Rat(1), Rat(2)};
  auto f = parse_formula("(exists y (mul {y} {y} {atom(4)}))");
  SigmaResult r = eval_sigma(f, {}, budget);
  REQUIRE(r.established);
  CHECK(r.str() == "true");
  REQUIRE(r.witnesses.count("y"));
  CHECK(hf_equal(r.witnesses.at("y"), A(2)));
  CHECK(r.candidates_tried == 2);  // atom(1) fails, atom(2) hits
  REQUIRE(r.certificate);
  CHECK(is_delta0(r.certificate));
  CHECK(eval_delta0(r.certificate, {}, EvalMode::Lenient));
  CHECK(r.certificate->str() == "(mul {atom(2)} {atom(2)} {atom(4)})");
}

TEST_CASE("witness search: no rational square root of -1") {
  SearchBudget budget;
  budget.atom_pool = {Rat(2), Rat(-1), Rat(1, 2)};
  budget.max_witnesses = 300;
  auto f = parse_formula("(exists y (mul {y} {y} {atom(-1)}))");
  SigmaResult r = eval_sigma(f, {}, budget);
  CHECK(!r.established);
  CHECK(r.str() == "unknown");
  CHECK(!r.certificate);
}

TEST_CASE("witness search: degenerate bounded formulas agree with eval_delta0") {
  SearchBudget budget;
  for (const char* s : {"(and (less {1} {2}) (zero {0}))", "(or (zero {1}) (one {0}))",
                        "(ball u {1, 2} (less {0} {u}))", "false"}) {
    auto f = parse_formula(s);
    CHECK(eval_sigma(f, {}, budget).established == eval_delta0(f, {}));
  }
  // a quantifier-free formula certifies itself
  auto d0 = parse_formula("(and (less {1} {2}) (zero {0}))");
  CHECK(eval_sigma(d0, {}, budget).certificate->str() ==
        "(and (less {atom(1)} {atom(2)}) (zero {atom(0)}))");
}

TEST_CASE("witness search: certificates pick disjuncts and bounded witnesses") {
  SearchBudget budget;
  budget.atom_pool = {Rat(1), Rat(2), Rat(4)};
  budget.max_witnesses = 60;

  // the losing disjunct burns budget, the certificate comes from the winner
  auto orf = parse_formula(
      "(or (exists y (mul {y} {y} {atom(-1)})) (exists y (mul {y} {y} {atom(4)})))");
  SigmaResult r1 = eval_sigma(orf, {}, budget);
  REQUIRE(r1.established);
  CHECK(r1.certificate->str() == "(mul {atom(2)} {atom(2)} {atom(4)})");

  auto bex = parse_formula("(bex u {atom(1), atom(2)} (exists v (mul {u} {v} {atom(4)})))");
  SigmaResult r2 = eval_sigma(bex, {}, budget);
  REQUIRE(r2.established);
  CHECK(eval_delta0(r2.certificate, {}));
  CHECK(r2.certificate->str() ==
        "(and (in atom(1) {atom(1), atom(2)}) (mul {atom(1)} {atom(4)} {atom(4)}))");
}

TEST_CASE("witness search: universal over a set with inner existentials") {
  SearchBudget budget;
  budget.atom_pool = {Rat(1), Rat(2), Rat(1, 2)};
  auto f = parse_formula("(ball u {atom(1), atom(2)} (exists v (mul {u} {v} {atom(2)})))");
  SigmaResult r = eval_sigma(f, {}, budget);
  REQUIRE(r.established);
  CHECK(eval_delta0(r.certificate, {}, EvalMode::Lenient));
  // per-element certificates: 1*2=2 and 2*1=2
  CHECK(r.certificate->str() ==
        "(and (mul {atom(1)} {atom(2)} {atom(2)}) (mul {atom(2)} {atom(1)} {atom(2)}))");
}

TEST_CASE("witness search: hints reach outside the generated universe") {
  // the witness has rank 4 and an atom outside the pool -- only the hint finds it
  HFRef deep = S({S({S({S({A(99)})})})});
  auto f = Formula::exists("y", Formula::equal(Term::var("y"), Term::lit(deep)));

  SearchBudget blind;
  blind.max_witnesses = 200;
  blind.max_rank = 3;
  CHECK(!eval_sigma(f, {}, blind).established);

  SearchBudget hinted = blind;
  hinted.hints = {deep};
  SigmaResult r = eval_sigma(f, {}, hinted);
  REQUIRE(r.established);
  CHECK(r.candidates_tried == 1);
  CHECK(hf_equal(r.witnesses.at("y"), deep));
}

TEST_CASE("witness search rejects formulas outside the fragment") {
  SearchBudget budget;
  CHECK_THROWS_AS(eval_sigma(parse_formula("(not (exists y (zero {y})))"), {}, budget),
                  std::invalid_argument);
}
