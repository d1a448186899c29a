#include <algorithm>
#include <stdexcept>

#include "rbss/encode.hpp"
#include "rbss/interp.hpp"
#include "rbss/scheme.hpp"

namespace rbss {

namespace {

constexpr long kDeciderFuel = 512;

HFRef value_singleton(const Rat& q) { return HFSet::set({HFSet::atom(q)}); }

// the code of the register state holding one value at coordinate 0
HFRef value_code(const Rat& q) {
  RInf state;
  state.set(0, q);
  return encode(state);
}

// arguments come in as codes of single-coordinate states
std::optional<Rat> decode_value(const HFRef& arg) {
  auto state = decode(arg);
  if (!state) return std::nullopt;
  for (const auto& [i, x] : state->entries())
    if (i != 0) return std::nullopt;
  return state->get(0);
}

FormulaPtr pinned_graph(const Machine& m, const Rat& out) {
  SigmaFunctionDef def = graph_formula(m, true);
  return subst(def.graph, "y", Term::lit(tuple_code({out})));
}

}  // namespace

const SchemeRelation* SigmaScheme::find(const std::string& name) const {
  for (const auto& r : phi)
    if (r.name == name) return &r;
  return nullptr;
}

SigmaScheme structure_presentation(const std::map<std::string, Machine>& machines) {
  auto universe = machines.find("U");
  if (universe == machines.end())
    throw std::invalid_argument("a presentation needs the carrier decider under the key \"U\"");
  SigmaScheme scheme;
  for (const auto& [name, m] : machines) {
    if (!m.arity)
      throw std::invalid_argument("predicate machine '" + name + "' needs a fixed arity");
    SchemeRelation rel;
    rel.name = name;
    rel.arity = *m.arity;
    rel.pos = pinned_graph(m, Rat(1));
    rel.neg = pinned_graph(m, Rat(0));
    rel.machine = m;
    scheme.phi.push_back(std::move(rel));
  }
  if (*universe->second.arity != 1)
    throw std::invalid_argument("the carrier decider must take exactly one argument");
  scheme.psi0 = scheme.find("U")->pos;
  scheme.psi0_star = scheme.find("U")->neg;
  scheme.psi1 = Formula::equal(Term::var("x1"), Term::var("x2"));
  scheme.psi1_star = Formula::negate(Formula::equal(Term::var("x1"), Term::var("x2")));
  scheme.universe = universe->second;
  return scheme;
}

SigmaResult sigma_semidecide(const SigmaScheme& scheme, const std::string& relation,
                             const std::vector<HFRef>& args, const SearchBudget& budget,
                             bool complement) {
  SigmaResult unknown;
  const SchemeRelation* rel = scheme.find(relation);
  if (!rel) return unknown;
  if (static_cast<long>(args.size()) != rel->arity) return unknown;

  std::vector<Rat> vals;
  vals.reserve(args.size());
  for (const auto& arg : args) {
    auto q = decode_value(arg);
    if (!q) return unknown;
    vals.push_back(*q);
  }

  // carrier gate: nothing is established about points outside the universe
  if (scheme.psi0 && scheme.universe) {
    for (const auto& q : vals) {
      auto tw = trace_witness(*scheme.universe, {q}, kDeciderFuel);
      if (!tw || !hf_equal(tw->output_code, tuple_code({Rat(1)}))) return unknown;
      SearchBudget gate = budget;
      gate.hints.push_back(tw->code);
      FormulaPtr member = subst(scheme.psi0, "x", Term::lit(tuple_code({q})));
      if (!eval_sigma(member, {}, gate).established) return unknown;
    }
  }

  const FormulaPtr& body = complement ? rel->neg : rel->pos;
  if (!body) return unknown;

  SearchBudget run_budget = budget;
  FormulaPtr query;
  if (rel->machine) {
    if (auto tw = trace_witness(*rel->machine, vals, kDeciderFuel))
      run_budget.hints.push_back(tw->code);
    query = subst(body, "x", Term::lit(tuple_code(vals)));
  } else {
    query = body;
    for (size_t i = 0; i < vals.size(); ++i)
      query = subst(query, "x" + std::to_string(i + 1), Term::lit(value_singleton(vals[i])));
  }
  return eval_sigma(query, {}, run_budget);
}

std::vector<MPrimeElement> build_m_prime(const SigmaScheme& scheme,
                                         const FormulaPtr& psi0_matrix,
                                         const SearchBudget& bound) {
  (void)scheme;  // the matrix carries everything the enumeration needs
  if (!is_delta0(psi0_matrix))
    throw std::invalid_argument("the carrier matrix must be bounded: enumeration never searches");

  long slots = 0;
  for (const std::string& name : free_vars(psi0_matrix)) {
    if (name.size() < 2 || name[0] != 'x') continue;
    try {
      slots = std::max(slots, std::stol(name.substr(1)));
    } catch (const std::exception&) {
      continue;  // not an argument slot
    }
  }
  if (slots == 0) slots = 1;

  std::vector<Rat> pool = bound.atom_pool;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  std::vector<HFRef> carrier_candidates{HFSet::empty_set()};
  std::vector<RInf> witness_candidates{RInf{}};
  for (const Rat& a : pool) {
    if (a.is_zero()) continue;  // codes the same state as the empty one
    carrier_candidates.push_back(value_code(a));
    RInf w;
    w.set(0, a);
    witness_candidates.push_back(std::move(w));
  }

  std::vector<MPrimeElement> out;
  long tried = 0;
  std::vector<size_t> pick(static_cast<size_t>(slots), 0);
  bool done = false;
  while (!done) {
    for (const RInf& w : witness_candidates) {
      if (tried++ >= bound.max_witnesses) return out;
      Env env{{"w", encode(w)}};
      MPrimeElement el;
      el.carrier.reserve(pick.size());
      for (size_t s = 0; s < pick.size(); ++s) {
        el.carrier.push_back(carrier_candidates[pick[s]]);
        env["x" + std::to_string(s + 1)] = el.carrier.back();
      }
      el.witness = w;
      if (eval_delta0(psi0_matrix, env, EvalMode::Lenient)) out.push_back(std::move(el));
    }
    done = true;
    for (size_t s = 0; s < pick.size(); ++s) {
      if (++pick[s] < carrier_candidates.size()) {
        done = false;
        break;
      }
      pick[s] = 0;
    }
  }
  return out;
}

bool m_prime_equal(const MPrimeElement& a, const MPrimeElement& b) {
  if (a.carrier.size() != b.carrier.size()) return false;
  for (size_t i = 0; i < a.carrier.size(); ++i)
    if (!hf_equal(a.carrier[i], b.carrier[i])) return false;
  return true;
}

bool m_prime_holds(const SigmaScheme& scheme, const std::string& relation,
                   const std::vector<MPrimeElement>& elements, long fuel) {
  const SchemeRelation* rel = scheme.find(relation);
  if (!rel) throw std::invalid_argument("unknown relation '" + relation + "'");
  if (static_cast<long>(elements.size()) != rel->arity)
    throw std::invalid_argument("relation '" + relation + "' wants " +
                                std::to_string(rel->arity) + " points");
  // a point means its first carrier coordinate
  std::vector<Rat> vals;
  vals.reserve(elements.size());
  for (const auto& el : elements) {
    if (el.carrier.empty()) throw std::invalid_argument("companion point with empty carrier");
    auto q = decode_value(el.carrier[0]);
    if (!q) throw std::invalid_argument("companion point carrier is not a value code");
    vals.push_back(*q);
  }
  if (rel->machine) {
    RunResult r = run(*rel->machine, vals, fuel);
    return r.kind == RunResult::Kind::Output && r.output == RFin{Rat(1)};
  }
  if (!is_delta0(rel->pos))
    throw std::invalid_argument("relation '" + relation +
                                "' needs search; companion evaluation is bounded only");
  FormulaPtr f = rel->pos;
  for (size_t i = 0; i < vals.size(); ++i)
    f = subst(f, "x" + std::to_string(i + 1), Term::lit(value_singleton(vals[i])));
  return eval_delta0(f, {}, EvalMode::Lenient);
}

}  // namespace rbss
