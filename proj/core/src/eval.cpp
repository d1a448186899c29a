#include "rbss/eval.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace rbss {

HFRef eval_term(const TermPtr& t, const Env& env) {
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = env.find(t->name);
      if (it == env.end()) throw std::domain_error("unbound variable '" + t->name + "'");
      return it->second;
    }
    case Term::Kind::Lit:
      return t->value;
    case Term::Kind::MkSet: {
      std::vector<HFRef> vals;
      vals.reserve(t->elems.size());
      for (const auto& e : t->elems) vals.push_back(eval_term(e, env));
      return HFSet::set(std::move(vals));
    }
  }
  throw std::logic_error("unreachable term kind");
}

namespace {

std::optional<HFRef> stash(const std::string& v, Env& env) {
  auto it = env.find(v);
  if (it == env.end()) return std::nullopt;
  return it->second;
}

void restore(const std::string& v, const std::optional<HFRef>& saved, Env& env) {
  if (saved) env[v] = *saved;
  else env.erase(v);
}

// Recursive worker over a single mutable environment (bindings are stashed
// and restored around quantifiers instead of copying the map per node).
bool eval_d0(const FormulaPtr& f, Env& env, EvalMode mode) {
  switch (f->kind) {
    case Formula::Kind::Member: {
      HFRef x = eval_term(f->a, env);
      HFRef s = eval_term(f->b, env);
      if (s->is_atom()) return false;  // atoms have no elements
      return hf_member(x, s);
    }
    case Formula::Kind::Equal:
      return hf_equal(eval_term(f->a, env), eval_term(f->b, env));
    case Formula::Kind::Base: {
      // the lifted relations take singletons of atoms: {a} rel {b} holds
      // when the wrapped reals do
      std::vector<Rat> vals;
      vals.reserve(f->args.size());
      for (const auto& t : f->args) {
        HFRef v = eval_term(t, env);
        if (v->is_atom() || v->elems().size() != 1 || !v->elems()[0]->is_atom()) {
          if (mode == EvalMode::Strict)
            throw std::domain_error("base predicate argument is not a singleton of an atom");
          return false;
        }
        vals.push_back(v->elems()[0]->value());
      }
      switch (f->base) {
        case BasePred::Less:
          return vals[0] < vals[1];
        case BasePred::Add:
          return vals[0] + vals[1] == vals[2];
        case BasePred::Mul:
          return vals[0] * vals[1] == vals[2];
        case BasePred::IsZero:
          return vals[0].is_zero();
        case BasePred::IsOne:
          return vals[0].is_one();
      }
      return false;
    }
    case Formula::Kind::And:
      return std::all_of(f->kids.begin(), f->kids.end(),
                         [&](const FormulaPtr& k) { return eval_d0(k, env, mode); });
    case Formula::Kind::Or:
      return std::any_of(f->kids.begin(), f->kids.end(),
                         [&](const FormulaPtr& k) { return eval_d0(k, env, mode); });
    case Formula::Kind::Not:
      return !eval_d0(f->kids[0], env, mode);
    case Formula::Kind::BoundedExists:
    case Formula::Kind::BoundedForall: {
      HFRef range = eval_term(f->bound, env);
      bool forall = f->kind == Formula::Kind::BoundedForall;
      if (range->is_atom()) return forall;  // vacuous either way
      auto saved = stash(f->var, env);
      bool result = forall;
      for (const auto& u : range->elems()) {
        env[f->var] = u;
        if (eval_d0(f->body, env, mode) != forall) {
          result = !forall;
          break;
        }
      }
      restore(f->var, saved, env);
      return result;
    }
    case Formula::Kind::Exists:
      throw std::invalid_argument("formula has an unbounded existential");
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

bool eval_delta0(const FormulaPtr& f, const Env& env, EvalMode mode) {
  Env scratch = env;
  return eval_d0(f, scratch, mode);
}

namespace {

// Canonical candidate sets ordered by tree size, then canonical order.
// Level w holds every set whose node count is exactly w and whose atoms all
// come from the pool; levels are built on demand.
struct Generator {
  std::vector<Rat> pool;
  std::vector<std::vector<HFRef>> by_weight;

  explicit Generator(const std::vector<Rat>& atoms) : pool(atoms) {
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  }

  const std::vector<HFRef>& level(size_t w) {
    while (by_weight.size() <= w) build_next();
    return by_weight[w];
  }

 private:
  void build_next() {
    size_t w = by_weight.size();
    std::vector<HFRef> out;
    if (w == 1) {
      out.push_back(HFSet::empty_set());
      for (const Rat& v : pool) out.push_back(HFSet::atom(v));
    } else if (w >= 2) {
      std::vector<HFRef> cur;
      pick(w - 1, cur, out);
    }
    std::sort(out.begin(), out.end(), HFLess{});
    by_weight.push_back(std::move(out));
  }

  // Extend cur (strictly increasing elements) spending exactly `remaining`
  // node count; emit the finished set when the budget is used up.
  void pick(size_t remaining, std::vector<HFRef>& cur, std::vector<HFRef>& out) {
    if (remaining == 0) {
      out.push_back(HFSet::set(cur));
      return;
    }
    for (size_t ew = 1; ew <= remaining; ++ew) {
      for (const HFRef& e : level(ew)) {
        if (!cur.empty() && hf_compare(cur.back(), e) >= 0) continue;
        cur.push_back(e);
        pick(remaining - ew, cur, out);
        cur.pop_back();
      }
    }
  }
};

struct SigmaSearcher {
  const SearchBudget& budget;
  Generator gen;
  std::map<std::string, HFRef> witnesses;
  long tried = 0;

  explicit SigmaSearcher(const SearchBudget& b) : budget(b), gen(b.atom_pool) {}

  // On success: a bounded certificate with every witness the search chose
  // substituted as a literal (bound variables of f may remain free; callers
  // substitute them on the way out).
  std::optional<FormulaPtr> search(const FormulaPtr& f, Env& env) {
    if (is_delta0(f))
      return eval_d0(f, env, EvalMode::Lenient) ? std::optional<FormulaPtr>(f) : std::nullopt;

    switch (f->kind) {
      case Formula::Kind::And: {
        std::vector<FormulaPtr> certs;
        certs.reserve(f->kids.size());
        for (const auto& k : f->kids) {
          auto c = search(k, env);
          if (!c) return std::nullopt;
          certs.push_back(std::move(*c));
        }
        return Formula::conj(std::move(certs));
      }
      case Formula::Kind::Or: {
        for (const auto& k : f->kids) {
          auto c = search(k, env);
          if (c) return c;
        }
        return std::nullopt;
      }
      case Formula::Kind::BoundedExists: {
        HFRef range = eval_term(f->bound, env);
        if (range->is_atom()) return std::nullopt;
        auto saved = stash(f->var, env);
        for (const auto& u : range->elems()) {
          env[f->var] = u;
          auto c = search(f->body, env);
          if (c) {
            restore(f->var, saved, env);
            return Formula::conj({Formula::member(Term::lit(u), f->bound),
                                  subst(*c, f->var, Term::lit(u))});
          }
        }
        restore(f->var, saved, env);
        return std::nullopt;
      }
      case Formula::Kind::BoundedForall: {
        HFRef range = eval_term(f->bound, env);
        if (range->is_atom()) return Formula::conj({});
        std::vector<FormulaPtr> certs;
        auto saved = stash(f->var, env);
        for (const auto& u : range->elems()) {
          env[f->var] = u;
          auto c = search(f->body, env);
          if (!c) {
            restore(f->var, saved, env);
            return std::nullopt;
          }
          certs.push_back(subst(*c, f->var, Term::lit(u)));
        }
        restore(f->var, saved, env);
        return Formula::conj(std::move(certs));
      }
      case Formula::Kind::Exists: {
        auto saved = stash(f->var, env);
        // the budget counts candidates scanned, so the scan always halts
        // even when the rank cap filters whole levels out
        long local = 0;
        auto attempt = [&](const HFRef& c) -> std::optional<FormulaPtr> {
          ++tried;
          env[f->var] = c;
          auto r = search(f->body, env);
          if (r) {
            witnesses[f->var] = c;
            return subst(*r, f->var, Term::lit(c));
          }
          return std::nullopt;
        };
        for (const auto& h : budget.hints) {
          if (local++ >= budget.max_witnesses) break;
          if (auto r = attempt(h)) {
            restore(f->var, saved, env);
            return r;
          }
        }
        for (size_t w = 1; local < budget.max_witnesses; ++w) {
          for (const auto& c : gen.level(w)) {
            if (local++ >= budget.max_witnesses) break;
            if (c->rank() > budget.max_rank) continue;
            if (auto r = attempt(c)) {
              restore(f->var, saved, env);
              return r;
            }
          }
        }
        restore(f->var, saved, env);
        return std::nullopt;
      }
      case Formula::Kind::Not:
        // only legal around bounded formulas, which the leaf case handled
        throw std::invalid_argument("negation of an unbounded formula");
      default:
        throw std::logic_error("unreachable: bounded leaf fell through");
    }
  }
};

}  // namespace

SigmaResult eval_sigma(const FormulaPtr& f, const Env& env, const SearchBudget& budget) {
  if (!is_sigma(f)) throw std::invalid_argument("formula is outside the searchable fragment");
  SigmaSearcher s(budget);
  Env scratch = env;
  SigmaResult r;
  auto cert = s.search(f, scratch);
  r.candidates_tried = s.tried;
  if (cert) {
    r.established = true;
    r.certificate = *cert;
    r.witnesses = std::move(s.witnesses);
  }
  return r;
}

std::vector<HFRef> sets_of_weight(size_t weight, const std::vector<Rat>& pool) {
  Generator g(pool);
  return g.level(weight);
}

}  // namespace rbss
