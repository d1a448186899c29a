#include "rbss/formula.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rbss {

TermPtr Term::var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Var;
  t->name = std::move(name);
  return t;
}

TermPtr Term::lit(HFRef v) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Lit;
  t->value = std::move(v);
  return t;
}

TermPtr Term::mk_set(std::vector<TermPtr> elems) {
  bool all_lit = std::all_of(elems.begin(), elems.end(),
                             [](const TermPtr& e) { return e->kind == Kind::Lit; });
  if (all_lit) {
    std::vector<HFRef> vals;
    vals.reserve(elems.size());
    for (const auto& e : elems) vals.push_back(e->value);
    return lit(HFSet::set(std::move(vals)));
  }
  auto t = std::make_shared<Term>();
  t->kind = Kind::MkSet;
  t->elems = std::move(elems);
  return t;
}

namespace {

std::shared_ptr<Formula> mk(Formula::Kind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}

size_t pred_arity(BasePred p) {
  switch (p) {
    case BasePred::Less:
      return 2;
    case BasePred::Add:
    case BasePred::Mul:
      return 3;
    case BasePred::IsZero:
    case BasePred::IsOne:
      return 1;
  }
  return 0;
}

}  // namespace

FormulaPtr Formula::member(TermPtr x, TermPtr s) {
  auto f = mk(Kind::Member);
  f->a = std::move(x);
  f->b = std::move(s);
  return f;
}

FormulaPtr Formula::equal(TermPtr x, TermPtr y) {
  auto f = mk(Kind::Equal);
  f->a = std::move(x);
  f->b = std::move(y);
  return f;
}

FormulaPtr Formula::pred(BasePred p, std::vector<TermPtr> args) {
  if (args.size() != pred_arity(p))
    throw std::invalid_argument("base predicate arity mismatch");
  auto f = mk(Kind::Base);
  f->base = p;
  f->args = std::move(args);
  return f;
}

FormulaPtr Formula::conj(std::vector<FormulaPtr> kids) {
  auto f = mk(Kind::And);
  f->kids = std::move(kids);
  return f;
}

FormulaPtr Formula::disj(std::vector<FormulaPtr> kids) {
  auto f = mk(Kind::Or);
  f->kids = std::move(kids);
  return f;
}

FormulaPtr Formula::negate(FormulaPtr g) {
  auto f = mk(Kind::Not);
  f->kids.push_back(std::move(g));
  return f;
}

FormulaPtr Formula::bounded_exists(std::string var, TermPtr bound, FormulaPtr body) {
  auto f = mk(Kind::BoundedExists);
  f->var = std::move(var);
  f->bound = std::move(bound);
  f->body = std::move(body);
  return f;
}

FormulaPtr Formula::bounded_forall(std::string var, TermPtr bound, FormulaPtr body) {
  auto f = mk(Kind::BoundedForall);
  f->var = std::move(var);
  f->bound = std::move(bound);
  f->body = std::move(body);
  return f;
}

FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
  auto f = mk(Kind::Exists);
  f->var = std::move(var);
  f->body = std::move(body);
  return f;
}

bool is_delta0(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Member:
    case Formula::Kind::Equal:
    case Formula::Kind::Base:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Not:
      return std::all_of(f->kids.begin(), f->kids.end(), is_delta0);
    case Formula::Kind::BoundedExists:
    case Formula::Kind::BoundedForall:
      return is_delta0(f->body);
    case Formula::Kind::Exists:
      return false;
  }
  return false;
}

bool is_sigma(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Member:
    case Formula::Kind::Equal:
    case Formula::Kind::Base:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return std::all_of(f->kids.begin(), f->kids.end(), is_sigma);
    case Formula::Kind::Not:
      return is_delta0(f->kids[0]);
    case Formula::Kind::BoundedExists:
    case Formula::Kind::BoundedForall:
    case Formula::Kind::Exists:
      return is_sigma(f->body);
  }
  return false;
}

namespace {

void term_vars(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      out.insert(t->name);
      break;
    case Term::Kind::Lit:
      break;
    case Term::Kind::MkSet:
      for (const auto& e : t->elems) term_vars(e, out);
      break;
  }
}

void collect_free(const FormulaPtr& f, std::set<std::string> bound, std::set<std::string>& out) {
  auto term = [&](const TermPtr& t) {
    if (!t) return;
    std::set<std::string> vs;
    term_vars(t, vs);
    for (const auto& v : vs)
      if (!bound.count(v)) out.insert(v);
  };
  term(f->a);
  term(f->b);
  for (const auto& t : f->args) term(t);
  for (const auto& k : f->kids) collect_free(k, bound, out);
  if (f->body) {
    term(f->bound);  // the range is evaluated outside the binder
    bound.insert(f->var);
    collect_free(f->body, std::move(bound), out);
  }
}

}  // namespace

std::vector<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> out;
  collect_free(f, {}, out);
  return {out.begin(), out.end()};
}

TermPtr subst_term(const TermPtr& t, const std::string& var, const TermPtr& repl) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->name == var ? repl : t;
    case Term::Kind::Lit:
      return t;
    case Term::Kind::MkSet: {
      std::vector<TermPtr> elems;
      elems.reserve(t->elems.size());
      bool changed = false;
      for (const auto& e : t->elems) {
        elems.push_back(subst_term(e, var, repl));
        changed |= elems.back() != e;
      }
      return changed ? Term::mk_set(std::move(elems)) : t;
    }
  }
  return t;
}

FormulaPtr subst(const FormulaPtr& f, const std::string& var, const TermPtr& repl) {
  auto g = std::make_shared<Formula>(*f);
  if (g->a) g->a = subst_term(g->a, var, repl);
  if (g->b) g->b = subst_term(g->b, var, repl);
  for (auto& t : g->args) t = subst_term(t, var, repl);
  for (auto& k : g->kids) k = subst(k, var, repl);
  if (g->bound) g->bound = subst_term(g->bound, var, repl);
  if (g->body && g->var != var) g->body = subst(g->body, var, repl);
  return g;
}

}  // namespace rbss
