#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "rbss/interp.hpp"
#include "rbss/sigma.hpp"
#include "sigma_terms.hpp"

// Machine -> formula translation. The trace of a run is coded as a set of
// (stage, configuration) pairs -- configuration = (node index, state code) --
// plus one (-1, scratch pool) pair whose payload collects every intermediate
// value the arithmetic clauses need to bind. The formula pins stage 0 to the
// input, forces stage tags to be a contiguous block of naturals, makes each
// consecutive pair a legal step, and reads the output off the final
// configuration. Determinism of the step relation then leaves no freedom:
// any accepted code agrees with the real run stage by stage.

namespace rbss {

using namespace sig;

namespace {

constexpr const char* kTraceVar = "_c";
constexpr const char* kScratchVar = "_R";

// ---- straight-line plans for the node polynomials ----
//
// Each polynomial becomes a chain of binary adds/muls over three register
// banks: literal constants, state coordinates, and intermediates. The
// formula binds every intermediate from the trace's scratch pool; the
// witness builder replays the same chain numerically to fill that pool.

struct Reg {
  enum class K { Const, Read, Temp };
  K k = K::Const;
  size_t i = 0;
};

struct PlanStep {
  bool is_mul = false;
  Reg a, b;
};

struct NodePlan {
  std::vector<Rat> consts;
  std::vector<long> reads;
  std::vector<PlanStep> steps;
  std::map<long, std::pair<Reg, Reg>> assigns;  // target -> (num, den) values
  Reg test;                                     // branch test value
};

struct PlanBuilder {
  NodePlan plan;
  std::map<Rat, size_t> const_ix;
  std::map<long, size_t> read_ix;

  Reg cst(const Rat& q) {
    auto [it, fresh] = const_ix.try_emplace(q, plan.consts.size());
    if (fresh) plan.consts.push_back(q);
    return {Reg::K::Const, it->second};
  }
  Reg read(long coord) {
    auto [it, fresh] = read_ix.try_emplace(coord, plan.reads.size());
    if (fresh) plan.reads.push_back(coord);
    return {Reg::K::Read, it->second};
  }
  Reg step(bool is_mul, Reg a, Reg b) {
    plan.steps.push_back({is_mul, a, b});
    return {Reg::K::Temp, plan.steps.size() - 1};
  }
  Reg poly(const Poly& p) {
    if (p.is_constant()) return cst(p.is_zero() ? Rat(0) : p.const_value());
    std::optional<Reg> acc;
    for (const auto& [mono, coef] : p.terms()) {
      Reg cur = cst(coef);
      for (const auto& [var, pow] : mono)
        for (unsigned e = 0; e < pow; ++e) cur = step(true, cur, read(var));
      acc = acc ? std::optional<Reg>(step(false, *acc, cur)) : cur;
    }
    return *acc;
  }
};

NodePlan plan_of(const Node& n) {
  PlanBuilder b;
  if (n.kind == Node::Kind::Compute) {
    for (const auto& [target, fn] : n.assigns) {
      Reg num = b.poly(fn.num);
      Reg den = b.poly(fn.den);
      b.plan.assigns.emplace(target, std::make_pair(num, den));
    }
  } else if (n.kind == Node::Kind::Branch) {
    b.plan.test = b.poly(n.test);
  }
  return std::move(b.plan);
}

std::vector<Rat> plan_temps(const NodePlan& plan, const std::function<Rat(long)>& lookup) {
  std::vector<Rat> temps;
  auto val = [&](Reg r) -> Rat {
    switch (r.k) {
      case Reg::K::Const: return plan.consts[r.i];
      case Reg::K::Read: return lookup(plan.reads[r.i]);
      case Reg::K::Temp: return temps[r.i];
    }
    throw std::logic_error("unreachable register kind");
  };
  for (const auto& st : plan.steps)
    temps.push_back(st.is_mul ? val(st.a) * val(st.b) : val(st.a) + val(st.b));
  return temps;
}

// ---- shared layout ----

std::map<std::string, long> node_index(const Machine& m) {
  std::map<std::string, long> ix{{kInputNodeId, 0}};
  long k = 1;
  for (const auto& [id, n] : m.nodes) ix.emplace(id, k++);
  return ix;
}

// Output lists resolve to a fixed coordinate list, except for the one
// supported marker shape [1..n], which stays symbolic.
struct OutSpec {
  bool dynamic = false;
  std::vector<long> coords;
};

OutSpec out_spec(const Node& n) {
  bool marker = false;
  for (const auto& item : n.outputs)
    if (item.is_range && (item.lo.is_marker || item.hi.is_marker)) marker = true;
  if (marker) {
    if (n.outputs.size() == 1 && n.outputs[0].is_range && !n.outputs[0].lo.is_marker &&
        n.outputs[0].lo.value == 1 && n.outputs[0].hi.is_marker)
      return {true, {}};
    throw std::invalid_argument("node '" + n.id +
                                "': the translation supports the length marker only as the "
                                "single output item [1..n]");
  }
  OutSpec spec;
  for (const auto& item : n.outputs) {
    if (!item.is_range) {
      spec.coords.push_back(item.index);
      continue;
    }
    for (long i = item.lo.value; i <= item.hi.value; ++i) {
      spec.coords.push_back(i);
      if (spec.coords.size() > 4096)
        throw std::invalid_argument("node '" + n.id + "': output list too long to translate");
    }
  }
  return spec;
}

class TraceCompiler {
 public:
  explicit TraceCompiler(const Machine& m) : m_(m), ix_(node_index(m)) {
    for (const auto& [id, n] : m_.nodes) {
      if (n.kind == Node::Kind::Compute || n.kind == Node::Kind::Branch)
        plans_.emplace(id, plan_of(n));
      if (n.kind == Node::Kind::Output) outs_.emplace(id, out_spec(n));
    }
  }

  FormulaPtr graph() { return Formula::exists(kTraceVar, and_({core(), output_pin(v("y"))})); }
  FormulaPtr cograph() {
    return Formula::exists(kTraceVar, and_({core(), output_exists(), output_anti(v("y"))}));
  }

 private:
  TermPtr node_lit(const std::string& id) const { return alit(Rat(ix_.at(id))); }

  FormulaPtr core() {
    std::string r = g_("e"), rb = g_("a");
    return bex(r, v(kTraceVar), bex(rb, v(r), bex(kScratchVar, v(rb),
        and_({eq(v(r), pairt(alit(-1), v(kScratchVar))), stage_zero(),
              tag_functional(v(kTraceVar), g_), contiguity(), transitions()}))));
  }

  // stage 0 sits at the input node with the input tuple as its state
  FormulaPtr stage_zero() {
    std::string e = g_("e");
    return bex(e, v(kTraceVar), eq(v(e), pairt(alit(0), pairt(alit(0), v("x")))));
  }

  // every stage tag is 0, -1, or at least 1 with its predecessor present;
  // a fractional tag would chain down into (0,1) and die
  FormulaPtr contiguity() {
    std::string e = g_("e"), a = g_("a"), t = g_("t");
    std::string e2 = g_("e"), a2 = g_("a"), t2 = g_("t");
    return ball(e, v(kTraceVar), ball(a, v(e), ball(t, v(a),
        or_({not_(and_({atomish(t), in(sing(v(t)), v(e))})),
             zerop(sing(v(t))),
             addp(sing(v(t)), slit(1), slit(0)),
             and_({not_(lessp(sing(v(t)), slit(1))),
                   bex(e2, v(kTraceVar), bex(a2, v(e2), bex(t2, v(a2),
                       and_({atomish(t2), in(sing(v(t2)), v(e2)),
                             addp(sing(v(t2)), slit(1), sing(v(t)))}))))})}))));
  }

  // consecutive stages are legal steps; output nodes offer no step, which
  // cuts the chain off at the first output configuration
  FormulaPtr transitions() {
    std::string e = g_("e"), a = g_("a"), t = g_("t"), b = g_("b"), gg = g_("g");
    std::string e2 = g_("e"), a2 = g_("a"), t2 = g_("t"), b2 = g_("b"), gg2 = g_("g");
    FormulaPtr guard = and_({atomish(t), not_(lessp(sing(v(t)), slit(0))),
                             eq(v(e), pairt(v(t), v(gg))),
                             atomish(t2), eq(v(e2), pairt(v(t2), v(gg2))),
                             addp(sing(v(t)), slit(1), sing(v(t2)))});
    return ball(e, v(kTraceVar), ball(a, v(e), ball(t, v(a), ball(b, v(e), ball(gg, v(b),
           ball(e2, v(kTraceVar), ball(a2, v(e2), ball(t2, v(a2), ball(b2, v(e2),
           ball(gg2, v(b2), or_({not_(guard), step_or(gg, gg2)})))))))))));
  }

  FormulaPtr step_or(const std::string& gv, const std::string& g2v) {
    std::vector<FormulaPtr> ds;
    {
      std::string bb = g_("b"), S = g_("S");
      ds.push_back(bex(bb, v(gv), bex(S, v(bb),
          and_({eq(v(gv), pairt(alit(0), v(S))),
                eq(v(g2v), pairt(node_lit(m_.entry), v(S)))}))));
    }
    for (const auto& [id, n] : m_.nodes) {
      switch (n.kind) {
        case Node::Kind::Compute: ds.push_back(compute_step(n, gv, g2v)); break;
        case Node::Kind::Branch: ds.push_back(branch_step(n, gv, g2v)); break;
        case Node::Kind::Shift: ds.push_back(shift_step(n, gv, g2v)); break;
        case Node::Kind::Output: break;
      }
    }
    return or_(std::move(ds));
  }

  // binds the node's reads from S (absent coordinates read 0), then every
  // plan intermediate from the scratch pool, then hands a register resolver
  // to the continuation
  FormulaPtr with_plan(const NodePlan& plan, const std::string& S,
                       const std::function<FormulaPtr(const std::function<TermPtr(Reg)>&)>& k) {
    std::vector<TermPtr> read_terms;
    std::vector<std::string> temp_names;
    std::function<TermPtr(Reg)> resolve = [&](Reg r) -> TermPtr {
      switch (r.k) {
        case Reg::K::Const: return slit(plan.consts[r.i]);
        case Reg::K::Read: return read_terms[r.i];
        case Reg::K::Temp: return sing(v(temp_names[r.i]));
      }
      throw std::logic_error("unreachable register kind");
    };
    std::function<FormulaPtr(size_t)> bind_temp = [&](size_t i) -> FormulaPtr {
      if (i == plan.steps.size()) return k(resolve);
      const PlanStep& st = plan.steps[i];
      TermPtr a = resolve(st.a), b = resolve(st.b);
      std::string u = g_("u");
      temp_names.push_back(u);
      FormulaPtr rest = bind_temp(i + 1);
      temp_names.pop_back();
      FormulaPtr pin = st.is_mul ? mulp(a, b, sing(v(u))) : addp(a, b, sing(v(u)));
      return bex(u, v(kScratchVar), and_({std::move(pin), std::move(rest)}));
    };
    std::function<FormulaPtr(size_t)> bind_read = [&](size_t i) -> FormulaPtr {
      if (i == plan.reads.size()) return bind_temp(0);
      Rat coord(plan.reads[i]);
      read_terms.push_back(slit(0));
      FormulaPtr absent = and_({no_tag(v(S), coord, g_), bind_read(i + 1)});
      read_terms.pop_back();
      std::string cr = g_("e"), ar = g_("a"), vr = g_("V");
      read_terms.push_back(v(vr));
      FormulaPtr present = bex(cr, v(S), bex(ar, v(cr), bex(vr, v(ar),
          and_({eq(v(cr), pairt(alit(coord), v(vr))), bind_read(i + 1)}))));
      read_terms.pop_back();
      return or_({std::move(absent), std::move(present)});
    };
    return bind_read(0);
  }

  FormulaPtr compute_step(const Node& n, const std::string& gv, const std::string& g2v) {
    std::string bb = g_("b"), S = g_("S"), bb2 = g_("b"), S2 = g_("S");
    return bex(bb, v(gv), bex(S, v(bb), bex(bb2, v(g2v), bex(S2, v(bb2),
        and_({eq(v(gv), pairt(node_lit(n.id), v(S))),
              eq(v(g2v), pairt(node_lit(n.next), v(S2))),
              compute_rel(n, S, S2)})))));
  }

  FormulaPtr compute_rel(const Node& n, const std::string& S, const std::string& S2) {
    const NodePlan& plan = plans_.at(n.id);
    return with_plan(plan, S, [&](const std::function<TermPtr(Reg)>& resolve) {
      std::vector<FormulaPtr> cls;
      std::vector<long> targets;
      for (const auto& [target, regs] : plan.assigns) {
        targets.push_back(target);
        TermPtr N = resolve(regs.first), D = resolve(regs.second);
        cls.push_back(not_(zerop(D)));
        // the written cell holds num/den; a zero value leaves no cell
        std::string cw = g_("e"), aw = g_("a"), vw = g_("V");
        cls.push_back(or_({and_({zerop(N), no_tag(v(S2), Rat(target), g_)}),
                           and_({not_(zerop(N)),
                                 bex(cw, v(S2), bex(aw, v(cw), bex(vw, v(aw),
                                     and_({eq(v(cw), pairt(alit(Rat(target)), v(vw))),
                                           mulp(v(vw), D, N)}))))})}));
        // and no second cell may claim the same coordinate
        std::string cu = g_("e"), au = g_("a"), vu = g_("V");
        cls.push_back(ball(cu, v(S2),
            or_({not_(in(slit(Rat(target)), v(cu))),
                 bex(au, v(cu), bex(vu, v(au),
                     and_({eq(v(cu), pairt(alit(Rat(target)), v(vu))),
                           not_(zerop(N)), mulp(v(vu), D, N)})))})));
      }
      // untouched coordinates carry over, in both directions
      auto frame = [&](const std::string& from, const std::string& to) {
        std::string cf = g_("e");
        std::vector<FormulaPtr> keep;
        for (long tg : targets) keep.push_back(in(slit(Rat(tg)), v(cf)));
        keep.push_back(in(v(cf), v(to)));
        return ball(cf, v(from), or_(std::move(keep)));
      };
      cls.push_back(frame(S, S2));
      cls.push_back(frame(S2, S));
      return and_(std::move(cls));
    });
  }

  FormulaPtr branch_step(const Node& n, const std::string& gv, const std::string& g2v) {
    std::string bb = g_("b"), S = g_("S");
    const NodePlan& plan = plans_.at(n.id);
    auto arm = [&](const std::string& target, bool nonneg) {
      return and_({eq(v(g2v), pairt(node_lit(target), v(S))),
                   with_plan(plan, S, [&](const std::function<TermPtr(Reg)>& resolve) {
                     TermPtr h = resolve(plan.test);
                     return nonneg ? not_(lessp(h, slit(0))) : lessp(h, slit(0));
                   })});
    };
    return bex(bb, v(gv), bex(S, v(bb),
        and_({eq(v(gv), pairt(node_lit(n.id), v(S))),
              or_({arm(n.on_nonneg, true), arm(n.on_neg, false)})})));
  }

  FormulaPtr shift_step(const Node& n, const std::string& gv, const std::string& g2v) {
    std::string bb = g_("b"), S = g_("S"), bb2 = g_("b"), S2 = g_("S");
    return bex(bb, v(gv), bex(S, v(bb), bex(bb2, v(g2v), bex(S2, v(bb2),
        and_({eq(v(gv), pairt(node_lit(n.id), v(S))),
              eq(v(g2v), pairt(node_lit(n.next), v(S2))),
              shift_rel(S, S2, n.shifts_left)})))));
  }

  // a shift is a bijection on cells moving every tag by one
  FormulaPtr shift_rel(const std::string& S, const std::string& S2, bool left) {
    auto linked = [&](const std::string& told, const std::string& tnew) {
      return left ? addp(sing(v(tnew)), slit(1), sing(v(told)))
                  : addp(sing(v(told)), slit(1), sing(v(tnew)));
    };
    std::string cs = g_("e"), as = g_("a"), ts = g_("t"), bs = g_("b"), ps = g_("V");
    std::string cd = g_("e"), ad = g_("a"), td = g_("t");
    FormulaPtr fwd = ball(cs, v(S), bex(as, v(cs), bex(ts, v(as), bex(bs, v(cs), bex(ps, v(bs),
        and_({eq(v(cs), pairt(v(ts), v(ps))), atomish(ts),
              bex(cd, v(S2), bex(ad, v(cd), bex(td, v(ad),
                  and_({eq(v(cd), pairt(v(td), v(ps))), linked(ts, td)}))))}))))));
    std::string cq = g_("e"), aq = g_("a"), tq = g_("t"), bq = g_("b"), pq = g_("V");
    std::string cr = g_("e"), ar = g_("a"), tr = g_("t");
    FormulaPtr bwd = ball(cq, v(S2), bex(aq, v(cq), bex(tq, v(aq), bex(bq, v(cq), bex(pq, v(bq),
        and_({eq(v(cq), pairt(v(tq), v(pq))), atomish(tq),
              bex(cr, v(S), bex(ar, v(cr), bex(tr, v(ar),
                  and_({eq(v(cr), pairt(v(tr), v(pq))), linked(tr, tq)}))))}))))));
    return and_({std::move(fwd), std::move(bwd)});
  }

  // y is exactly the coded output the node reads off state S
  FormulaPtr output_rel(const Node& n, const std::string& S, const TermPtr& y) {
    const OutSpec& spec = outs_.at(n.id);
    if (spec.dynamic) return output_rel_dynamic(S, y);
    long mlen = static_cast<long>(spec.coords.size());
    if (mlen == 0) return eq(y, lit(HFSet::empty_set()));
    HFRef marker = hf_tag_pair(Rat(0), satom(Rat(mlen)));
    std::vector<FormulaPtr> cls{in(lit(marker), y)};
    for (long p = 1; p <= mlen; ++p) {
      Rat coord(spec.coords[p - 1]);
      std::string cw = g_("e"), aw = g_("a"), vw = g_("V");
      cls.push_back(or_({and_({no_tag(v(S), coord, g_), no_tag(y, Rat(p), g_)}),
                         bex(cw, v(S), bex(aw, v(cw), bex(vw, v(aw),
                             and_({eq(v(cw), pairt(alit(coord), v(vw))),
                                   in(pairt(alit(Rat(p)), v(vw)), y)}))))}));
    }
    // nothing else: every element of y is the marker or one of those cells
    std::string cy = g_("e");
    std::vector<FormulaPtr> shapes{eq(v(cy), lit(marker))};
    for (long p = 1; p <= mlen; ++p) {
      Rat coord(spec.coords[p - 1]);
      std::string cw = g_("e"), aw = g_("a"), vw = g_("V");
      shapes.push_back(bex(cw, v(S), bex(aw, v(cw), bex(vw, v(aw),
          and_({eq(v(cw), pairt(alit(coord), v(vw))),
                eq(v(cy), pairt(alit(Rat(p)), v(vw)))})))));
    }
    cls.push_back(ball(cy, y, or_(std::move(shapes))));
    return and_(std::move(cls));
  }

  // [1..n]: y shares the state's cells at 1..n and its length marker is the
  // state's coordinate-0 cell itself
  FormulaPtr output_rel_dynamic(const std::string& S, const TermPtr& y) {
    std::string c0 = g_("e"), a0 = g_("a"), nv = g_("V");
    auto window = [&](const std::string& cell) {
      std::string av = g_("a"), tv = g_("t");
      return bex(av, v(cell), bex(tv, v(av),
          and_({atomish(tv), in(sing(v(tv)), v(cell)),
                not_(lessp(sing(v(tv)), slit(1))),
                not_(lessp(v(nv), sing(v(tv))))})));
    };
    std::string cy = g_("e"), cs = g_("e2");
    return or_({and_({no_tag(v(S), Rat(0), g_), eq(y, lit(HFSet::empty_set()))}),
                bex(c0, v(S), bex(a0, v(c0), bex(nv, v(a0),
                    and_({eq(v(c0), pairt(alit(0), v(nv))),
                          in(v(c0), y),
                          ball(cy, y, or_({eq(v(cy), v(c0)),
                                           and_({in(v(cy), v(S)), window(cy)})})),
                          ball(cs, v(S), or_({in(v(cs), y), not_(window(cs))}))}))))});
  }

  // shared unpacking guard: e = (t, g) with a genuine stage tag t >= 0
  FormulaPtr stage_guard(const std::string& e, const std::string& t, const std::string& gg) {
    return and_({atomish(t), not_(lessp(sing(v(t)), slit(0))),
                 eq(v(e), pairt(v(t), v(gg)))});
  }

  FormulaPtr output_pin(const TermPtr& y) {
    std::string e = g_("e"), a = g_("a"), t = g_("t"), b = g_("b"), gg = g_("g");
    std::vector<FormulaPtr> per;
    for (const auto& [id, n] : m_.nodes) {
      if (n.kind != Node::Kind::Output) continue;
      std::string bo = g_("b"), so = g_("S");
      per.push_back(bex(bo, v(gg), bex(so, v(bo),
          and_({eq(v(gg), pairt(node_lit(id), v(so))), output_rel(n, so, y)}))));
    }
    return bex(e, v(kTraceVar), bex(a, v(e), bex(t, v(a), bex(b, v(e), bex(gg, v(b),
        and_({stage_guard(e, t, gg), or_(std::move(per))}))))));
  }

  FormulaPtr output_exists() {
    std::string e = g_("e"), a = g_("a"), t = g_("t"), b = g_("b"), gg = g_("g");
    std::vector<FormulaPtr> per;
    for (const auto& [id, n] : m_.nodes) {
      if (n.kind != Node::Kind::Output) continue;
      std::string bo = g_("b"), so = g_("S");
      per.push_back(bex(bo, v(gg), bex(so, v(bo),
          eq(v(gg), pairt(node_lit(id), v(so))))));
    }
    return bex(e, v(kTraceVar), bex(a, v(e), bex(t, v(a), bex(b, v(e), bex(gg, v(b),
        and_({stage_guard(e, t, gg), or_(std::move(per))}))))));
  }

  // wherever the trace shows an output configuration, its output is not y
  FormulaPtr output_anti(const TermPtr& y) {
    std::string e = g_("e"), a = g_("a"), t = g_("t"), b = g_("b"), gg = g_("g");
    std::vector<FormulaPtr> per;
    for (const auto& [id, n] : m_.nodes) {
      if (n.kind != Node::Kind::Output) continue;
      std::string bo = g_("b"), so = g_("S");
      per.push_back(ball(bo, v(gg), ball(so, v(bo),
          or_({not_(eq(v(gg), pairt(node_lit(id), v(so)))),
               not_(output_rel(n, so, y))}))));
    }
    return ball(e, v(kTraceVar), ball(a, v(e), ball(t, v(a), ball(b, v(e), ball(gg, v(b),
        or_({not_(stage_guard(e, t, gg)), and_(std::move(per))}))))));
  }

  const Machine& m_;
  std::map<std::string, long> ix_;
  std::map<std::string, NodePlan> plans_;
  std::map<std::string, OutSpec> outs_;
  NameGen g_;
};

}  // namespace

SigmaFunctionDef graph_formula(const Machine& m, bool totality_declared) {
  TraceCompiler tc(m);
  SigmaFunctionDef def;
  def.graph = tc.graph();
  if (totality_declared) def.cograph = tc.cograph();
  def.arity = m.arity;
  return def;
}

std::optional<TraceWitness> trace_witness(const Machine& m, const RFin& input, long fuel) {
  Trace tr = trace(m, input, fuel);
  if (tr.result.kind != RunResult::Kind::Output) return std::nullopt;
  auto ix = node_index(m);
  std::set<Rat> scratch{Rat(0), Rat(1)};
  for (size_t i = 0; i + 1 < tr.steps.size(); ++i) {
    const Configuration& c = tr.steps[i];
    if (c.node == kInputNodeId) continue;
    const Node& n = m.node(c.node);
    if (n.kind != Node::Kind::Compute && n.kind != Node::Kind::Branch) continue;
    NodePlan plan = plan_of(n);
    auto lookup = [&](long j) { return c.state.get(j); };
    for (const Rat& q : plan_temps(plan, lookup)) scratch.insert(q);
  }
  std::vector<HFRef> pool;
  pool.reserve(scratch.size());
  for (const Rat& q : scratch) pool.push_back(HFSet::atom(q));
  std::vector<HFRef> elems;
  elems.reserve(tr.steps.size() + 1);
  for (size_t i = 0; i < tr.steps.size(); ++i) {
    const Configuration& c = tr.steps[i];
    elems.push_back(hf_tag_pair(Rat(static_cast<long>(i)),
                                hf_tag_pair(Rat(ix.at(c.node)), encode_seq(c.state))));
  }
  elems.push_back(hf_tag_pair(Rat(-1), HFSet::set(std::move(pool))));
  TraceWitness w;
  w.code = HFSet::set(std::move(elems));
  w.hints = {w.code};
  w.input_code = tuple_code(input);
  w.output_code = tuple_code(tr.result.output);
  w.stages = static_cast<long>(tr.steps.size()) - 1;
  return w;
}

}  // namespace rbss
