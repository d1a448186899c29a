#include <atomic>
#include <functional>
#include <stdexcept>

#include "rbss/sigma.hpp"
#include "sigma_terms.hpp"

namespace rbss {

using namespace sig;

namespace {

// Substitution does not rename on capture, so every variable a combinator
// introduces -- especially ones pushed into component formulas -- gets a
// globally unique name.
std::string fresh(const char* stem) {
  static std::atomic<long> n{0};
  return std::string("_") + stem + std::to_string(n.fetch_add(1));
}

TermPtr empty_lit() { return lit(HFSet::empty_set()); }

// Code of the 1-tuple (0): just the length marker, the zero entry vanishes.
HFRef one_tuple_zero() { return tuple_code({Rat(0)}); }
HFRef len1_marker() { return hf_tag_pair(Rat(0), satom(Rat(1))); }

// Code of the 1-tuple holding the (nonzero) value inside the singleton term.
TermPtr one_tuple(const TermPtr& pay) {
  return Term::mk_set({lit(len1_marker()), pairt(alit(1), pay)});
}

// Case split on a chain payload {value}: hand the continuation the code of
// the 1-tuple holding that value.
FormulaPtr with_out1(const TermPtr& pay,
                     const std::function<FormulaPtr(const TermPtr&)>& k) {
  return or_({and_({zerop(pay), k(lit(one_tuple_zero()))}),
              and_({not_(zerop(pay)), k(one_tuple(pay))})});
}

FormulaPtr subst2(const FormulaPtr& f, const TermPtr& x, const TermPtr& y) {
  return subst(subst(f, "x", x), "y", y);
}

}  // namespace

HFRef tuple_code(const RFin& tuple) { return encode_seq(RInf::embed_input(tuple)); }

std::optional<RFin> tuple_decode(const HFRef& code) {
  auto state = decode_seq(code);
  if (!state) return std::nullopt;
  const Rat& n = state->get(0);
  if (!n.is_integer()) return std::nullopt;
  auto len = n.as_long();
  if (!len || *len < 0 || *len > (1L << 20)) return std::nullopt;
  RFin out;
  out.reserve(static_cast<size_t>(*len));
  for (long i = 1; i <= *len; ++i) out.push_back(state->get(i));
  // stray coordinates or a wrong marker fail the round trip
  if (!hf_equal(tuple_code(out), code)) return std::nullopt;
  return out;
}

FormulaPtr concat_relation(const TermPtr& left, const TermPtr& right, const TermPtr& whole) {
  NameGen g;
  auto K = [&] { return g("k"); };

  // empty left: the whole is the right part
  FormulaPtr left_empty = and_({eq(left, empty_lit()), eq(right, whole)});
  // empty right (left already known nonempty): the whole is the left part
  FormulaPtr right_empty = and_({eq(right, empty_lit()), eq(left, whole)});

  std::string cu0 = K(), au0 = K(), mu = K();
  std::string cv0 = K(), av0 = K(), mv = K();
  std::string cz0 = K(), az0 = K(), mz = K();

  // left value cells sit in the whole unchanged
  std::string cu = K();
  FormulaPtr left_cells =
      ball(cu, left, or_({in(slit(0), v(cu)), in(v(cu), whole)}));

  // right value cells reappear shifted up by the left length
  std::string cv = K(), av1 = K(), tv = K(), bv = K(), pv = K();
  std::string cz1 = K(), az1 = K(), tz1 = K();
  FormulaPtr right_cells = ball(cv, right, or_({in(slit(0), v(cv)),
      bex(av1, v(cv), bex(tv, v(av1), bex(bv, v(cv), bex(pv, v(bv),
          and_({eq(v(cv), pairt(v(tv), v(pv))), atomish(tv),
                bex(cz1, whole, bex(az1, v(cz1), bex(tz1, v(az1),
                    and_({eq(v(cz1), pairt(v(tz1), v(pv))),
                          addp(sing(v(tv)), v(mu), sing(v(tz1)))}))))})))))}));

  // and the whole holds nothing else: its marker, a low cell from the left,
  // or a high cell matching a right cell shifted up
  std::string cz = K(), az2 = K(), tz = K(), bz = K(), pz = K();
  std::string cv2 = K(), av2 = K(), tv2 = K();
  FormulaPtr whole_cells = ball(cz, whole, or_({
      eq(v(cz), pairt(alit(0), v(mz))),
      bex(az2, v(cz), bex(tz, v(az2),
          and_({atomish(tz), in(sing(v(tz)), v(cz)),
                or_({and_({not_(lessp(sing(v(tz)), slit(1))),
                           not_(lessp(v(mu), sing(v(tz)))),
                           in(v(cz), left)}),
                     and_({lessp(v(mu), sing(v(tz))),
                           bex(bz, v(cz), bex(pz, v(bz),
                               and_({eq(v(cz), pairt(v(tz), v(pz))),
                                     bex(cv2, right, bex(av2, v(cv2), bex(tv2, v(av2),
                                         and_({eq(v(cv2), pairt(v(tv2), v(pz))),
                                               addp(sing(v(tv2)), v(mu),
                                                    sing(v(tz)))}))))})))})})})))}));

  FormulaPtr both = bex(cv0, right, bex(av0, v(cv0), bex(mv, v(av0),
      and_({eq(v(cv0), pairt(alit(0), v(mv))),
            bex(cz0, whole, bex(az0, v(cz0), bex(mz, v(az0),
                and_({eq(v(cz0), pairt(alit(0), v(mz))),
                      addp(v(mu), v(mv), v(mz)),
                      left_cells, right_cells, whole_cells}))))}))));

  return or_({left_empty,
              bex(cu0, left, bex(au0, v(cu0), bex(mu, v(au0),
                  and_({eq(v(cu0), pairt(alit(0), v(mu))),
                        or_({right_empty, both})}))))});
}

SigmaFunctionDef compose_formula(const SigmaFunctionDef& f, const SigmaFunctionDef& g) {
  if (!f.graph || !g.graph) throw std::invalid_argument("composition needs both graphs");
  SigmaFunctionDef out;
  out.arity = g.arity;
  std::string zc = fresh("zc");
  out.graph = Formula::exists(
      zc, and_({subst(g.graph, "y", v(zc)), subst(f.graph, "x", v(zc))}));
  if (f.cograph && g.cograph) {
    std::string zd = fresh("zc");
    out.cograph = Formula::exists(
        zd, and_({subst(g.graph, "y", v(zd)), subst(f.cograph, "x", v(zd))}));
  }
  return out;
}

SigmaFunctionDef juxtapose_formula(const SigmaFunctionDef& f, const SigmaFunctionDef& g) {
  if (!f.graph || !g.graph) throw std::invalid_argument("juxtaposition needs both graphs");
  if (f.arity && g.arity && *f.arity != *g.arity)
    throw std::invalid_argument("juxtaposition needs equal input arities");
  SigmaFunctionDef out;
  out.arity = f.arity ? f.arity : g.arity;
  {
    std::string yf = fresh("yf"), yg = fresh("yg");
    out.graph = Formula::exists(yf, Formula::exists(yg, and_({
        subst(f.graph, "y", v(yf)), subst(g.graph, "y", v(yg)),
        concat_relation(v(yf), v(yg), v("y"))})));
  }
  if (f.cograph && g.cograph) {
    // both pieces are total, so y is wrong exactly when it differs from the
    // concatenation of the two true outputs
    std::string yf = fresh("yf"), yg = fresh("yg");
    out.cograph = Formula::exists(yf, Formula::exists(yg, and_({
        subst(f.graph, "y", v(yf)), subst(g.graph, "y", v(yg)),
        not_(concat_relation(v(yf), v(yg), v("y")))})));
  }
  return out;
}

SigmaFunctionDef mu_formula(const SigmaFunctionDef& phi) {
  if (!phi.graph) throw std::invalid_argument("mu needs a graph formula");
  if (!phi.cograph)
    throw std::invalid_argument(
        "mu needs the complement formula: totality was not declared for the base function");
  if (!phi.arity || *phi.arity < 1)
    throw std::invalid_argument("mu needs a stage argument to search over");

  TermPtr zero1 = lit(one_tuple_zero());

  // phi holds value 0 at the stage coded by `stage` (a full 1-tuple code)
  auto vanishes_at = [&](const TermPtr& stage, const FormulaPtr& body) {
    std::string xz = fresh("xz");
    return Formula::exists(xz, and_({concat_relation(stage, v("x"), v(xz)),
                                     subst2(body, v(xz), zero1)}));
  };

  // t = 0: the stage-0 value already vanishes
  FormulaPtr at_zero = and_({eq(v("y"), zero1), vanishes_at(zero1, phi.graph)});

  // t >= 1: y codes (t), the value vanishes at t, and the stage set holds
  // exactly 0..t-1, every member vouched nonvanishing by the complement
  std::string T = fresh("tt");
  std::string cy = fresh("cy"), ay = fresh("ay"), vt = fresh("vt");
  std::string s1 = fresh("s"), s2 = fresh("s"), s3 = fresh("s"), s4 = fresh("s");
  FormulaPtr t_shape = ball(s1, v(T), and_({
      atomish(s1),
      or_({zerop(sing(v(s1))), not_(lessp(sing(v(s1)), slit(1)))}),
      lessp(sing(v(s1)), v(vt)),
      or_({zerop(sing(v(s1))),
           bex(s2, v(T), addp(sing(v(s2)), slit(1), sing(v(s1))))})}));
  FormulaPtr anchor = bex(s3, v(T), addp(sing(v(s3)), slit(1), v(vt)));
  FormulaPtr earlier = ball(s4, v(T), or_({
      and_({zerop(sing(v(s4))), vanishes_at(zero1, phi.cograph)}),
      and_({not_(zerop(sing(v(s4)))),
            vanishes_at(one_tuple(sing(v(s4))), phi.cograph)})}));
  FormulaPtr at_least = bex(cy, v("y"), bex(ay, v(cy), bex(vt, v(ay), and_({
      eq(v("y"), one_tuple(v(vt))),
      t_shape, anchor, earlier, vanishes_at(v("y"), phi.graph)}))));

  SigmaFunctionDef out;
  out.arity = *phi.arity - 1;
  out.graph = Formula::exists(T, or_({at_zero, at_least}));
  return out;
}

SigmaFunctionDef primrec_formula(const SigmaFunctionDef& g, const SigmaFunctionDef& h) {
  if (!g.graph || !h.graph)
    throw std::invalid_argument("primitive recursion needs both graphs");
  if (!g.cograph || !h.cograph)
    throw std::invalid_argument("primitive recursion needs totality on both pieces");
  if (!g.arity || !h.arity || *h.arity != *g.arity + 2)
    throw std::invalid_argument(
        "primitive recursion arity mismatch: the step function wants (stage, previous, params)");

  TermPtr zero1 = lit(one_tuple_zero());

  // The value chain is a private table {(s, {f(s, params)}) : s = 0..n};
  // unlike sequence codes it keeps zero values, so every stage is present.
  auto build = [&](bool complement) {
    std::string C = fresh("ch"), P = fresh("pp");

    std::string c0 = fresh("c"), a0 = fresh("a"), v0 = fresh("vv");
    FormulaPtr base = bex(c0, v(C), bex(a0, v(c0), bex(v0, v(a0), and_({
        eq(v(c0), pairt(alit(0), v(v0))),
        with_out1(v(v0), [&](const TermPtr& code) {
          return subst2(g.graph, v(P), code);
        })}))));

    std::string c1 = fresh("c"), a1 = fresh("a"), t1 = fresh("s");
    std::string b1 = fresh("b"), v1 = fresh("vv");
    std::string c2 = fresh("c"), a2 = fresh("a"), t2 = fresh("s");
    std::string b2 = fresh("b"), v2 = fresh("vv");
    FormulaPtr guard = and_({eq(v(c1), pairt(v(t1), v(v1))), atomish(t1),
                             eq(v(c2), pairt(v(t2), v(v2))), atomish(t2),
                             addp(sing(v(t1)), slit(1), sing(v(t2)))});
    auto step_at = [&](const TermPtr& scode) {
      return with_out1(v(v1), [&](const TermPtr& vcode) {
        std::string ja = fresh("ja"), jb = fresh("jb");
        return Formula::exists(ja, Formula::exists(jb, and_({
            concat_relation(vcode, v(P), v(ja)),
            concat_relation(scode, v(ja), v(jb)),
            with_out1(v(v2), [&](const TermPtr& ocode) {
              return subst2(h.graph, v(jb), ocode);
            })})));
      });
    };
    FormulaPtr follows = or_({
        and_({zerop(sing(v(t1))), step_at(zero1)}),
        and_({not_(zerop(sing(v(t1)))), step_at(one_tuple(sing(v(t1))))})});
    FormulaPtr step =
        ball(c1, v(C), ball(a1, v(c1), ball(t1, v(a1), ball(b1, v(c1), ball(v1, v(b1),
        ball(c2, v(C), ball(a2, v(c2), ball(t2, v(a2), ball(b2, v(c2), ball(v2, v(b2),
        or_({not_(guard), follows})))))))))));

    // with the stage count pinned (as a singleton term), the chain holds
    // stages 0..n only, each nonzero stage preceded, and stage n fixes y
    auto chain_clauses = [&](const TermPtr& count) {
      std::string cc = fresh("c"), ac = fresh("a"), sc = fresh("s");
      std::string bc = fresh("b"), vc = fresh("vv");
      std::string cd = fresh("c"), ad = fresh("a"), sd = fresh("s");
      FormulaPtr shape = ball(cc, v(C), bex(ac, v(cc), bex(sc, v(ac),
          bex(bc, v(cc), bex(vc, v(bc), and_({
          eq(v(cc), pairt(v(sc), v(vc))), atomish(sc), atomish_t(v(vc)),
          not_(lessp(sing(v(sc)), slit(0))),
          not_(lessp(count, sing(v(sc)))),
          or_({zerop(sing(v(sc))),
               and_({not_(lessp(sing(v(sc)), slit(1))),
                     bex(cd, v(C), bex(ad, v(cd), bex(sd, v(ad), and_({
                         atomish(sd), in(sing(v(sd)), v(cd)),
                         addp(sing(v(sd)), slit(1), sing(v(sc)))}))))})})}))))));
      std::string cn = fresh("c"), an = fresh("a"), sn = fresh("s");
      std::string bn = fresh("b"), vf = fresh("vv");
      FormulaPtr last = bex(cn, v(C), bex(an, v(cn), bex(sn, v(an),
          bex(bn, v(cn), bex(vf, v(bn), and_({
          eq(v(cn), pairt(v(sn), v(vf))), atomish(sn),
          eq(sing(v(sn)), count),
          with_out1(v(vf), [&](const TermPtr& code) {
            FormulaPtr pin = eq(v("y"), code);
            return complement ? not_(std::move(pin)) : pin;
          })}))))));
      return and_({std::move(shape), std::move(last)});
    };

    NameGen ng;
    FormulaPtr at_zero = and_({no_tag(v("x"), Rat(1), ng),
                               concat_relation(zero1, v(P), v("x")),
                               chain_clauses(slit(0))});
    std::string cx = fresh("c"), ax = fresh("a"), vn = fresh("vn");
    FormulaPtr positive = bex(cx, v("x"), bex(ax, v(cx), bex(vn, v(ax), and_({
        eq(v(cx), pairt(alit(1), v(vn))),
        concat_relation(one_tuple(v(vn)), v(P), v("x")),
        chain_clauses(v(vn))}))));

    NameGen tg;
    return Formula::exists(C, Formula::exists(P, and_({
        tag_functional(v(C), tg), base, step, or_({at_zero, positive})})));
  };

  SigmaFunctionDef out;
  out.arity = *g.arity + 1;
  out.graph = build(false);
  out.cograph = build(true);
  return out;
}

}  // namespace rbss
