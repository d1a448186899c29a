#include "rbss/paths.hpp"

#include <stdexcept>

namespace rbss {

std::string PathCondition::str() const {
  switch (kind) {
    case Kind::NonNeg:
      return fn.str() + " >= 0";
    case Kind::Neg:
      return fn.str() + " < 0";
    case Kind::NonZero:
      return fn.str() + " != 0";
  }
  return "";
}

namespace {

using SymState = std::map<long, RatFun>;

struct Enumerator {
  const Machine& m;
  long arity;
  long depth;
  std::vector<PathSpec> out;

  void walk(const std::string& node_id, const SymState& state, std::vector<std::string> nodes,
            std::vector<PathCondition> conds) {
    nodes.push_back(node_id);
    if (static_cast<long>(nodes.size()) > depth) return;

    if (node_id == kInputNodeId) {
      walk(m.entry, state, std::move(nodes), std::move(conds));
      return;
    }
    const Node& n = m.node(node_id);
    switch (n.kind) {
      case Node::Kind::Compute: {
        SymState next = state;
        for (const auto& [target, fn] : n.assigns) {
          RatFun den = subst(fn.den, state).normalized();
          if (den.is_constant()) {
            // constant denominators need no side condition; a zero one means
            // every run through here is undefined, so the path dies
            if (den.num.is_zero()) return;
          } else {
            conds.push_back({PathCondition::Kind::NonZero, den});
          }
          RatFun num = subst(fn.num, state);
          RatFun v = (num * den.reciprocal()).normalized();
          if (v.num.is_zero()) next.erase(target);
          else next[target] = v;
        }
        walk(n.next, next, std::move(nodes), std::move(conds));
        return;
      }
      case Node::Kind::Branch: {
        RatFun t = subst(n.test, state).normalized();
        if (t.is_constant()) {
          // the sign is decided along this path; fold instead of forking
          const std::string& target =
              t.num.const_value().sign() >= 0 ? n.on_nonneg : n.on_neg;
          walk(target, state, std::move(nodes), std::move(conds));
          return;
        }
        {
          auto c2 = conds;
          c2.push_back({PathCondition::Kind::NonNeg, t});
          walk(n.on_nonneg, state, nodes, std::move(c2));
        }
        conds.push_back({PathCondition::Kind::Neg, t});
        walk(n.on_neg, state, std::move(nodes), std::move(conds));
        return;
      }
      case Node::Kind::Shift: {
        SymState next;
        for (const auto& [i, f] : state) next.emplace(n.shifts_left ? i - 1 : i + 1, f);
        walk(n.next, next, std::move(nodes), std::move(conds));
        return;
      }
      case Node::Kind::Output: {
        PathSpec p;
        p.arity = arity;
        p.nodes = std::move(nodes);
        p.conditions = std::move(conds);
        auto lookup = [&](long i) -> RatFun {
          auto it = state.find(i);
          return it == state.end() ? RatFun::constant(Rat(0)) : it->second;
        };
        auto resolve_bound = [&](const OutBound& b) -> long {
          if (!b.is_marker) return b.value;
          RatFun marker = lookup(0);
          if (!marker.is_constant())
            throw std::runtime_error(
                "output range bound 'n' is not constant along this path; "
                "symbolic path outputs need a fixed coordinate list");
          Rat v = marker.num.const_value() / marker.den.const_value();
          auto iv = v.as_long();
          if (!iv || *iv < 0)
            throw std::runtime_error("output range bound 'n' does not resolve to a "
                                     "nonnegative integer on this path");
          return *iv;
        };
        for (const auto& item : n.outputs) {
          if (!item.is_range) {
            p.outputs.push_back(lookup(item.index));
            continue;
          }
          long lo = resolve_bound(item.lo), hi = resolve_bound(item.hi);
          for (long i = lo; i <= hi; ++i) p.outputs.push_back(lookup(i));
        }
        out.push_back(std::move(p));
        return;
      }
    }
  }
};

}  // namespace

std::vector<PathSpec> enumerate_paths(const Machine& m, long arity, long depth) {
  if (arity < 0) throw std::invalid_argument("arity must be nonnegative");
  if (m.arity && *m.arity != arity)
    throw std::invalid_argument("machine '" + m.name + "' expects arity " +
                                std::to_string(*m.arity));
  Enumerator e{m, arity, depth, {}};
  SymState init;
  init.emplace(0, RatFun::constant(Rat(arity)));
  for (long i = 1; i <= arity; ++i) init.emplace(i, RatFun::var(i));
  e.walk(kInputNodeId, init, {}, {});
  return std::move(e.out);
}

std::optional<RFin> eval_path(const PathSpec& p, const RFin& input) {
  if (static_cast<long>(input.size()) != p.arity)
    throw std::invalid_argument("input length does not match path arity");
  auto lookup = [&](long i) -> Rat {
    if (i >= 1 && i <= p.arity) return input[static_cast<size_t>(i - 1)];
    return Rat(0);
  };
  for (const auto& c : p.conditions) {
    Rat pnum = c.fn.num.eval(lookup);
    Rat q = c.fn.den.eval(lookup);
    if (q.is_zero()) return std::nullopt;
    switch (c.kind) {
      case PathCondition::Kind::NonNeg:
        if ((pnum * q).sign() < 0) return std::nullopt;
        break;
      case PathCondition::Kind::Neg:
        if ((pnum * q).sign() >= 0) return std::nullopt;
        break;
      case PathCondition::Kind::NonZero:
        if (pnum.is_zero()) return std::nullopt;
        break;
    }
  }
  RFin out;
  out.reserve(p.outputs.size());
  for (const auto& f : p.outputs) {
    Rat q = f.den.eval(lookup);
    if (q.is_zero()) return std::nullopt;  // guarded by conditions; defensive
    out.push_back(f.num.eval(lookup) / q);
  }
  return out;
}

}  // namespace rbss
