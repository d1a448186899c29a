#include "rbss/encode.hpp"

#include <map>

namespace rbss {

long zigzag(long i) { return i >= 0 ? 2 * i : -2 * i - 1; }

long unzigzag(long n) { return n % 2 == 0 ? n / 2 : -(n + 1) / 2; }

HFRef hf_tag_pair(const Rat& tag, const HFRef& payload) {
  return HFSet::set({HFSet::set({HFSet::atom(tag)}), HFSet::set({payload})});
}

std::optional<std::pair<Rat, HFRef>> hf_untag_pair(const HFRef& s) {
  if (s->is_atom() || s->elems().size() != 2) return std::nullopt;
  const HFRef* tag_side = nullptr;
  const HFRef* payload_side = nullptr;
  for (const auto& e : s->elems()) {
    if (e->is_atom() || e->elems().size() != 1) return std::nullopt;
    const HFRef& inner = e->elems()[0];
    (inner->is_atom() ? tag_side : payload_side) = &inner;
  }
  if (!tag_side || !payload_side) return std::nullopt;
  return std::make_pair((*tag_side)->value(), *payload_side);
}

HFRef encode_seq(const RInf& v) {
  std::vector<HFRef> elems;
  elems.reserve(v.support_size());
  for (const auto& [i, x] : v.entries())
    elems.push_back(hf_tag_pair(Rat(i), HFSet::set({HFSet::atom(x)})));
  return HFSet::set(std::move(elems));
}

namespace {

// A position-tagged value cell is {{i},{{x}}}: an integer tag and a payload
// holding exactly one atom.
std::optional<std::pair<long, Rat>> read_cell(const HFRef& s) {
  auto p = hf_untag_pair(s);
  if (!p) return std::nullopt;
  auto pos = p->first.as_long();
  if (!pos) return std::nullopt;
  const HFRef& payload = p->second;
  if (payload->elems().size() != 1 || !payload->elems()[0]->is_atom()) return std::nullopt;
  return std::make_pair(*pos, payload->elems()[0]->value());
}

// Collect every cell in the structure; false on atoms, malformed cells hiding
// as interior sets are caught by the caller's re-encode check.
bool harvest(const HFRef& s, std::map<long, Rat>& cells) {
  if (auto cell = read_cell(s)) {
    if (!cells.emplace(cell->first, cell->second).second) return false;  // duplicate position
    return true;
  }
  if (s->is_atom() || s->elems().empty()) return false;
  for (const auto& e : s->elems())
    if (!harvest(e, cells)) return false;
  return true;
}

}  // namespace

std::optional<RInf> decode_seq(const HFRef& s) {
  if (s->is_atom()) return std::nullopt;
  RInf v;
  for (const auto& e : s->elems()) {
    auto cell = read_cell(e);
    if (!cell || cell->second.is_zero() || v.has(cell->first)) return std::nullopt;
    v.set(cell->first, cell->second);
  }
  return v;
}

HFRef encode(const RInf& v) {
  if (v.empty()) return HFSet::empty_set();
  const long first = v.entries().begin()->first;
  const long last = v.entries().rbegin()->first;
  TreeRef shape = tree_unrank(static_cast<size_t>(last - first + 1), zigzag(first));

  long next = first;
  // depth-first over the canonical form hands leaf j the window position first+j
  auto interp = [&](auto&& self, const TreeRef& t) -> HFRef {
    if (t->is_leaf()) {
      long pos = next++;
      return hf_tag_pair(Rat(pos), HFSet::set({HFSet::atom(v.get(pos))}));
    }
    std::vector<HFRef> parts;
    parts.reserve(t->children().size());
    for (const auto& c : t->children()) parts.push_back(self(self, c));
    return HFSet::set(std::move(parts));
  };
  return interp(interp, shape);
}

std::optional<RInf> decode(const HFRef& s) {
  if (!s->is_atom() && s->elems().empty()) return RInf{};
  std::map<long, Rat> cells;
  if (!harvest(s, cells)) return std::nullopt;
  RInf v;
  for (const auto& [i, x] : cells) v.set(i, x);  // window holes drop out here
  if (!hf_equal(encode(v), s)) return std::nullopt;
  return v;
}

}  // namespace rbss
