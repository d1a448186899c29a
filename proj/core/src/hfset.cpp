#include "rbss/hfset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rbss {

namespace {

inline size_t mix(size_t h, size_t v) {
  // boost-style combine; good enough for container use
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

}  // namespace

HFSet::HFSet(const Rat& v) : is_atom_(true), value_(v) {
  hash_ = mix(0x517cc1b727220a95ull, v.hash());
}

HFSet::HFSet(std::vector<HFRef> elems) : is_atom_(false), elems_(std::move(elems)) {
  size_t h = 0x2545f4914f6cdd1dull;
  long r = 0;
  size_t n = 1;
  for (const auto& e : elems_) {
    h = mix(h, e->hash());
    r = std::max(r, e->rank() + 1);
    n += e->node_count();
  }
  hash_ = h;
  rank_ = r;
  nodes_ = n;
}

HFRef HFSet::atom(const Rat& v) { return HFRef(new HFSet(v)); }

HFRef HFSet::set(std::vector<HFRef> elems) {
  std::sort(elems.begin(), elems.end(), HFLess{});
  elems.erase(std::unique(elems.begin(), elems.end(),
                          [](const HFRef& a, const HFRef& b) { return hf_equal(a, b); }),
              elems.end());
  return HFRef(new HFSet(std::move(elems)));
}

const HFRef& HFSet::empty_set() {
  static const HFRef e = HFSet::set({});
  return e;
}

const Rat& HFSet::value() const {
  if (!is_atom_) throw std::domain_error("value() on a set");
  return value_;
}

const std::vector<HFRef>& HFSet::elems() const {
  if (is_atom_) throw std::domain_error("elems() on an atom");
  return elems_;
}

int HFSet::compare(const HFSet& a, const HFSet& b) {
  if (a.is_atom_ != b.is_atom_) return a.is_atom_ ? -1 : 1;
  if (a.is_atom_) {
    if (a.value_ < b.value_) return -1;
    if (b.value_ < a.value_) return 1;
    return 0;
  }
  size_t n = std::min(a.elems_.size(), b.elems_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = hf_compare(a.elems_[i], b.elems_[i]);
    if (c != 0) return c;
  }
  if (a.elems_.size() != b.elems_.size()) return a.elems_.size() < b.elems_.size() ? -1 : 1;
  return 0;
}

bool hf_member(const HFRef& x, const HFRef& s) {
  if (s->is_atom()) throw std::domain_error("membership in an atom");
  const auto& es = s->elems();
  // elements are sorted; binary search by the canonical order
  auto it = std::lower_bound(es.begin(), es.end(), x, HFLess{});
  return it != es.end() && hf_equal(*it, x);
}

std::string HFSet::str() const {
  if (is_atom_) return "atom(" + value_.str() + ")";
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ", ";
    os << elems_[i]->str();
  }
  os << '}';
  return os.str();
}

namespace {

struct HFParser {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("bad set text at position " + std::to_string(i) + ": " + msg);
  }

  void expect(char c) {
    skip_ws();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }

  HFRef parse_node() {
    skip_ws();
    if (i >= s.size()) fail("unexpected end of input");
    if (s[i] == '{') {
      ++i;
      std::vector<HFRef> elems;
      skip_ws();
      if (i < s.size() && s[i] == '}') {
        ++i;
        return HFSet::set({});
      }
      while (true) {
        elems.push_back(parse_node());
        skip_ws();
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        expect('}');
        return HFSet::set(std::move(elems));
      }
    }
    if (s.compare(i, 5, "atom(") == 0) {
      i += 5;
      size_t j = s.find(')', i);
      if (j == std::string::npos) fail("unterminated atom");
      std::string lit = s.substr(i, j - i);
      i = j + 1;
      auto v = Rat::try_parse(lit);
      if (!v) fail("malformed rational '" + lit + "'");
      return HFSet::atom(*v);
    }
    fail("expected '{' or 'atom('");
  }
};

}  // namespace

HFRef HFSet::parse(const std::string& text) {
  HFParser p{text};
  HFRef r = p.parse_node();
  p.skip_ws();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace rbss
