#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rbss/rational.hpp"

namespace rbss {

class HFSet;
using HFRef = std::shared_ptr<const HFSet>;

// Hereditarily finite set over rational atoms. Immutable and canonical:
// a node is either an atom carrying a rational, or a set whose elements are
// stored sorted (by compare) with duplicates removed. Equality of canonical
// forms is structural equality.
class HFSet {
 public:
  static HFRef atom(const Rat& v);
  static HFRef set(std::vector<HFRef> elems);  // sorts and dedups
  static const HFRef& empty_set();

  bool is_atom() const { return is_atom_; }
  bool is_set() const { return !is_atom_; }

  const Rat& value() const;                 // atoms only; throws otherwise
  const std::vector<HFRef>& elems() const;  // sets only; throws otherwise

  size_t hash() const { return hash_; }
  // Number of tree nodes (atoms and set braces both count one).
  size_t node_count() const { return nodes_; }
  // Atoms and the empty set have rank 0; otherwise 1 + max over elements.
  long rank() const { return rank_; }

  // Total order: atoms before sets; atoms by value; sets lexicographically
  // by their (ordered) elements, a strict prefix sorting first.
  static int compare(const HFSet& a, const HFSet& b);

  // Canonical text: "atom(p/q)", "{}", "{atom(1), {atom(2)}}".
  std::string str() const;
  // Inverse of str (whitespace tolerant); throws std::invalid_argument.
  static HFRef parse(const std::string& text);

 private:
  HFSet(const Rat& v);
  HFSet(std::vector<HFRef> elems);

  bool is_atom_;
  Rat value_;
  std::vector<HFRef> elems_;
  size_t hash_ = 0;
  size_t nodes_ = 1;
  long rank_ = 0;
};

inline int hf_compare(const HFRef& a, const HFRef& b) {
  if (a.get() == b.get()) return 0;
  return HFSet::compare(*a, *b);
}

inline bool hf_equal(const HFRef& a, const HFRef& b) {
  if (a.get() == b.get()) return true;
  if (a->hash() != b->hash()) return false;
  return HFSet::compare(*a, *b) == 0;
}

// Membership x in s. The right-hand side must be a set; asking about the
// elements of an atom is a type error (std::domain_error).
bool hf_member(const HFRef& x, const HFRef& s);

struct HFLess {
  bool operator()(const HFRef& a, const HFRef& b) const { return hf_compare(a, b) < 0; }
};

}  // namespace rbss
