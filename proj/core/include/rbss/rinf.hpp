#pragma once

#include <map>
#include <vector>

#include "rbss/rational.hpp"

namespace rbss {

// Finite tuple of reals (the machine's external input/output alphabet).
using RFin = std::vector<Rat>;

// Bi-infinite sequence over the reals with finite support.
// Canonical: zero entries are never stored.
class RInf {
 public:
  RInf() = default;
  explicit RInf(std::map<long, Rat> entries);

  static RInf from_entries(std::initializer_list<std::pair<long, Rat>> e);

  // Standard input embedding: |input| at coordinate 0, values at 1..n.
  static RInf embed_input(const RFin& input);

  const Rat& get(long i) const;       // zero when absent
  void set(long i, const Rat& v);     // erases on zero
  bool has(long i) const { return m_.count(i) != 0; }

  // Coordinate shifts: left means new[i] = old[i+1], right means new[i] = old[i-1].
  RInf shift_left() const;
  RInf shift_right() const;

  const std::map<long, Rat>& entries() const { return m_; }
  bool empty() const { return m_.empty(); }
  size_t support_size() const { return m_.size(); }

  friend bool operator==(const RInf& a, const RInf& b) { return a.m_ == b.m_; }
  friend bool operator!=(const RInf& a, const RInf& b) { return !(a == b); }

  std::string str() const;  // e.g. "{0: 1, 1: 9}"

 private:
  std::map<long, Rat> m_;
};

}  // namespace rbss
