#include "rbss/rinf.hpp"

#include <sstream>

namespace rbss {

namespace {
const Rat kZero;
}

RInf::RInf(std::map<long, Rat> entries) : m_(std::move(entries)) {
  for (auto it = m_.begin(); it != m_.end();) {
    if (it->second.is_zero()) it = m_.erase(it);
    else ++it;
  }
}

RInf RInf::from_entries(std::initializer_list<std::pair<long, Rat>> e) {
  RInf r;
  for (const auto& [i, v] : e) r.set(i, v);
  return r;
}

RInf RInf::embed_input(const RFin& input) {
  RInf r;
  r.set(0, Rat(static_cast<long>(input.size())));
  for (size_t j = 0; j < input.size(); ++j) r.set(static_cast<long>(j) + 1, input[j]);
  return r;
}

const Rat& RInf::get(long i) const {
  auto it = m_.find(i);
  return it == m_.end() ? kZero : it->second;
}

void RInf::set(long i, const Rat& v) {
  if (v.is_zero()) m_.erase(i);
  else m_[i] = v;
}

RInf RInf::shift_left() const {
  RInf r;
  for (const auto& [i, v] : m_) r.m_.emplace(i - 1, v);
  return r;
}

RInf RInf::shift_right() const {
  RInf r;
  for (const auto& [i, v] : m_) r.m_.emplace(i + 1, v);
  return r;
}

std::string RInf::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [i, v] : m_) {
    if (!first) os << ", ";
    first = false;
    os << i << ": " << v.str();
  }
  os << '}';
  return os.str();
}

}  // namespace rbss
