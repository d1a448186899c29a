#pragma once

#include <optional>
#include <utility>

#include "rbss/hfset.hpp"
#include "rbss/rinf.hpp"
#include "rbss/trees.hpp"

namespace rbss {

// The bijection Z -> N used to fold a window's start index into a tree rank:
// i >= 0 maps to 2i, i < 0 maps to -2i - 1.
long zigzag(long i);
long unzigzag(long n);

// Tagged pair {{tag}, {payload}} with the payload always a set, so the two
// sides can never coincide and unpacking is unambiguous.
HFRef hf_tag_pair(const Rat& tag, const HFRef& payload);
std::optional<std::pair<Rat, HFRef>> hf_untag_pair(const HFRef& s);

// Sequence code straight off the sparse support: { {{i},{{x_i}}} : x_i != 0 }.
HFRef encode_seq(const RInf& v);
std::optional<RInf> decode_seq(const HFRef& s);

// Tree-shaped code. The support window [first nonzero, last nonzero] picks a
// tree with one leaf per window position (holes included) via
// tree_unrank(width, zigzag(start)); leaves in depth-first canonical order
// carry the tagged values, internal nodes become the set of their children's
// codes, and the empty sequence codes as {}. Injective by the position tags.
HFRef encode(const RInf& v);

// Partial inverse: extracts the tagged leaves, then accepts only if encoding
// the candidate reproduces s exactly.
std::optional<RInf> decode(const HFRef& s);

}  // namespace rbss
