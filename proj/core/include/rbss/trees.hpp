#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace rbss {

class FiniteTree;
using TreeRef = std::shared_ptr<const FiniteTree>;

// Rooted unordered tree, kept in canonical form: children sorted by
// tree_compare. Immutable; subtrees are shared.
class FiniteTree {
 public:
  static TreeRef leaf();
  static TreeRef node(std::vector<TreeRef> children);  // empty children = leaf

  const std::vector<TreeRef>& children() const { return kids_; }
  bool is_leaf() const { return kids_.empty(); }
  size_t node_count() const { return nodes_; }
  size_t leaf_count() const { return leaves_; }

  // Balanced parentheses, children in canonical order: "()", "(()())", ...
  std::string str() const;

 private:
  FiniteTree(std::vector<TreeRef> kids, size_t nodes, size_t leaves)
      : kids_(std::move(kids)), nodes_(nodes), leaves_(leaves) {}

  std::vector<TreeRef> kids_;
  size_t nodes_;
  size_t leaves_;
};

// Total order on canonical trees: node count first, then the child lists
// lexicographically (a strict prefix sorts first). Zero iff structurally equal.
int tree_compare(const TreeRef& a, const TreeRef& b);
bool tree_equal(const TreeRef& a, const TreeRef& b);

// All canonical trees with exactly `nodes` nodes and `leaves` leaves, sorted
// by tree_compare. Memoized; lazily built and not thread-safe.
const std::vector<TreeRef>& all_trees(size_t nodes, size_t leaves);

// Mutually inverse bijections between the naturals and canonical trees with
// exactly `leaves` terminal nodes, enumerated without repetition in order of
// (node count, tree_compare).
//
// tree_unrank throws std::invalid_argument on leaves == 0 or n < 0;
// tree_rank throws when the tree's leaf count differs from `leaves`.
TreeRef tree_unrank(size_t leaves, long n);
long tree_rank(size_t leaves, const TreeRef& t);

}  // namespace rbss
