#include "rbss/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace rbss {

TreeRef FiniteTree::leaf() {
  static const TreeRef one(new FiniteTree({}, 1, 1));
  return one;
}

TreeRef FiniteTree::node(std::vector<TreeRef> children) {
  if (children.empty()) return leaf();
  std::sort(children.begin(), children.end(),
            [](const TreeRef& a, const TreeRef& b) { return tree_compare(a, b) < 0; });
  size_t nodes = 1, leaves = 0;
  for (const auto& c : children) {
    nodes += c->node_count();
    leaves += c->leaf_count();
  }
  return TreeRef(new FiniteTree(std::move(children), nodes, leaves));
}

std::string FiniteTree::str() const {
  std::string out = "(";
  for (const auto& c : kids_) out += c->str();
  out += ")";
  return out;
}

int tree_compare(const TreeRef& a, const TreeRef& b) {
  if (a.get() == b.get()) return 0;
  if (a->node_count() != b->node_count()) return a->node_count() < b->node_count() ? -1 : 1;
  const auto& x = a->children();
  const auto& y = b->children();
  size_t n = std::min(x.size(), y.size());
  for (size_t i = 0; i < n; ++i)
    if (int c = tree_compare(x[i], y[i])) return c;
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

bool tree_equal(const TreeRef& a, const TreeRef& b) { return tree_compare(a, b) == 0; }

namespace {

// The most leaves m nodes can carry (a star); the fewest is always 1 (a chain).
size_t max_leaves(size_t nodes) { return nodes == 1 ? 1 : nodes - 1; }

// A multiset of children with `m` total nodes and `k` total leaves is built by
// picking children in non-increasing (nodes, leaves, index) order, so each
// multiset appears exactly once. Equal picks give duplicate children, which
// unordered trees allow.
struct ChildPick {
  size_t nodes, leaves, index;
};

void fill_children(size_t m_left, size_t k_left, const ChildPick& cap,
                   std::vector<TreeRef>& kids, std::vector<TreeRef>& out) {
  if (m_left == 0) {
    if (k_left == 0) out.push_back(FiniteTree::node(kids));
    return;
  }
  // every node hosts at least one leaf, and no tree has more leaves than nodes
  if (k_left == 0 || k_left > m_left) return;
  for (size_t m = std::min(m_left, cap.nodes); m >= 1; --m) {
    size_t k_hi = std::min(k_left, max_leaves(m));
    if (m == cap.nodes) k_hi = std::min(k_hi, cap.leaves);
    for (size_t k = k_hi; k >= 1; --k) {
      // the remainder must stay fillable
      size_t mr = m_left - m, kr = k_left - k;
      if ((mr == 0) != (kr == 0) || kr > mr) continue;
      const auto& bucket = all_trees(m, k);
      if (bucket.empty()) continue;
      size_t i_hi = bucket.size() - 1;
      if (m == cap.nodes && k == cap.leaves) i_hi = std::min(i_hi, cap.index);
      for (size_t i = i_hi;; --i) {
        kids.push_back(bucket[i]);
        fill_children(mr, kr, {m, k, i}, kids, out);
        kids.pop_back();
        if (i == 0) break;
      }
    }
  }
}

}  // namespace

const std::vector<TreeRef>& all_trees(size_t nodes, size_t leaves) {
  static std::map<std::pair<size_t, size_t>, std::vector<TreeRef>> memo;
  auto key = std::make_pair(nodes, leaves);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  std::vector<TreeRef> out;
  if (nodes == 1) {
    if (leaves == 1) out.push_back(FiniteTree::leaf());
  } else if (nodes > 1 && leaves >= 1 && leaves <= max_leaves(nodes)) {
    std::vector<TreeRef> kids;
    fill_children(nodes - 1, leaves, {nodes - 1, SIZE_MAX, SIZE_MAX}, kids, out);
    std::sort(out.begin(), out.end(),
              [](const TreeRef& a, const TreeRef& b) { return tree_compare(a, b) < 0; });
  }
  return memo.emplace(key, std::move(out)).first->second;
}

TreeRef tree_unrank(size_t leaves, long n) {
  if (leaves == 0) throw std::invalid_argument("tree_unrank: leaf count must be positive");
  if (n < 0) throw std::invalid_argument("tree_unrank: rank must be nonnegative");
  size_t left = static_cast<size_t>(n);
  for (size_t m = 1;; ++m) {
    const auto& bucket = all_trees(m, leaves);
    if (left < bucket.size()) return bucket[left];
    left -= bucket.size();
  }
}

long tree_rank(size_t leaves, const TreeRef& t) {
  if (!t) throw std::invalid_argument("tree_rank: null tree");
  if (t->leaf_count() != leaves)
    throw std::invalid_argument("tree_rank: tree has " + std::to_string(t->leaf_count()) +
                                " leaves, expected " + std::to_string(leaves));
  long rank = 0;
  for (size_t m = 1; m < t->node_count(); ++m) rank += static_cast<long>(all_trees(m, leaves).size());
  const auto& bucket = all_trees(t->node_count(), leaves);
  auto pos = std::lower_bound(bucket.begin(), bucket.end(), t,
                              [](const TreeRef& a, const TreeRef& b) { return tree_compare(a, b) < 0; });
  if (pos == bucket.end() || !tree_equal(*pos, t))
    throw std::logic_error("tree_rank: canonical tree missing from its bucket");
  return rank + static_cast<long>(pos - bucket.begin());
}

}  // namespace rbss
