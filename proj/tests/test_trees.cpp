#include "doctest.h"
#include "rbss/trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace rbss;

namespace {

TreeRef chain(size_t n) {
  TreeRef t = FiniteTree::leaf();
  for (size_t i = 1; i < n; ++i) t = FiniteTree::node({t});
  return t;
}

// Independent oracle: Beyer-Hedetniemi level-sequence enumeration of rooted
// trees on n nodes. Successor rule: find the last entry above 2, then repeat
// the block starting at its most recent possible parent.
std::vector<std::vector<int>> level_sequences(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> L(n);
  for (int i = 0; i < n; ++i) L[i] = i + 1;
  for (;;) {
    out.push_back(L);
    int p = -1;
    for (int i = n - 1; i >= 0; --i)
      if (L[i] > 2) { p = i; break; }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (L[i] == L[p] - 1) { q = i; break; }
    for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
  }
  return out;
}

TreeRef from_levels(const std::vector<int>& L) {
  // children[d] collects finished subtrees waiting for a parent at depth d
  std::vector<std::vector<TreeRef>> pending(L.size() + 2);
  int prev = 0;
  auto close_down_to = [&](int depth) {
    for (int d = prev; d > depth; --d) {
      pending[d - 1].push_back(FiniteTree::node(std::move(pending[d])));
      pending[d].clear();
    }
  };
  for (int d : L) {
    close_down_to(d - 1);
    prev = d;
  }
  close_down_to(0);
  REQUIRE(pending[0].size() == 1);
  return pending[0][0];
}

}  // namespace

TEST_CASE("building blocks: counts, canonical child order, text") {
  TreeRef l = FiniteTree::leaf();
  CHECK(l->is_leaf());
  CHECK(l->node_count() == 1);
  CHECK(l->leaf_count() == 1);
  CHECK(l->str() == "()");
  CHECK(FiniteTree::node({})->is_leaf());

  TreeRef t = FiniteTree::node({chain(2), l});
  TreeRef u = FiniteTree::node({l, chain(2)});
  CHECK(tree_equal(t, u));
  CHECK(t->str() == "(()(()))");  // leaf sorts before the 2-chain
  CHECK(t->node_count() == 4);
  CHECK(t->leaf_count() == 2);

  CHECK(tree_compare(l, chain(2)) < 0);
  CHECK(tree_compare(chain(3), FiniteTree::node({l, l})) != 0);
  CHECK(tree_compare(t, t) == 0);
  // same node count: the star's first child (a leaf) beats the chain's
  CHECK(tree_compare(FiniteTree::node({l, l}), chain(3)) < 0);
}

TEST_CASE("bucket counts for small shapes") {
  CHECK(all_trees(1, 1).size() == 1);
  CHECK(all_trees(1, 2).empty());
  CHECK(all_trees(2, 1).size() == 1);
  CHECK(all_trees(2, 2).empty());  // two nodes cannot carry two leaves
  CHECK(all_trees(3, 2).size() == 1);
  CHECK(all_trees(4, 2).size() == 2);
  CHECK(all_trees(5, 2).size() == 4);
  CHECK(all_trees(4, 3).size() == 1);

  // every bucket is strictly sorted and sized/shaped as labeled
  for (size_t m = 1; m <= 9; ++m)
    for (size_t k = 1; k <= m; ++k) {
      const auto& bucket = all_trees(m, k);
      for (size_t i = 0; i < bucket.size(); ++i) {
        CHECK(bucket[i]->node_count() == m);
        CHECK(bucket[i]->leaf_count() == k);
        if (i) CHECK(tree_compare(bucket[i - 1], bucket[i]) < 0);
      }
    }
}

TEST_CASE("enumeration agrees with an independent exhaustive generator") {
  // expected totals per node count are the rooted-tree numbers
  const size_t totals[] = {1, 1, 2, 4, 9, 20, 48, 115, 286};
  for (int n = 1; n <= 9; ++n) {
    auto seqs = level_sequences(n);
    std::set<std::string> oracle;
    for (const auto& L : seqs) oracle.insert(from_levels(L)->str());
    CHECK(oracle.size() == seqs.size());  // the oracle itself never repeats
    CHECK(oracle.size() == totals[n - 1]);

    std::set<std::string> ours;
    for (size_t k = 1; k <= static_cast<size_t>(n); ++k)
      for (const auto& t : all_trees(n, k)) ours.insert(t->str());
    CHECK(ours == oracle);
  }
}

TEST_CASE("unranking: fixed points and shape") {
  CHECK(tree_unrank(1, 0)->str() == "()");
  // one-leaf trees are exactly the chains, one per node count
  for (long n = 0; n < 50; ++n) {
    TreeRef t = tree_unrank(1, n);
    CHECK(t->node_count() == static_cast<size_t>(n + 1));
    CHECK(t->leaf_count() == 1);
    CHECK(tree_equal(t, chain(n + 1)));
  }
  // enumeration never shrinks the node count
  for (size_t k = 1; k <= 4; ++k) {
    size_t prev = 0;
    for (long n = 0; n < 200; ++n) {
      size_t m = tree_unrank(k, n)->node_count();
      CHECK(m >= prev);
      prev = m;
    }
  }
}

TEST_CASE("rank and unrank invert each other") {
  for (size_t k = 1; k <= 5; ++k)
    for (long n = 0; n < 2000; ++n) REQUIRE(tree_rank(k, tree_unrank(k, n)) == n);

  // the other direction, over everything small enough to list exhaustively
  for (size_t m = 1; m <= 9; ++m)
    for (size_t k = 1; k <= m; ++k)
      for (const auto& t : all_trees(m, k)) REQUIRE(tree_equal(tree_unrank(k, tree_rank(k, t)), t));
}

TEST_CASE("two-leaf enumeration is repetition-free") {
  std::set<std::string> seen;
  for (long n = 0; n < 1000; ++n) {
    TreeRef t = tree_unrank(2, n);
    CHECK(t->leaf_count() == 2);
    CHECK(seen.insert(t->str()).second);
  }
}

TEST_CASE("misuse is rejected") {
  CHECK_THROWS_AS(tree_unrank(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(tree_unrank(1, -1), std::invalid_argument);
  CHECK_THROWS_AS(tree_rank(2, FiniteTree::leaf()), std::invalid_argument);
  CHECK_THROWS_AS(tree_rank(1, nullptr), std::invalid_argument);
}
