#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "geotree/trees.hpp"
#include "support.hpp"

using namespace geotree;

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(Tree(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree(3, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree(3, {{0, 0}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree(4, {{0, 1}, {1, 0}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree(3, {{0, 1}, {1, 3}}), std::invalid_argument);
  CHECK_NOTHROW(Tree(1, {}));
  const Tree t(4, {{2, 1}, {0, 1}, {3, 1}});
  CHECK(t.degree(1) == 3);
  CHECK(t.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("spider trees") {
  CHECK_THROWS_AS(spider_tree(1), std::invalid_argument);
  CHECK(spider_tree(2).edges() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(ahu_canonical(spider_tree(3)) == ahu_canonical(path_tree(3)));
  CHECK(spider_tree(7).degree(0) == 3);
  CHECK(ref::leg_lengths(spider_tree(7)) == std::vector<int>{2, 2, 2});
  CHECK(spider_tree(8).degree(0) == 3);
  CHECK(ref::leg_lengths(spider_tree(8)) == std::vector<int>{2, 2, 3});
  for (int n = 2; n <= 15; ++n) {
    const Tree t = spider_tree(n);
    CHECK(t.size() == n);
    CHECK(t.edges().size() == static_cast<std::size_t>(n - 1));
    if (n >= 5 && n % 2 == 1) {
      int leaves = 0;
      for (int v = 0; v < n; ++v) leaves += t.degree(v) == 1;
      CHECK(leaves == (n - 1) / 2);
    }
    if (n >= 4 && n % 2 == 0) {
      std::vector<int> expected((n - 4) / 2, 2);
      expected.push_back(3);
      CHECK(ref::leg_lengths(t) == expected);
    }
  }
}

TEST_CASE("subdividing any leg of an odd spider gives the same even spider") {
  for (int n = 5; n <= 11; n += 2) {
    const Tree odd = spider_tree(n);
    const std::string expected = ahu_canonical(spider_tree(n + 1));
    for (auto [u, v] : odd.edges()) {
      std::vector<std::pair<int, int>> edges;
      for (auto e : odd.edges())
        if (e != std::pair{u, v}) edges.push_back(e);
      edges.emplace_back(u, n);
      edges.emplace_back(n, v);
      CHECK(ahu_canonical(Tree(n + 1, edges)) == expected);
    }
  }
}

TEST_CASE("rooting") {
  const RootedTree path = root_at(path_tree(3), 1);
  CHECK(path.children[1] == std::vector<int>{0, 2});
  CHECK(path.subtree_size == std::vector<int>{1, 3, 1});
  CHECK_FALSE(path.parent[1].has_value());
  CHECK(path.parent[0] == 1);

  const RootedTree star = root_at(star_tree(5), 0);
  CHECK(star.children[0].size() == 4);
  for (int c : star.children[0]) CHECK(star.subtree_size[c] == 1);

  const RootedTree spider = root_at(spider_tree(7), 0);
  CHECK(spider.children[0].size() == 3);
  for (int c : spider.children[0]) CHECK(spider.subtree_size[c] == 2);

  CHECK_THROWS(root_at(path_tree(3), 3));
}

TEST_CASE("children sorted by subtree size") {
  // Root 0 with subtrees of sizes 3, 1, 2.
  const Tree t(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {5, 6}});
  const RootedTree asc = sort_children_by_subtree_size(root_at(t, 0), true);
  std::vector<int> sizes;
  for (int c : asc.children[0]) sizes.push_back(asc.subtree_size[c]);
  CHECK(sizes == std::vector<int>{1, 2, 3});
  const RootedTree desc = sort_children_by_subtree_size(root_at(t, 0), false);
  sizes.clear();
  for (int c : desc.children[0]) sizes.push_back(desc.subtree_size[c]);
  CHECK(sizes == std::vector<int>{3, 2, 1});
  CHECK(asc.tree.edges() == t.edges());

  const RootedTree star = sort_children_by_subtree_size(root_at(star_tree(5), 0));
  CHECK(star.children[0] == std::vector<int>{1, 2, 3, 4});

  const RootedTree spider = sort_children_by_subtree_size(root_at(spider_tree(8), 0));
  sizes.clear();
  for (int c : spider.children[0]) sizes.push_back(spider.subtree_size[c]);
  CHECK(sizes == std::vector<int>{2, 2, 3});
}

TEST_CASE("rooted structure is consistent on random trees") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const int k = 2 + static_cast<int>(rng() % 12);
    std::vector<int> seq(k - 2);
    for (int& x : seq) x = static_cast<int>(rng() % k);
    const Tree t = tree_from_prufer(seq);
    const int root = static_cast<int>(rng() % k);
    const RootedTree rt = sort_children_by_subtree_size(root_at(t, root), rng() % 2 == 0);
    CHECK(rt.subtree_size[root] == k);
    std::vector<int> seen(k, 0);
    for (int v = 0; v < k; ++v) {
      int sum = 1;
      for (int c : rt.children[v]) {
        sum += rt.subtree_size[c];
        CHECK(rt.parent[c] == v);
        ++seen[c];
      }
      CHECK(rt.subtree_size[v] == sum);
    }
    for (int v = 0; v < k; ++v) CHECK(seen[v] == (v == root ? 0 : 1));
    CHECK(rt.tree.edges() == t.edges());
  }
}

TEST_CASE("prufer decoding matches a reference decoder") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const int k = 3 + static_cast<int>(rng() % 10);
    std::vector<int> seq(k - 2);
    for (int& x : seq) x = static_cast<int>(rng() % k);
    const Tree expected(k, ref::prufer_edges(seq));
    CHECK(tree_from_prufer(seq) == expected);
  }
  CHECK_THROWS(tree_from_prufer({5}));
}

TEST_CASE("canonical form") {
  const Tree a(4, {{0, 1}, {1, 2}, {2, 3}});
  const Tree b(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(ahu_canonical(a) == ahu_canonical(b));
  CHECK(ahu_canonical(a) != ahu_canonical(star_tree(4)));
  for (int k = 2; k <= 10; ++k)
    for (const Tree& t : all_trees(k)) CHECK(ahu_canonical(tree_from_canonical(ahu_canonical(t))) == ahu_canonical(t));
}

TEST_CASE("canonical classes agree with brute-force isomorphism") {
  for (int k = 2; k <= 6; ++k) {
    const auto labeled = ref::all_labeled_trees(k);
    std::vector<std::vector<std::pair<int, int>>> classes;
    for (const auto& edges : labeled) {
      bool found = false;
      for (const auto& rep : classes)
        if (ref::isomorphic(k, edges, rep)) found = true;
      if (!found) classes.push_back(edges);
    }
    std::set<std::string> codes;
    for (const auto& edges : labeled) codes.insert(ahu_canonical(Tree(k, edges)));
    CHECK(codes.size() == classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = 0; j < classes.size(); ++j)
        CHECK((ahu_canonical(Tree(k, classes[i])) == ahu_canonical(Tree(k, classes[j]))) == (i == j));
  }
  CHECK(ref::all_labeled_trees(5).size() == 125);
}

TEST_CASE("all_trees against full Prufer enumeration") {
  const std::map<int, std::size_t> known{{2, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 6}, {7, 11}, {8, 23}, {9, 47}, {10, 106}};
  for (int k = 2; k <= 8; ++k) {
    std::set<std::string> codes;
    for (const auto& edges : ref::all_labeled_trees(k)) codes.insert(ahu_canonical(Tree(k, edges)));
    std::set<std::string> enumerated;
    for (const Tree& t : all_trees(k)) enumerated.insert(ahu_canonical(t));
    CHECK(enumerated == codes);
    CHECK(codes.size() == known.at(k));
  }
  for (int k = 2; k <= 10; ++k) {
    const auto trees = all_trees(k);
    CHECK(trees.size() == known.at(k));
    std::set<std::string> codes;
    for (const Tree& t : trees) {
      CHECK(t.size() == k);
      codes.insert(ahu_canonical(t));
    }
    CHECK(codes.size() == trees.size());
    CHECK(codes.contains(ahu_canonical(path_tree(k))));
    CHECK(codes.contains(ahu_canonical(star_tree(k))));
    CHECK(codes.contains(ahu_canonical(spider_tree(k))));
  }
  CHECK(all_trees(4).size() == 2);
  CHECK_THROWS_AS(all_trees(1), std::invalid_argument);
  CHECK_THROWS_AS(all_trees(11), std::invalid_argument);
}

TEST_CASE("all_trees is deterministic") {
  CHECK(all_trees(9) == all_trees(9));
}
