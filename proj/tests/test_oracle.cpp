#include <doctest.h>

#include <algorithm>
#include <random>

#include "geotree/forbid.hpp"
#include "geotree/generate.hpp"
#include "geotree/oracle.hpp"
#include "support.hpp"

using namespace geotree;

namespace {

// Tries every injective assignment.
bool brute_force_feasible(const Tree& t, const PointSet& s, const EdgeSet& forbidden) {
  const int k = t.size(), n = static_cast<int>(s.size());
  std::vector<int> points(n);
  std::iota(points.begin(), points.end(), 0);
  const auto edges = t.edges();
  // Permutations of all n points; the first k entries form the assignment.
  do {
    bool ok = true;
    for (auto [u, v] : edges)
      if (forbidden.contains(Edge(points[u], points[v]))) ok = false;
    for (std::size_t i = 0; ok && i < edges.size(); ++i)
      for (std::size_t j = i + 1; ok && j < edges.size(); ++j) {
        const int a = points[edges[i].first], b = points[edges[i].second];
        const int c = points[edges[j].first], d = points[edges[j].second];
        if (a == c || a == d || b == c || b == d) continue;
        if (ref::proper_cross(s[a], s[b], s[c], s[d])) ok = false;
      }
    if (ok) return true;
    std::reverse(points.begin() + k, points.end());
  } while (std::next_permutation(points.begin(), points.end()));
  return false;
}

bool sound(const SearchReport& r, const Tree& t, const PointSet& s, const EdgeSet& forbidden) {
  if (r.feasible() != r.witness.has_value()) return false;
  if (!r.witness) return true;
  if (!(r.witness->tree.tree == t) || r.witness->points.size() != s.size()) return false;
  if (!check_embedding(*r.witness).ok()) return false;
  for (const Edge& e : r.witness->edge_images())
    if (forbidden.contains(e)) return false;
  return true;
}

EdgeSet random_subset(const std::vector<Edge>& edges, std::size_t m, std::mt19937_64& rng) {
  std::vector<Edge> pool = edges;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(m);
  return EdgeSet(pool);
}

}  // namespace

TEST_CASE("empty forbidden set is always feasible") {
  for (int n = 3; n <= 7; ++n)
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const PointSet s = random_points(static_cast<std::size_t>(n), seed);
      for (int k = 2; k <= n; ++k)
        for (const Tree& t : all_trees(k)) {
          const SearchReport r = exists_embedding(t, s, {});
          CHECK(r.verdict == Verdict::Feasible);
          CHECK(sound(r, t, s, {}));
        }
    }
}

TEST_CASE("three consecutive hull edges forbid the 7-spider") {
  const PointSet s = convex_points(7, 1);
  const EdgeSet f({Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  const SearchReport r = exists_embedding(spider_tree(7), s, f);
  CHECK(r.verdict == Verdict::Infeasible);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.nodes_expanded > 0);
  CHECK(r.prunes.forbidden + r.prunes.crossing > 0);
  CHECK(forbids(f, spider_tree(7), s));
  for (int n = 5; n <= 9; ++n) {
    const PointSet p = convex_points(static_cast<std::size_t>(n), 2);
    CHECK(forbids(three_consecutive_hull_edges(p, 0).edges, spider_tree(n), p));
  }
}

// Only the five diagonals remain, and any two of them without a shared
// endpoint cross, so no 4-edge path survives.
TEST_CASE("path on the convex pentagon avoiding every hull edge") {
  const PointSet s = convex_points(5, 1);
  EdgeSet hull;
  for (const Edge& e : all_edges(5))
    if (edge_depth(s, e) == 0) hull.insert(e);
  REQUIRE(hull.size() == 5);
  const SearchReport r = exists_embedding(path_tree(5), s, hull);
  CHECK(r.verdict == Verdict::Infeasible);
  CHECK_FALSE(brute_force_feasible(path_tree(5), s, hull));
  for (const Edge& a : all_edges(5))
    for (const Edge& b : all_edges(5))
      if (!hull.contains(a) && !hull.contains(b) && !a.has(b.a) && !a.has(b.b)) CHECK(segments_cross(s, a, b));
  while (!hull.empty()) {
    hull.erase(*hull.begin());
    CHECK(exists_embedding(path_tree(5), s, hull).feasible() == brute_force_feasible(path_tree(5), s, hull));
  }
}

TEST_CASE("forbids on trivial sets") {
  const PointSet s = random_points(6, 3);
  const EdgeSet everything(all_edges(6));
  for (int k = 2; k <= 6; ++k)
    for (const Tree& t : all_trees(k)) {
      CHECK_FALSE(forbids({}, t, s));
      CHECK(forbids(everything, t, s));
    }
}

TEST_CASE("verdicts agree with brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 2);
    const int k = 3 + static_cast<int>(rng() % (n - 2));
    const PointSet s = trial % 3 == 0 ? convex_points(static_cast<std::size_t>(n), rng()) : random_points(static_cast<std::size_t>(n), rng());
    const auto trees = all_trees(k);
    const Tree& t = trees[rng() % trees.size()];
    const auto edges = all_edges(s.size());
    const EdgeSet f = random_subset(edges, rng() % edges.size(), rng);
    const SearchReport r = exists_embedding(t, s, f);
    CHECK(r.feasible() == brute_force_feasible(t, s, f));
    CHECK(sound(r, t, s, f));
  }
}

TEST_CASE("verdicts do not depend on the assignment order") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const PointSet s = random_points(7, rng());
    const auto trees = all_trees(7);
    const Tree& t = trees[rng() % trees.size()];
    const auto edges = all_edges(7);
    const EdgeSet f = random_subset(edges, 4 + rng() % 10, rng);
    const bool base = exists_embedding(t, s, f).feasible();
    for (int root : {0, 3, 6}) {
      const SearchReport r = exists_embedding(t, s, f, {.budget = kDefaultBudget, .order_root = root});
      CHECK(r.feasible() == base);
      CHECK(sound(r, t, s, f));
    }
  }
}

TEST_CASE("forbidding is monotone along subset chains") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const PointSet s = random_points(6, rng());
    const Tree t = all_trees(6)[rng() % 6];
    auto edges = all_edges(6);
    std::shuffle(edges.begin(), edges.end(), rng);
    EdgeSet f;
    bool forbidden = false;
    for (const Edge& e : edges) {
      f.insert(e);
      const bool now = forbids(f, t, s);
      if (forbidden) CHECK(now);
      forbidden = now;
    }
    CHECK(forbidden);
  }
}

TEST_CASE("budget exhaustion is reported, not guessed") {
  const PointSet s = convex_points(9, 1);
  const EdgeSet f = three_consecutive_hull_edges(s, 0).edges;
  const SearchReport r = exists_embedding(spider_tree(9), s, f, {.budget = 5, .order_root = {}});
  CHECK(r.verdict == Verdict::Unknown);
  CHECK_FALSE(r.witness.has_value());
  CHECK_THROWS_AS(forbids(f, spider_tree(9), s, 5), BudgetExhausted);
  CHECK(std::string(to_string(Verdict::Unknown)) == "unknown");
}

TEST_CASE("oracle errors") {
  const PointSet s = random_points(5, 1);
  CHECK_THROWS_AS(exists_embedding(path_tree(6), s, {}), std::invalid_argument);
  CHECK_THROWS_AS(exists_embedding(path_tree(5), s, {}, {.budget = 0, .order_root = {}}), std::invalid_argument);
  CHECK_THROWS_AS(exists_embedding(path_tree(5), s, {}, {.budget = 10, .order_root = 7}), std::out_of_range);
  CHECK_THROWS_AS(min_forbidden_set_size(random_points(8, 1), 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(min_forbidden_set_size(s, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(min_forbidden_set_size(s, 6, 3), std::invalid_argument);
}

TEST_CASE("smallest forbidding sets on convex polygons") {
  for (int n = 5; n <= 7; ++n) {
    const PointSet s = convex_points(static_cast<std::size_t>(n), 1);
    const auto found = min_forbidden_set_size(s, n, 3);
    REQUIRE(found.has_value());
    CHECK(found->size == 3);
    CHECK(found->edges.size() == 3);
    CHECK(found->tree.size() == n);
    CHECK_FALSE(brute_force_feasible(found->tree, s, found->edges));
  }
  CHECK_FALSE(min_forbidden_set_size(convex_points(6, 1), 6, 2).has_value());
}

TEST_CASE("two-vertex trees need every edge forbidden") {
  for (int n : {5, 7}) {
    const PointSet s = random_points(static_cast<std::size_t>(n), 2);
    const std::size_t all = static_cast<std::size_t>(n * (n - 1) / 2);
    const auto found = min_forbidden_set_size(s, 2, all);
    REQUIRE(found.has_value());
    CHECK(found->size == all);
  }
}

TEST_CASE("smallest forbidding set is minimal by brute force") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const PointSet s = random_points(5, seed);
    for (int k = 4; k <= 5; ++k) {
      const auto found = min_forbidden_set_size(s, k, 10);
      REQUIRE(found.has_value());
      CHECK_FALSE(brute_force_feasible(found->tree, s, found->edges));
      // No set one smaller forbids any tree.
      const auto edges = all_edges(5);
      const std::size_t m = found->size - 1;
      std::vector<bool> pick(edges.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
      bool smaller = false;
      do {
        std::vector<Edge> chosen;
        for (std::size_t i = 0; i < edges.size(); ++i)
          if (pick[i]) chosen.push_back(edges[i]);
        const EdgeSet f(chosen);
        for (const Tree& t : all_trees(k))
          if (!brute_force_feasible(t, s, f)) smaller = true;
      } while (!smaller && std::prev_permutation(pick.begin(), pick.end()));
      CHECK_FALSE(smaller);
    }
  }
}

TEST_CASE("constructions verified") {
  for (int n = 5; n <= 7; ++n) {
    const PointSet s = convex_points(static_cast<std::size_t>(n), 1);
    CHECK(verify_construction(three_consecutive_hull_edges(s, 1), s));
    if (n >= 6) CHECK(verify_construction(three_pairs_consecutive_hull_edges(s, spread_middles(n)), s));
  }
  const PointSet octagon = convex_points(8, 1);
  CHECK(verify_construction(r_edge_blanket(octagon, 5), octagon));
  // Hull edges alone do not forbid a 5-vertex spider in an 8-gon.
  ForbidConstruction weak = r_edge_blanket(octagon, 5);
  weak.edges = r_edge_blanket(octagon, 8).edges;
  CHECK_FALSE(verify_construction(weak, octagon));
}
