#include "geotree/embedder.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace geotree {

std::vector<Edge> Embedding::edge_images() const {
  std::vector<Edge> out;
  for (auto [u, v] : tree.tree.edges()) out.emplace_back(assignment[u], assignment[v]);
  return out;
}

bool Embedding::uses(Edge e) const {
  for (const Edge& img : edge_images())
    if (img == e) return true;
  return false;
}

EmbeddingCheck check_embedding(const Tree& t, const PointSet& s,
                               std::span<const int> assignment) {
  EmbeddingCheck check;
  const int n = static_cast<int>(s.size());
  if (static_cast<int>(assignment.size()) != t.size()) {
    check.in_range = false;
    return check;
  }
  std::vector<char> used(n, 0);
  for (int p : assignment) {
    if (p < 0 || p >= n) {
      check.in_range = false;
      return check;
    }
    if (used[p]) check.injective = false;
    used[p] = 1;
  }
  if (!check.injective) return check;
  std::vector<Edge> images;
  for (auto [u, v] : t.edges()) images.emplace_back(assignment[u], assignment[v]);
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (segments_cross(s, images[i], images[j])) ++check.crossings;
  return check;
}

int hull_edges_used(const Embedding& e) {
  int count = 0;
  for (const Edge& img : e.edge_images())
    if (edge_depth(e.points, img) == 0) ++count;
  return count;
}

WedgePartition wedge_partition(const PointSet& s, int apex,
                               std::span<const int> points,
                               std::span<const int> sizes) {
  std::size_t total = 0;
  for (int sz : sizes) {
    if (sz < 1) throw std::invalid_argument("wedge cells must be non-empty");
    total += static_cast<std::size_t>(sz);
  }
  if (total != points.size())
    throw std::invalid_argument("cell sizes do not add up to the point count");
  WedgePartition w;
  w.apex = apex;
  w.order = angular_sort(s, apex, points);
  w.boundaries.push_back(0);
  for (int sz : sizes) {
    const std::size_t from = w.boundaries.back();
    w.boundaries.push_back(from + static_cast<std::size_t>(sz));
    w.cells.emplace_back(w.order.begin() + static_cast<std::ptrdiff_t>(from),
                         w.order.begin() + static_cast<std::ptrdiff_t>(w.boundaries.back()));
  }
  return w;
}

std::vector<int> visible_hull_vertices(const PointSet& s, int apex,
                                       std::span<const int> cell) {
  const std::vector<int> hull = convex_hull(s, cell);
  std::vector<int> visible;
  for (int q : hull) {
    bool blocked = false;
    if (hull.size() >= 3) {
      for (std::size_t i = 0; i < hull.size() && !blocked; ++i) {
        const Edge side(hull[i], hull[(i + 1) % hull.size()]);
        blocked = segments_cross(s, Edge(apex, q), side);
      }
    }
    if (!blocked) visible.push_back(q);
  }
  return angular_sort(s, apex, visible);
}

RootSelector lowest_hull_point() {
  return [](const PointSet& s, std::span<const int> hull) {
    return *std::min_element(hull.begin(), hull.end(), [&](int i, int j) {
      return s[i].y != s[j].y ? s[i].y < s[j].y : s[i].x < s[j].x;
    });
  };
}

ChildSelector rightmost_visible() {
  return [](const PointSet&, int, std::span<const int> visible) { return visible.front(); };
}

namespace {

/// How a vertex and its subtree are laid out inside the cell handed to it.
enum class Layout : std::uint8_t {
  Wedges,  // the plain recursive algorithm
  Star,    // all children are leaves: center on any point off the forbidden edge
  Path,    // subtree is a path on three vertices
  Spider,  // every child subtree is a single edge
};

struct Plan {
  int root_vertex = 0;
  std::vector<std::vector<int>> children;
  std::vector<int> rank;  // index into the vertex's candidate list
  std::vector<Layout> layout;
  int spider_center = -1;  // preferred point when the root uses Layout::Spider
  std::optional<Edge> avoid;
  RootSelector root_choice;
  ChildSelector child_choice;

  Plan(const RootedTree& rt, RootSelector root, ChildSelector child)
      : root_vertex(rt.root),
        children(rt.children),
        rank(rt.size(), 0),
        layout(rt.size(), Layout::Wedges),
        root_choice(std::move(root)),
        child_choice(std::move(child)) {}
};

class Builder {
 public:
  Builder(const PointSet& s, const RootedTree& rt, const Plan& plan)
      : s_(s), rt_(rt), plan_(plan), assign_(rt.size(), -1) {}

  std::vector<int> run() {
    std::vector<int> all(s_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    place(plan_.root_vertex, std::nullopt, std::move(all));
    return assign_;
  }

 private:
  bool forbidden(int p, int q) const {
    return plan_.avoid && *plan_.avoid == Edge(p, q);
  }

  bool locally_valid(const std::vector<Edge>& segments) const {
    for (std::size_t i = 0; i < segments.size(); ++i) {
      if (forbidden(segments[i].a, segments[i].b)) return false;
      for (std::size_t j = i + 1; j < segments.size(); ++j)
        if (segments_cross(s_, segments[i], segments[j])) return false;
    }
    return true;
  }

  // Admissible points for v in its cell, preferred one first.
  std::vector<int> candidates(std::optional<int> apex, const std::vector<int>& cell) const {
    std::vector<int> pool;
    int pick;
    if (apex) {
      pool = visible_hull_vertices(s_, *apex, cell);
      pick = plan_.child_choice(s_, *apex, pool);
    } else {
      pool = convex_hull(s_, cell);
      pick = plan_.root_choice(s_, pool);
    }
    std::vector<int> out{pick};
    for (int q : pool)
      if (q != pick) out.push_back(q);
    return out;
  }

  static std::vector<int> without(const std::vector<int>& cell, int p) {
    std::vector<int> rest;
    for (int q : cell)
      if (q != p) rest.push_back(q);
    return rest;
  }

  void place(int v, std::optional<int> apex, std::vector<int> cell) {
    switch (plan_.layout[v]) {
      case Layout::Wedges: {
        const auto cand = candidates(apex, cell);
        const int p = cand[static_cast<std::size_t>(plan_.rank[v]) % cand.size()];
        assign_[v] = p;
        wedges(v, p, without(cell, p));
        return;
      }
      case Layout::Star:
        return star(v, apex, cell);
      case Layout::Path:
        return path(v, apex, cell);
      case Layout::Spider:
        return spider(v, apex, cell);
    }
  }

  void wedges(int v, int p, const std::vector<int>& rest) {
    const auto& kids = plan_.children[v];
    if (kids.empty()) return;
    std::vector<int> sizes;
    for (int c : kids) sizes.push_back(rt_.subtree_size[c]);
    const WedgePartition w = wedge_partition(s_, p, rest, sizes);
    for (std::size_t i = 0; i < kids.size(); ++i) place(kids[i], p, w.cells[i]);
  }

  // Any center works for a star: every fan edge shares the center, and the
  // edge to the apex stays inside the cell's wedge.
  void star(int v, std::optional<int> apex, const std::vector<int>& cell) {
    std::vector<int> order = candidates(apex, cell);
    for (int q : cell)
      if (std::find(order.begin(), order.end(), q) == order.end()) order.push_back(q);
    for (int c : order) {
      if (plan_.avoid && plan_.avoid->has(c)) continue;
      if (apex && forbidden(*apex, c)) continue;
      assign_[v] = c;
      const auto rest = without(cell, c);
      const auto& kids = plan_.children[v];
      for (std::size_t i = 0; i < kids.size(); ++i) assign_[kids[i]] = rest[i];
      return;
    }
    throw DefectError("no star center off the forbidden edge");
  }

  void path(int v, std::optional<int> apex, const std::vector<int>& cell) {
    const int mid = plan_.children[v].front();
    const int end = plan_.children[mid].front();
    std::vector<int> order = candidates(apex, cell);
    for (int q : cell)
      if (std::find(order.begin(), order.end(), q) == order.end()) order.push_back(q);
    for (int a : order) {
      for (int b : cell) {
        if (b == a) continue;
        int c = -1;
        for (int q : cell)
          if (q != a && q != b) c = q;
        std::vector<Edge> segs{Edge(a, b), Edge(b, c)};
        if (apex) segs.emplace_back(*apex, a);
        if (!locally_valid(segs)) continue;
        assign_[v] = a;
        assign_[mid] = b;
        assign_[end] = c;
        return;
      }
    }
    throw DefectError("no path layout avoids the forbidden edge");
  }

  // Legs paired consecutively in the counter-clockwise order around the
  // center, each leg's middle vertex chosen so its center edge avoids the
  // forbidden edge.
  bool spider_legs(int v, int center, const std::vector<int>& around,
                   std::optional<int> apex) {
    const auto& legs = plan_.children[v];
    std::vector<Edge> segs;
    std::vector<std::pair<int, int>> chosen;
    if (apex) segs.emplace_back(*apex, center);
    for (std::size_t i = 0; i < legs.size(); ++i) {
      int mid = around[2 * i], tip = around[2 * i + 1];
      if (forbidden(center, mid)) std::swap(mid, tip);
      segs.emplace_back(center, mid);
      segs.emplace_back(mid, tip);
      chosen.emplace_back(mid, tip);
    }
    if (!locally_valid(segs)) return false;
    assign_[v] = center;
    for (std::size_t i = 0; i < legs.size(); ++i) {
      assign_[legs[i]] = chosen[i].first;
      assign_[plan_.children[legs[i]].front()] = chosen[i].second;
    }
    return true;
  }

  void spider(int v, std::optional<int> apex, const std::vector<int>& cell) {
    if (!apex) {
      // Whole point set: center on the preferred point, legs on consecutive
      // angular pairs; the pairing start is free when the center is interior.
      std::vector<int> centers;
      if (plan_.spider_center >= 0) centers.push_back(plan_.spider_center);
      for (int q : cell)
        if (q != plan_.spider_center) centers.push_back(q);
      for (int c : centers) {
        const auto rest = without(cell, c);
        auto around = sort_around(s_, c, rest, Point{1, 0});
        for (std::size_t r = 0; r < around.size(); ++r) {
          if (spider_legs(v, c, around, std::nullopt)) return;
          std::rotate(around.begin(), around.begin() + 1, around.end());
        }
      }
      throw DefectError("no spider layout avoids the forbidden edge");
    }

    // Inside a cell: rank the cell around the apex and prefer the parity
    // re-anchoring point; legs are paired starting from the ray toward the
    // apex so that no leg straddles the apex edge.
    const auto ranked = angular_sort(s_, *apex, cell);
    std::vector<int> centers;
    auto add = [&](int q) {
      if (std::find(centers.begin(), centers.end(), q) == centers.end()) centers.push_back(q);
    };
    if (plan_.avoid) {
      auto rank_of = [&](int q) -> int {
        auto it = std::find(ranked.begin(), ranked.end(), q);
        return it == ranked.end() ? -1 : static_cast<int>(it - ranked.begin());
      };
      int ra = rank_of(plan_.avoid->a), rb = rank_of(plan_.avoid->b);
      if (ra > rb) std::swap(ra, rb);
      for (int r : {ra, rb})
        if (r >= 0 && r % 2 == 1) add(ranked[r]);
      if (ra >= 0 && ra % 2 == 0 && rb % 2 == 0)
        for (int r = ra + 1; r < rb; ++r)
          if (r % 2 == 1) add(ranked[r]);
    }
    for (int q : ranked) add(q);
    const Point& a = s_[*apex];
    for (int c : centers) {
      const Point& pc = s_[c];
      const auto around = sort_around(s_, c, without(cell, c), Point{a.x - pc.x, a.y - pc.y});
      if (spider_legs(v, c, around, apex)) return;
    }
    throw DefectError("no spider layout avoids the forbidden edge");
  }

  const PointSet& s_;
  const RootedTree& rt_;
  const Plan& plan_;
  std::vector<int> assign_;
};

void require_spanning(const RootedTree& rt, const PointSet& s) {
  if (static_cast<std::size_t>(rt.size()) != s.size())
    throw std::invalid_argument("tree has " + std::to_string(rt.size()) +
                                " vertices but the point set has " +
                                std::to_string(s.size()));
}

Embedding finish(const RootedTree& rt, const Plan& plan, const PointSet& s,
                 std::vector<int> assignment) {
  Embedding emb{rt, s, std::move(assignment)};
  emb.tree.children = plan.children;
  if (!check_embedding(emb).ok())
    throw DefectError("constructed embedding is not a planar injective drawing");
  return emb;
}

Embedding build(const RootedTree& rt, const PointSet& s, const Plan& plan) {
  return finish(rt, plan, s, Builder(s, rt, plan).run());
}

// Moves `who` to index `pos` of `kids`; siblings before `pos` keep their order.
void move_into(std::vector<int>& kids, int who, std::size_t pos) {
  auto it = std::find(kids.begin(), kids.end(), who);
  kids.erase(it);
  kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(std::min(pos, kids.size())), who);
}

std::size_t index_of(const std::vector<int>& kids, int who) {
  return static_cast<std::size_t>(std::find(kids.begin(), kids.end(), who) - kids.begin());
}

}  // namespace

Embedding embed_recursive(const RootedTree& rt, const PointSet& s,
                          RootSelector root_choice, ChildSelector child_choice) {
  require_spanning(rt, s);
  return build(rt, s, Plan(rt, std::move(root_choice), std::move(child_choice)));
}

Embedding embed_avoiding_single(const Tree& t, const PointSet& s, Edge e) {
  const int n = static_cast<int>(s.size());
  if (n < 5) throw std::invalid_argument("single-edge avoidance needs n >= 5");
  if (e.b >= n) throw std::out_of_range("forbidden edge references a missing point");
  const RootedTree rt = sort_children_by_subtree_size(root_at(t, 0), true);
  require_spanning(rt, s);

  Plan plan(rt, lowest_hull_point(), rightmost_visible());
  plan.avoid = e;
  const auto& size = rt.subtree_size;

  for (int iter = 0; iter < n * n; ++iter) {
    const auto assign = Builder(s, rt, plan).run();
    int u = -1, v = -1;
    for (int x = 0; x < n && v < 0; ++x) {
      if (rt.parent[x] && Edge(assign[*rt.parent[x]], assign[x]) == e) {
        u = *rt.parent[x];
        v = x;
      }
    }
    if (v < 0) return finish(rt, plan, s, assign);

    auto& kids_u = plan.children[u];
    if (size[v] >= 2) {
      // Another visible hull vertex of v's cell.
      ++plan.rank[v];
      continue;
    }
    if (kids_u.size() > 1) {
      const std::size_t at = index_of(kids_u, v);
      auto big = std::find_if(kids_u.begin() + static_cast<std::ptrdiff_t>(at), kids_u.end(),
                              [&](int c) { return size[c] >= 2; });
      if (big == kids_u.end())
        big = std::find_if(kids_u.begin(), kids_u.end(), [&](int c) { return size[c] >= 2; });
      if (big != kids_u.end()) {
        move_into(kids_u, *big, at);
      } else {
        plan.layout[u] = Layout::Star;
      }
      continue;
    }
    // v is the only child of u.
    if (!rt.parent[u]) throw DefectError("forbidden edge on a two-vertex tree");
    const int w = *rt.parent[u];
    auto& kids_w = plan.children[w];
    if (kids_w.size() == 1) {
      plan.layout[w] = Layout::Path;
      continue;
    }
    const std::size_t at = index_of(kids_w, u);
    auto other = std::find_if(kids_w.begin() + static_cast<std::ptrdiff_t>(at), kids_w.end(),
                              [&](int c) { return size[c] >= 3; });
    if (other == kids_w.end()) {
      // Nearest leaf sibling in front of u; moving it behind u shifts u's
      // cell by one point so the leaf lands on p instead.
      for (std::size_t i = at; i-- > 0;) {
        if (size[kids_w[i]] == 1) {
          other = kids_w.begin() + static_cast<std::ptrdiff_t>(i);
          break;
        }
      }
    }
    if (other == kids_w.end())
      other = std::find_if(kids_w.begin(), kids_w.end(), [&](int c) { return size[c] != 2; });
    if (other != kids_w.end()) {
      move_into(kids_w, *other, at);
      continue;
    }
    plan.layout[w] = Layout::Spider;
    if (!rt.parent[w]) plan.spider_center = assign[u];
  }
  throw DefectError("single-edge repair did not settle within n^2 rounds");
}

namespace {

Embedding zigzag_path(const Tree& t, const PointSet& s, const std::vector<int>& hull) {
  const int n = t.size();
  int end = 0;
  while (t.degree(end) != 1) ++end;
  RootedTree rt = root_at(t, end);
  std::vector<int> walk{end};
  while (!rt.children[walk.back()].empty()) walk.push_back(rt.children[walk.back()].front());
  std::vector<int> assignment(n);
  int lo = 0, hi = n - 1;
  for (int i = 0; i < n; ++i) assignment[walk[i]] = hull[i % 2 == 0 ? lo++ : hi--];
  Embedding emb{rt, s, assignment};
  if (!check_embedding(emb).ok()) throw DefectError("zig-zag path is not planar");
  return emb;
}

}  // namespace

Embedding embed_few_hull_edges(const Tree& t, const PointSet& s) {
  const int n = static_cast<int>(s.size());
  if (t.size() != n) throw std::invalid_argument("tree and point set sizes differ");
  if (n < 5) throw std::invalid_argument("few-hull-edge embedding needs n >= 5");
  const std::vector<int> hull = convex_hull(s);
  if (static_cast<int>(hull.size()) != n) throw GeometryError("point set is not in convex position");

  int max_degree_vertex = 0;
  for (int v = 0; v < n; ++v)
    if (t.degree(v) > t.degree(max_degree_vertex)) max_degree_vertex = v;
  if (t.degree(max_degree_vertex) == n - 1)
    return embed_recursive(root_at(t, max_degree_vertex), s);
  if (t.degree(max_degree_vertex) <= 2) return zigzag_path(t, s, hull);

  int root = 0;
  while (t.degree(root) < 3) ++root;
  RootedTree rt = root_at(t, root);
  auto& top = rt.children[root];
  auto first_big = std::find_if(top.begin(), top.end(), [&](int c) { return !rt.is_leaf(c); });
  move_into(top, *first_big, 0);

  // Non-leaf children go to a visible extreme whose edge is a diagonal.
  ChildSelector diagonal_first = [](const PointSet& ps, int apex, std::span<const int> visible) {
    for (int q : visible)
      if (edge_depth(ps, Edge(apex, q)) > 0) return q;
    return visible.front();
  };
  Plan plan(rt, lowest_hull_point(), diagonal_first);
  Embedding emb = build(rt, s, plan);
  if (2 * hull_edges_used(emb) < n) return emb;

  // Too many leaf hull edges: every non-leaf has at most one leaf child, and
  // moving a later non-leaf child of the root to the end takes the root's
  // leaf off the hull.
  auto& kids = plan.children[root];
  auto late = std::find_if(kids.begin() + 1, kids.end(), [&](int c) { return !rt.is_leaf(c); });
  if (late == kids.end()) throw DefectError("few-hull-edge embedding has no child to move");
  const int moved = *late;
  kids.erase(late);
  kids.push_back(moved);
  emb = build(rt, s, plan);
  if (2 * hull_edges_used(emb) < n)
    return emb;
  throw DefectError("few-hull-edge embedding uses at least n/2 hull edges");
}

Embedding rotate_embedding(const Embedding& emb, int i) {
  const std::vector<int> hull = convex_hull(emb.points);
  const int n = static_cast<int>(hull.size());
  if (static_cast<std::size_t>(n) != emb.points.size())
    throw GeometryError("rotation needs a point set in convex position");
  std::vector<int> position(n);
  for (int k = 0; k < n; ++k) position[hull[k]] = k;
  const int shift = ((i % n) + n) % n;
  Embedding out = emb;
  for (int& p : out.assignment) p = hull[(position[p] - shift + n) % n];
  return out;
}

Embedding embed_convex_avoiding_two(const Tree& t, const PointSet& s, Edge f1, Edge f2) {
  const int n = static_cast<int>(s.size());
  if (f1.b >= n || f2.b >= n) throw std::out_of_range("forbidden edge references a missing point");
  const Embedding base = embed_few_hull_edges(t, s);
  for (int i = 0; i < n; ++i) {
    Embedding rotated = rotate_embedding(base, i);
    if (!rotated.uses(f1) && !rotated.uses(f2)) return rotated;
  }
  throw DefectError("no rotation of the few-hull-edge embedding avoids both edges");
}

}  // namespace geotree
