#include "geotree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace geotree {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Feasible: return "feasible";
    case Verdict::Infeasible: return "infeasible";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Words = std::vector<std::uint64_t>;

/// For each edge of the complete graph on s, the bitset of edges it crosses.
struct CrossTable {
  int n = 0;
  int edges = 0;
  int words = 0;
  Words bits;

  explicit CrossTable(const PointSet& s)
      : n(static_cast<int>(s.size())), edges(n * (n - 1) / 2), words((edges + 63) / 64) {
    bits.assign(static_cast<std::size_t>(edges) * words, 0);
    const auto all = all_edges(s.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (!segments_cross(s, all[i], all[j])) continue;
        bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        bits[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  const std::uint64_t* row(int e) const { return bits.data() + static_cast<std::size_t>(e) * words; }
};

bool test_bit(const std::uint64_t* w, int i) { return (w[i / 64] >> (i % 64)) & 1U; }

/// Assignment order: BFS from the root, each vertex after its parent.
struct VertexOrder {
  std::vector<int> order;
  std::vector<int> parent_slot;  // position in `order` of the parent, -1 for the first
};

VertexOrder bfs_order(const Tree& t, std::optional<int> root) {
  int start = 0;
  if (root) {
    start = *root;
  } else {
    for (int v = 1; v < t.size(); ++v)
      if (t.degree(v) > t.degree(start)) start = v;
  }
  VertexOrder vo;
  std::vector<int> slot(t.size(), -1);
  vo.order.push_back(start);
  vo.parent_slot.push_back(-1);
  slot[start] = 0;
  for (std::size_t i = 0; i < vo.order.size(); ++i) {
    for (int w : t.neighbors(vo.order[i])) {
      if (slot[w] >= 0) continue;
      slot[w] = static_cast<int>(vo.order.size());
      vo.order.push_back(w);
      vo.parent_slot.push_back(static_cast<int>(i));
    }
  }
  return vo;
}

class Backtracker {
 public:
  Backtracker(const CrossTable& table, const VertexOrder& vo, const Words& forbidden,
              std::uint64_t budget, SearchReport& report)
      : table_(table), vo_(vo), forbidden_(forbidden), budget_(budget), report_(report),
        points_(vo.order.size(), -1), used_(table.n, 0),
        blocked_((vo.order.size() + 1) * table.words, 0) {}

  Verdict run() {
    const Verdict v = dfs(0);
    return v;
  }

  const std::vector<int>& points() const { return points_; }

 private:
  Verdict dfs(std::size_t depth) {
    if (depth == vo_.order.size()) return Verdict::Feasible;
    const int words = table_.words;
    const std::uint64_t* blocked = blocked_.data() + depth * words;
    std::uint64_t* next = blocked_.data() + (depth + 1) * words;
    const int parent_point = depth == 0 ? -1 : points_[vo_.parent_slot[depth]];

    bool exhausted = false;
    for (int p = 0; p < table_.n; ++p) {
      if (used_[p]) continue;
      if (parent_point >= 0) {
        const int e = edge_id(parent_point, p, table_.n);
        if (test_bit(forbidden_.data(), e)) {
          ++report_.prunes.forbidden;
          continue;
        }
        if (test_bit(blocked, e)) {
          ++report_.prunes.crossing;
          continue;
        }
        const std::uint64_t* row = table_.row(e);
        for (int w = 0; w < words; ++w) next[w] = blocked[w] | row[w];
      } else {
        std::copy(blocked, blocked + words, next);
      }
      if (report_.nodes_expanded >= budget_) return Verdict::Unknown;
      ++report_.nodes_expanded;
      used_[p] = 1;
      points_[depth] = p;
      const Verdict v = dfs(depth + 1);
      if (v == Verdict::Feasible) return v;
      used_[p] = 0;
      if (v == Verdict::Unknown) exhausted = true;
      if (exhausted) return Verdict::Unknown;
    }
    return Verdict::Infeasible;
  }

  const CrossTable& table_;
  const VertexOrder& vo_;
  const Words& forbidden_;
  std::uint64_t budget_;
  SearchReport& report_;
  std::vector<int> points_;
  std::vector<char> used_;
  Words blocked_;
};

Words forbidden_words(const CrossTable& table, const EdgeSet& forbidden) {
  Words w(table.words, 0);
  for (const Edge& e : forbidden) {
    const int id = edge_id(e.a, e.b, table.n);
    w[id / 64] |= std::uint64_t{1} << (id % 64);
  }
  return w;
}

SearchReport search(const Tree& t, const PointSet& s, const CrossTable& table,
                    const Words& forbidden, const SearchOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  SearchReport report;
  const VertexOrder vo = bfs_order(t, options.order_root);
  Backtracker bt(table, vo, forbidden, options.budget, report);
  report.verdict = bt.run();
  if (report.verdict == Verdict::Feasible) {
    std::vector<int> assignment(t.size());
    for (std::size_t i = 0; i < vo.order.size(); ++i) assignment[vo.order[i]] = bt.points()[i];
    report.witness = Embedding{root_at(t, vo.order.front()), s, std::move(assignment)};
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace

SearchReport exists_embedding(const Tree& t, const PointSet& s, const EdgeSet& forbidden,
                              const SearchOptions& options) {
  if (static_cast<std::size_t>(t.size()) > s.size())
    throw std::invalid_argument("tree has more vertices than the point set has points");
  if (options.budget == 0) throw std::invalid_argument("search budget must be positive");
  if (options.order_root && (*options.order_root < 0 || *options.order_root >= t.size()))
    throw std::out_of_range("order root out of range");
  forbidden.check_indices(s.size());
  const CrossTable table(s);
  return search(t, s, table, forbidden_words(table, forbidden), options);
}

bool forbids(const EdgeSet& forbidden, const Tree& t, const PointSet& s, std::uint64_t budget) {
  const SearchReport r = exists_embedding(t, s, forbidden, {.budget = budget, .order_root = {}});
  if (r.verdict == Verdict::Unknown)
    throw BudgetExhausted("search budget of " + std::to_string(budget) + " nodes exhausted");
  return r.verdict == Verdict::Infeasible;
}

namespace {

/// Edge permutations induced by the dihedral symmetries of the hull order.
std::vector<std::vector<int>> dihedral_edge_maps(const PointSet& s) {
  const int n = static_cast<int>(s.size());
  const std::vector<int> hull = convex_hull(s);
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[hull[i]] = i;
  std::vector<std::vector<int>> maps;
  for (int mirror = 0; mirror < 2; ++mirror) {
    for (int r = 0; r < n; ++r) {
      if (mirror == 0 && r == 0) continue;
      auto image = [&](int p) {
        const int i = position[p];
        return hull[mirror ? ((r - i) % n + n) % n : (i + r) % n];
      };
      std::vector<int> map;
      for (const Edge& e : all_edges(s.size()))
        map.push_back(edge_id(image(e.a), image(e.b), n));
      maps.push_back(std::move(map));
    }
  }
  return maps;
}

std::uint32_t apply(const std::vector<int>& map, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::uint32_t m = mask; m; m &= m - 1) out |= std::uint32_t{1} << map[std::countr_zero(m)];
  return out;
}

EdgeSet mask_to_edges(std::uint32_t mask, std::size_t n) {
  const auto all = all_edges(n);
  EdgeSet out;
  for (std::uint32_t m = mask; m; m &= m - 1) out.insert(all[std::countr_zero(m)]);
  return out;
}

}  // namespace

std::optional<MinForbidResult> min_forbidden_set_size(const PointSet& s, int k,
                                                      std::size_t size_cap,
                                                      std::uint64_t budget) {
  const int n = static_cast<int>(s.size());
  if (n > 7 || k < 2 || k > n)
    throw std::invalid_argument("min_forbidden_set_size supports 2 <= k <= |s| <= 7");
  const int edge_count = n * (n - 1) / 2;
  const std::vector<Tree> trees = k == 2 ? std::vector<Tree>{Tree(2, {{0, 1}})} : all_trees(k);
  const bool convex = n >= 3 && in_convex_position(s);
  const auto symmetries = convex ? dihedral_edge_maps(s) : std::vector<std::vector<int>>{};
  const CrossTable table(s);
  std::vector<std::vector<std::uint32_t>> witnesses(trees.size());

  const int top = static_cast<int>(std::min<std::size_t>(size_cap, static_cast<std::size_t>(edge_count)));
  for (int m = 0; m <= top; ++m) {
    const std::uint32_t last = m == 0 ? 0 : ((std::uint32_t{1} << m) - 1) << (edge_count - m);
    for (std::uint32_t mask = m == 0 ? 0 : (std::uint32_t{1} << m) - 1;;) {
      bool canonical = true;
      for (const auto& map : symmetries) {
        if (apply(map, mask) < mask) {
          canonical = false;
          break;
        }
      }
      if (canonical) {
        for (std::size_t ti = 0; ti < trees.size(); ++ti) {
          auto& known = witnesses[ti];
          if (std::any_of(known.begin(), known.end(), [&](std::uint32_t w) { return (w & mask) == 0; }))
            continue;
          Words forbidden(table.words, 0);
          forbidden[0] = mask;
          const SearchReport r = search(trees[ti], s, table, forbidden, {.budget = budget, .order_root = {}});
          if (r.verdict == Verdict::Unknown)
            throw BudgetExhausted("search budget exhausted during subset enumeration");
          if (r.verdict == Verdict::Infeasible)
            return MinForbidResult{static_cast<std::size_t>(m), mask_to_edges(mask, s.size()), trees[ti]};
          std::uint32_t used = 0;
          for (const Edge& e : r.witness->edge_images())
            used |= std::uint32_t{1} << edge_id(e.a, e.b, n);
          known.push_back(used);
        }
      }
      if (mask == last) break;
      // Next subset of the same size (Gosper's hack).
      const std::uint32_t c = mask & -mask;
      const std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

}  // namespace geotree

namespace geotree {

bool verify_construction(const ForbidConstruction& c, const PointSet& s, std::uint64_t budget) {
  const bool whole = forbids(c.edges, c.target_tree, s, budget);
  const int n = static_cast<int>(s.size());
  const int k = c.target_tree.size();
  if (c.kind != ForbidKind::REdgeBlanket || k >= n) return whole;

  bool every_subset = true;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (every_subset) {
    std::vector<int> local(n, -1);
    for (int i = 0; i < k; ++i) local[pick[i]] = i;
    EdgeSet induced;
    for (const Edge& e : c.edges)
      if (local[e.a] >= 0 && local[e.b] >= 0) induced.insert(Edge(local[e.a], local[e.b]));
    every_subset = forbids(induced, c.target_tree, s.subset(pick), budget);
    // Next k-combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (every_subset != whole)
    throw DefectError("whole-set and per-subset blanket verdicts disagree");
  return whole;
}

}  // namespace geotree
