#include "geotree/suites.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "geotree/embedder.hpp"
#include "geotree/forbid.hpp"
#include "geotree/generate.hpp"
#include "geotree/io.hpp"
#include "geotree/trees.hpp"

namespace geotree {

nlohmann::json SuiteReport::summary() const {
  return {{"suite", suite},
          {"summary", true},
          {"cases", cases.size()},
          {"passed", passed},
          {"failed", failed},
          {"unknown", unknown},
          {"notable", notable}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "baseline", "single-edge", "few-hull", "two-edge-convex", "conf3",
      "conf2_2",  "blanket",     "turan",    "bracket",         "properties"};
  return names;
}

namespace {

struct Range {
  int lo;
  int hi;
};

class Recorder {
 public:
  Recorder(std::string suite, const SuiteOptions& options) : options_(options) {
    report_.suite = std::move(suite);
  }

  Range range(int lo, int hi) const { return {options_.n_min.value_or(lo), options_.n_max.value_or(hi)}; }
  int seeds(int fallback) const { return options_.seeds.value_or(fallback); }
  std::uint64_t budget() const { return options_.budget; }

  // Runs one case. `body` fills the record and returns whether it passed.
  void run(nlohmann::json record, const std::function<bool(nlohmann::json&)>& body) {
    record["suite"] = report_.suite;
    std::string verdict;
    try {
      verdict = body(record) ? "pass" : "fail";
    } catch (const BudgetExhausted& e) {
      verdict = "unknown";
      record["error"] = e.what();
    } catch (const std::exception& e) {
      verdict = "fail";
      record["error"] = e.what();
    }
    record["verdict"] = verdict;
    if (verdict == "pass") ++report_.passed;
    else if (verdict == "fail") ++report_.failed;
    else ++report_.unknown;
    if (options_.on_case) options_.on_case(record);
    report_.cases.push_back(std::move(record));
  }

  void notable(nlohmann::json finding) { report_.notable.push_back(std::move(finding)); }
  SuiteReport take() { return std::move(report_); }

 private:
  const SuiteOptions& options_;
  SuiteReport report_;
};

bool witness_sound(const SearchReport& r, const EdgeSet& forbidden) {
  if (!r.witness) return false;
  if (!check_embedding(*r.witness).ok()) return false;
  for (const Edge& e : r.witness->edge_images())
    if (forbidden.contains(e)) return false;
  return true;
}

void baseline(Recorder& rec) {
  const Range r = rec.range(5, 8);
  for (int n = r.lo; n <= r.hi; ++n) {
    const auto trees = all_trees(n);
    for (int seed = 1; seed <= rec.seeds(20); ++seed) {
      rec.run({{"n", n}, {"seed", seed}, {"mode", "random"}}, [&](nlohmann::json& out) {
        const PointSet s = random_points(n, static_cast<std::uint64_t>(seed));
        int bad = 0;
        for (const Tree& t : trees) {
          const Embedding emb = embed_recursive(sort_children_by_subtree_size(root_at(t, 0)), s);
          if (!check_embedding(emb).ok()) ++bad;
        }
        out["trees"] = trees.size();
        out["invalid"] = bad;
        return bad == 0;
      });
    }
  }
}

void single_edge(Recorder& rec) {
  const Range r = rec.range(5, 7);
  for (int n = r.lo; n <= r.hi; ++n) {
    const auto trees = all_trees(n);
    for (PointMode mode : {PointMode::Convex, PointMode::Random}) {
      for (int seed = 1; seed <= rec.seeds(20); ++seed) {
        nlohmann::json rec_in{{"n", n}, {"seed", seed}, {"mode", mode == PointMode::Convex ? "convex" : "random"}};
        rec.run(rec_in, [&](nlohmann::json& out) {
          const PointSet s = generate_points(mode, n, static_cast<std::uint64_t>(seed));
          int instances = 0, constructive_fail = 0, oracle_fail = 0;
          for (const Tree& t : trees) {
            for (const Edge& e : all_edges(s.size())) {
              ++instances;
              try {
                const Embedding emb = embed_avoiding_single(t, s, e);
                if (emb.uses(e) || !check_embedding(emb).ok()) ++constructive_fail;
              } catch (const DefectError&) {
                ++constructive_fail;
              }
              const EdgeSet f({e});
              const SearchReport rep = exists_embedding(t, s, f, {.budget = rec.budget(), .order_root = {}});
              if (rep.verdict == Verdict::Unknown) throw BudgetExhausted("oracle budget exhausted");
              if (!rep.feasible() || !witness_sound(rep, f)) ++oracle_fail;
            }
          }
          out["instances"] = instances;
          out["constructive_failures"] = constructive_fail;
          out["oracle_failures"] = oracle_fail;
          return constructive_fail == 0 && oracle_fail == 0;
        });
      }
    }
  }
}

void few_hull(Recorder& rec) {
  const Range r = rec.range(5, 9);
  for (int n = r.lo; n <= r.hi; ++n) {
    const auto trees = all_trees(n);
    for (int seed = 1; seed <= rec.seeds(1); ++seed) {
      rec.run({{"n", n}, {"seed", seed}, {"mode", "convex"}}, [&](nlohmann::json& out) {
        const PointSet s = convex_points(n, static_cast<std::uint64_t>(seed));
        int worst = 0, bad = 0;
        for (const Tree& t : trees) {
          const Embedding emb = embed_few_hull_edges(t, s);
          const int h = hull_edges_used(emb);
          worst = std::max(worst, h);
          if (2 * h >= n || !check_embedding(emb).ok()) ++bad;
        }
        out["trees"] = trees.size();
        out["max_hull_edges"] = worst;
        out["violations"] = bad;
        return bad == 0;
      });
    }
  }
}

void two_edge_convex(Recorder& rec) {
  const Range r = rec.range(5, 7);
  for (int n = r.lo; n <= r.hi; ++n) {
    const auto trees = all_trees(n);
    for (int seed = 1; seed <= rec.seeds(1); ++seed) {
      const PointSet s = convex_points(n, static_cast<std::uint64_t>(seed));
      rec.run({{"n", n}, {"seed", seed}, {"check", "all-pairs"}}, [&](nlohmann::json& out) {
        const auto edges = all_edges(s.size());
        int pairs = 0, instances = 0, constructive_fail = 0, oracle_fail = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          for (std::size_t j = i + 1; j < edges.size(); ++j) {
            ++pairs;
            const EdgeSet f({edges[i], edges[j]});
            for (const Tree& t : trees) {
              ++instances;
              try {
                const Embedding emb = embed_convex_avoiding_two(t, s, edges[i], edges[j]);
                if (emb.uses(edges[i]) || emb.uses(edges[j]) || !check_embedding(emb).ok())
                  ++constructive_fail;
              } catch (const DefectError&) {
                ++constructive_fail;
              }
              const SearchReport rep = exists_embedding(t, s, f, {.budget = rec.budget(), .order_root = {}});
              if (rep.verdict == Verdict::Unknown) throw BudgetExhausted("oracle budget exhausted");
              if (!rep.feasible() || !witness_sound(rep, f)) ++oracle_fail;
            }
          }
        }
        out["pairs"] = pairs;
        out["instances"] = instances;
        out["constructive_failures"] = constructive_fail;
        out["oracle_failures"] = oracle_fail;
        return constructive_fail == 0 && oracle_fail == 0;
      });
      rec.run({{"n", n}, {"seed", seed}, {"check", "min-forbidden"}}, [&](nlohmann::json& out) {
        const auto found = min_forbidden_set_size(s, n, 3, rec.budget());
        out["min_size"] = found ? nlohmann::json(found->size) : nlohmann::json(nullptr);
        if (found) {
          out["witness_edges"] = to_json(found->edges).at("edges");
          out["witness_tree"] = to_json(found->tree);
        }
        return found && found->size == 3;
      });
    }
  }
}

void conf3(Recorder& rec) {
  const Range r = rec.range(5, 9);
  for (int n = r.lo; n <= r.hi; ++n) {
    const PointSet s = convex_points(n, 1);
    for (int start = 0; start < n; ++start) {
      rec.run({{"n", n}, {"start", start}}, [&](nlohmann::json& out) {
        const ForbidConstruction c = three_consecutive_hull_edges(s, start);
        bool structural = c.edges.size() == 3;
        std::map<int, int> degree;
        for (const Edge& e : c.edges) {
          structural = structural && edge_depth(s, e) == 0;
          ++degree[e.a];
          ++degree[e.b];
        }
        structural = structural && degree.size() == 4;
        const bool forbidden = verify_construction(c, s, rec.budget());
        int sharp = 0;
        for (const Edge& e : c.edges) {
          EdgeSet fewer = c.edges;
          fewer.erase(e);
          if (!forbids(fewer, c.target_tree, s, rec.budget())) ++sharp;
        }
        out["edges"] = to_json(c.edges).at("edges");
        out["forbids"] = forbidden;
        out["sharp_removals"] = sharp;
        return structural && forbidden && sharp == 3;
      });
    }
  }
}

void conf2_2(Recorder& rec) {
  const Range r = rec.range(6, 9);
  for (int n = r.lo; n <= r.hi; ++n) {
    const PointSet s = convex_points(n, 1);
    rec.run({{"n", n}, {"middles", spread_middles(n)}}, [&](nlohmann::json& out) {
      const ForbidConstruction c = three_pairs_consecutive_hull_edges(s, spread_middles(n));
      bool structural = c.edges.size() == 6;
      for (const Edge& e : c.edges) structural = structural && edge_depth(s, e) == 0;
      const bool forbidden = verify_construction(c, s, rec.budget());
      out["edges"] = to_json(c.edges).at("edges");
      out["forbids"] = forbidden;
      return structural && forbidden;
    });
  }
}

void blanket(Recorder& rec) {
  const Range r = rec.range(7, 9);
  const std::vector<std::pair<int, int>> cases{{7, 4}, {8, 5}, {9, 5}, {9, 6}};
  for (auto [n, k] : cases) {
    if (n < r.lo || n > r.hi) continue;
    rec.run({{"n", n}, {"k", k}}, [&](nlohmann::json& out) {
      const PointSet s = convex_points(n, 1);
      const ForbidConstruction c = r_edge_blanket(s, k);
      bool level_cut = true;
      for (const Edge& e : all_edges(s.size()))
        level_cut = level_cut && (c.edges.contains(e) == (edge_depth(s, e) <= c.params.r_threshold));
      const Rational upper = upper_bound_value(n, k);
      const bool within = Rational(static_cast<std::int64_t>(c.edges.size())) <= upper;
      const bool forbidden = verify_construction(c, s, rec.budget());
      out["r_threshold"] = c.params.r_threshold;
      out["blanket_size"] = c.edges.size();
      out["upper"] = to_string(upper);
      out["forbids_every_subset"] = forbidden;
      return level_cut && within && forbidden;
    });
  }
}

void turan(Recorder& rec) {
  const Range r = rec.range(5, 30);
  rec.run({{"check", "bound-order"}, {"n_min", r.lo}, {"n_max", r.hi}}, [&](nlohmann::json& out) {
    int pairs = 0, bad_order = 0, bad_blanket = 0;
    for (int n = r.lo; n <= r.hi; ++n) {
      const PointSet s = convex_points(n, 1);
      for (int k = 3; k <= n; ++k) {
        ++pairs;
        const Rational upper = upper_bound_value(n, k);
        if (!(turan_lower_bound(n, k) <= upper)) ++bad_order;
        const auto size = static_cast<std::int64_t>(r_edge_blanket(s, k).edges.size());
        if (Rational(size) > upper) ++bad_blanket;
      }
    }
    out["pairs"] = pairs;
    out["lower_above_upper"] = bad_order;
    out["blanket_above_upper"] = bad_blanket;
    return pairs > 0 && bad_order == 0 && bad_blanket == 0;
  });

  for (int n = r.lo; n <= std::min(r.hi, 6); ++n) {
    for (int seed = 1; seed <= rec.seeds(5); ++seed) {
      const PointSet s = random_points(n, static_cast<std::uint64_t>(seed));
      for (int k = 3; k <= n; ++k) {
        rec.run({{"n", n}, {"k", k}, {"seed", seed}, {"check", "brute-force"}}, [&](nlohmann::json& out) {
          const std::int64_t lower = ceil(turan_lower_bound(n, k));
          const auto found = min_forbidden_set_size(s, k, s.size() * (s.size() - 1) / 2, rec.budget());
          out["lower_ceil"] = lower;
          out["min_size"] = found ? nlohmann::json(found->size) : nlohmann::json(nullptr);
          return found && static_cast<std::int64_t>(found->size) >= lower;
        });
      }
    }
  }
}

void bracket(Recorder& rec) {
  const Range r = rec.range(5, 6);
  for (int n = r.lo; n <= r.hi; ++n) {
    for (int seed = 1; seed <= rec.seeds(10); ++seed) {
      rec.run({{"n", n}, {"seed", seed}, {"mode", "random"}}, [&](nlohmann::json& out) {
        const PointSet s = random_points(n, static_cast<std::uint64_t>(seed));
        const bool convex = in_convex_position(s);
        const auto found = min_forbidden_set_size(s, n, 3, rec.budget());
        out["convex"] = convex;
        out["hull_size"] = convex_hull(s).size();
        out["min_size"] = found ? nlohmann::json(found->size) : nlohmann::json(nullptr);
        if (found && found->size == 2 && !convex) {
          nlohmann::json finding{{"n", n}, {"seed", seed}, {"points", to_json(s).at("points")},
                                 {"edges", to_json(found->edges).at("edges")},
                                 {"tree", to_json(found->tree)}};
          out["size_two_witness"] = finding;
          rec.notable(std::move(finding));
        }
        return found && (found->size == 2 || found->size == 3);
      });
    }
  }
}

Point random_point(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  return {d(rng), d(rng)};
}

void properties(Recorder& rec) {
  constexpr int kCases = 1000;
  const int seed = rec.seeds(1);

  rec.run({{"property", "orientation-antisymmetry"}}, [&](nlohmann::json& out) {
    std::mt19937_64 rng(seed);
    int bad = 0;
    for (int i = 0; i < kCases; ++i) {
      const std::int64_t bound = i % 2 == 0 ? kMaxCoordinate : 4;  // small boxes hit collinear triples
      const Point p = random_point(rng, bound), q = random_point(rng, bound), t = random_point(rng, bound);
      if (orient(p, q, t) != -orient(p, t, q) || orient(p, q, t) != orient(q, t, p)) ++bad;
    }
    out["cases"] = kCases;
    out["violations"] = bad;
    return bad == 0;
  });

  rec.run({{"property", "crossing-symmetry"}}, [&](nlohmann::json& out) {
    std::mt19937_64 rng(seed + 1);
    int bad = 0;
    for (int i = 0; i < kCases; ++i) {
      const PointSet s = random_points(6, rng());
      const auto edges = all_edges(6);
      std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
      const Edge a = edges[pick(rng)], b = edges[pick(rng)];
      if (segments_cross(s, a, b) != segments_cross(s, b, a)) ++bad;
      if (a == b && segments_cross(s, a, b)) ++bad;
    }
    out["cases"] = kCases;
    out["violations"] = bad;
    return bad == 0;
  });

  rec.run({{"property", "hull-edge-iff-depth-zero"}}, [&](nlohmann::json& out) {
    std::mt19937_64 rng(seed + 2);
    std::uniform_int_distribution<int> size(3, 10);
    int bad = 0;
    for (int i = 0; i < kCases; ++i) {
      const int n = size(rng);
      const PointSet s = i % 4 == 0 ? convex_points(static_cast<std::size_t>(n), rng())
                                    : random_points(static_cast<std::size_t>(n), rng());
      const auto hull = convex_hull(s);
      std::set<Edge> hull_edges;
      for (std::size_t h = 0; h < hull.size(); ++h) hull_edges.insert(Edge(hull[h], hull[(h + 1) % hull.size()]));
      for (const Edge& e : all_edges(s.size())) {
        const auto [left, right] = side_counts(s, e);
        if ((edge_depth(s, e) == 0) != hull_edges.contains(e) || left + right != n - 2) ++bad;
      }
    }
    out["cases"] = kCases;
    out["violations"] = bad;
    return bad == 0;
  });

  rec.run({{"property", "angular-sort-ccw-chain"}}, [&](nlohmann::json& out) {
    std::mt19937_64 rng(seed + 3);
    std::uniform_int_distribution<int> size(3, 12);
    int bad = 0;
    for (int i = 0; i < kCases; ++i) {
      const PointSet s = random_points(static_cast<std::size_t>(size(rng)), rng());
      const auto hull = convex_hull(s);
      const int center = hull[rng() % hull.size()];
      std::vector<int> rest;
      for (int p = 0; p < static_cast<int>(s.size()); ++p)
        if (p != center) rest.push_back(p);
      std::shuffle(rest.begin(), rest.end(), rng);
      const auto sorted = angular_sort(s, center, rest);
      if (!std::is_permutation(sorted.begin(), sorted.end(), rest.begin(), rest.end())) ++bad;
      for (std::size_t j = 0; j + 1 < sorted.size(); ++j)
        if (orient(s[center], s[sorted[j]], s[sorted[j + 1]]) != 1) ++bad;
    }
    out["cases"] = kCases;
    out["violations"] = bad;
    return bad == 0;
  });

  rec.run({{"property", "tree-count-sequence"}}, [&](nlohmann::json& out) {
    const std::vector<std::size_t> expected{1, 1, 2, 3, 6, 11, 23};
    std::vector<std::size_t> counts;
    std::map<int, std::set<std::string>> classes;
    for (int k = 2; k <= 8; ++k) {
      const auto trees = all_trees(k);
      counts.push_back(trees.size());
      for (const Tree& t : trees) classes[k].insert(ahu_canonical(t));
    }
    // Random labeled trees must land in an enumerated class, invariantly
    // under relabeling.
    std::mt19937_64 rng(seed + 4);
    int bad = 0;
    for (int i = 0; i < kCases; ++i) {
      const int k = 3 + static_cast<int>(rng() % 6);
      std::vector<int> seq(k - 2);
      for (int& x : seq) x = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
      const Tree t = tree_from_prufer(seq);
      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::pair<int, int>> relabeled;
      for (auto [u, v] : t.edges()) relabeled.emplace_back(perm[u], perm[v]);
      const std::string code = ahu_canonical(t);
      if (!classes[k].contains(code) || ahu_canonical(Tree(k, relabeled)) != code) ++bad;
    }
    out["counts"] = counts;
    out["cases"] = kCases;
    out["violations"] = bad;
    return counts == expected && bad == 0;
  });

  rec.run({{"property", "rotation-preserves-planarity"}}, [&](nlohmann::json& out) {
    std::mt19937_64 rng(seed + 5);
    std::map<int, std::vector<Tree>> trees;
    int bad = 0;
    for (int i = 0; i < kCases; ++i) {
      const int n = 5 + static_cast<int>(rng() % 5);
      if (!trees.contains(n)) trees[n] = all_trees(n);
      const Tree& t = trees[n][rng() % trees[n].size()];
      const PointSet s = convex_points(static_cast<std::size_t>(n), rng());
      const Embedding base = embed_recursive(root_at(t, static_cast<int>(rng() % static_cast<std::uint64_t>(n))), s);
      const int shift = static_cast<int>(rng() % 64) - 32;
      if (!check_embedding(rotate_embedding(base, shift)).ok()) ++bad;
    }
    out["cases"] = kCases;
    out["violations"] = bad;
    return bad == 0;
  });
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  static const std::map<std::string, void (*)(Recorder&)> suites{
      {"baseline", baseline}, {"single-edge", single_edge}, {"few-hull", few_hull},
      {"two-edge-convex", two_edge_convex}, {"conf3", conf3}, {"conf2_2", conf2_2},
      {"blanket", blanket}, {"turan", turan}, {"bracket", bracket}, {"properties", properties}};
  const auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  Recorder rec(name, options);
  it->second(rec);
  return rec.take();
}

}  // namespace geotree
