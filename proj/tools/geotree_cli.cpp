#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "geotree/embedder.hpp"
#include "geotree/forbid.hpp"
#include "geotree/generate.hpp"
#include "geotree/io.hpp"
#include "geotree/oracle.hpp"
#include "geotree/suites.hpp"
#include "geotree/svg.hpp"
#include "geotree/trees.hpp"

using namespace geotree;

namespace {

enum Exit { kOk = 0, kFailure = 1, kInput = 2, kUnknown = 3 };

struct Options {
  std::uint64_t seed = 1;
  int n = 0;
  int k = 0;
  std::string mode = "convex";
  std::string suite;
  std::uint64_t budget = kDefaultBudget;
  std::string out;
  std::string svg;
  std::string tree;
  std::string points;
  std::string forbidden;
  std::string embedding;
  std::size_t cap = 3;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::optional<int> seeds;
};

void emit(const Options& o, const json& j) {
  if (o.out.empty()) std::cout << j.dump(2) << '\n';
  else write_json_file(o.out, j);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

PointMode parse_mode(const std::string& mode) {
  if (mode == "convex") return PointMode::Convex;
  if (mode == "random") return PointMode::Random;
  throw InputError("unknown mode '" + mode + "' (expected convex or random)");
}

EdgeSet load_forbidden(const Options& o) {
  return o.forbidden.empty() ? EdgeSet{} : edge_set_from_json(read_json_file(o.forbidden));
}

// Points from --points, or generated from --n/--seed/--mode.
PointSet load_points(const Options& o) {
  if (!o.points.empty()) return point_set_from_json(read_json_file(o.points));
  if (o.n <= 0) throw InputError("need --points or --n");
  return generate_points(parse_mode(o.mode), static_cast<std::size_t>(o.n), o.seed);
}

json seed_of(const Options& o) {
  if (o.points.empty()) return o.seed;
  return read_json_file(o.points).value("seed", json(nullptr));
}

int cmd_gen(const Options& o) {
  if (!o.tree.empty()) {
    const int k = o.k > 0 ? o.k : o.n;
    Tree t;
    if (o.tree == "spider") t = spider_tree(k);
    else if (o.tree == "path") t = path_tree(k);
    else if (o.tree == "star") t = star_tree(k);
    else throw InputError("unknown tree family '" + o.tree + "' (expected spider, path or star)");
    emit(o, to_json(t));
    return kOk;
  }
  if (o.n <= 0) throw InputError("--n is required");
  json j = to_json(generate_points(parse_mode(o.mode), static_cast<std::size_t>(o.n), o.seed));
  j["seed"] = o.seed;
  j["mode"] = o.mode;
  j["prng"] = "mt19937_64";
  emit(o, j);
  return kOk;
}

int cmd_embed(const Options& o) {
  const Tree t = tree_from_json(read_json_file(o.tree));
  const PointSet s = load_points(o);
  const EdgeSet forbidden = load_forbidden(o);
  forbidden.check_indices(s.size());
  const int n = static_cast<int>(s.size());

  std::string strategy;
  std::optional<Embedding> emb;
  if (t.size() == n && forbidden.size() == 0) {
    strategy = "recursive";
    emb = embed_recursive(sort_children_by_subtree_size(root_at(t, 0)), s);
  } else if (t.size() == n && forbidden.size() == 1 && n >= 5) {
    strategy = "single-edge";
    emb = embed_avoiding_single(t, s, *forbidden.begin());
  } else if (t.size() == n && forbidden.size() == 2 && n >= 5 && in_convex_position(s)) {
    strategy = "convex-two-edge";
    auto it = forbidden.begin();
    const Edge f1 = *it++;
    emb = embed_convex_avoiding_two(t, s, f1, *it);
  } else {
    strategy = "search";
    const SearchReport r = exists_embedding(t, s, forbidden, {.budget = o.budget, .order_root = {}});
    if (r.verdict == Verdict::Unknown) {
      std::cerr << "search budget exhausted after " << r.nodes_expanded << " nodes\n";
      return kUnknown;
    }
    if (!r.witness) {
      json j{{"strategy", strategy}, {"feasible", false}, {"seed", seed_of(o)}};
      emit(o, j);
      std::cerr << "no embedding avoids the forbidden edges\n";
      return kFailure;
    }
    emb = *r.witness;
  }

  json j = to_json(*emb, forbidden);
  j["strategy"] = strategy;
  j["seed"] = seed_of(o);
  emit(o, j);
  if (!o.svg.empty()) write_text(o.svg, render_svg(s, t, emb->assignment, forbidden));
  return check_embedding(*emb).ok() && j.at("forbidden_avoided").get<bool>() ? kOk : kFailure;
}

int cmd_verify(const Options& o) {
  if (o.suite.empty()) throw InputError("--suite is required; one of: " + [] {
    std::string names;
    for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
    return names;
  }());
  SuiteOptions so;
  so.n_min = o.n_min;
  so.n_max = o.n_max;
  so.seeds = o.seeds;
  so.budget = o.budget;
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw InputError("cannot write " + o.out);
  }
  std::ostream& out = o.out.empty() ? std::cout : file;
  so.on_case = [&](const json& record) { out << record.dump() << '\n' << std::flush; };

  SuiteReport report;
  try {
    report = run_suite(o.suite, so);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out << report.summary().dump() << '\n';
  for (const auto& finding : report.notable)
    std::cerr << "NOTABLE [" << o.suite << "]: " << finding.dump() << '\n';
  if (report.failed > 0) return kFailure;
  if (report.unknown > 0) return kUnknown;
  return kOk;
}

int cmd_bounds(const Options& o) {
  if (o.k < 3) throw InputError("--k must be at least 3");
  if (o.n < o.k) throw InputError("--n must be at least --k");
  const ForbidConstruction blanket = r_edge_blanket(convex_points(static_cast<std::size_t>(o.n), o.seed), o.k);
  emit(o, {{"n", o.n},
           {"k", o.k},
           {"lower", to_string(turan_lower_bound(o.n, o.k))},
           {"upper", to_string(upper_bound_value(o.n, o.k))},
           {"blanket_size", blanket.edges.size()},
           {"R", blanket.params.r_threshold}});
  return kOk;
}

int cmd_search_min(const Options& o) {
  const PointSet s = load_points(o);
  const int k = o.k > 0 ? o.k : static_cast<int>(s.size());
  std::optional<MinForbidResult> found;
  try {
    found = min_forbidden_set_size(s, k, o.cap, o.budget);
  } catch (const BudgetExhausted& e) {
    std::cerr << e.what() << '\n';
    return kUnknown;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  json j{{"k", k}, {"cap", o.cap}, {"convex", in_convex_position(s)}, {"seed", seed_of(o)}};
  if (found) {
    j["min_size"] = found->size;
    j["edges"] = to_json(found->edges).at("edges");
    j["tree"] = to_json(found->tree);
  } else {
    j["min_size"] = nullptr;
  }
  emit(o, j);
  return kOk;
}

int cmd_render(const Options& o) {
  if (o.svg.empty()) throw InputError("--svg is required");
  const PointSet s = load_points(o);
  const EdgeSet forbidden = load_forbidden(o);
  forbidden.check_indices(s.size());
  Tree t;
  std::vector<int> assignment;
  if (!o.embedding.empty()) {
    if (o.tree.empty()) throw InputError("--embedding needs --tree");
    t = tree_from_json(read_json_file(o.tree));
    assignment = assignment_from_json(read_json_file(o.embedding));
    if (!check_embedding(t, s, assignment).in_range) throw InputError("embedding does not fit the points");
  }
  write_text(o.svg, render_svg(s, t, assignment, forbidden));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree embeddings in complete geometric graphs with forbidden edges"};
  app.require_subcommand(1);
  Options o;

  auto seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "PRNG seed (mt19937_64)"); };
  auto size = [&](CLI::App* c) {
    c->add_option("--n", o.n, "number of points");
    c->add_option("--k", o.k, "number of tree vertices");
  };
  auto mode = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "convex or random")->check(CLI::IsMember({"convex", "random"}));
  };
  auto out = [&](CLI::App* c) { c->add_option("--out", o.out, "output file (default stdout)"); };
  auto budget = [&](CLI::App* c) { c->add_option("--budget", o.budget, "oracle node budget"); };

  auto* gen = app.add_subcommand("gen", "generate a point set, or a tree with --tree");
  seed(gen), size(gen), mode(gen), out(gen);
  gen->add_option("--tree", o.tree, "spider, path or star");

  auto* embed = app.add_subcommand("embed", "embed a tree avoiding forbidden edges");
  seed(embed), size(embed), mode(embed), out(embed), budget(embed);
  embed->add_option("--tree", o.tree, "tree JSON")->required();
  embed->add_option("--points", o.points, "point set JSON");
  embed->add_option("--forbidden", o.forbidden, "forbidden edge set JSON");
  embed->add_option("--svg", o.svg, "also draw the result");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite name");
  verify->add_option("--n-min", o.n_min);
  verify->add_option("--n-max", o.n_max);
  verify->add_option("--seeds", o.seeds, "use seeds 1..N");
  out(verify), budget(verify);

  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds with the blanket size");
  size(bounds), seed(bounds), out(bounds);

  auto* search = app.add_subcommand("search-min", "smallest forbidding edge set by exhaustive search");
  seed(search), size(search), mode(search), out(search), budget(search);
  search->add_option("--points", o.points, "point set JSON");
  search->add_option("--cap", o.cap, "largest set size to try");

  auto* render = app.add_subcommand("render", "draw points, an embedding and forbidden edges as SVG");
  seed(render), size(render), mode(render);
  render->add_option("--points", o.points, "point set JSON");
  render->add_option("--tree", o.tree, "tree JSON");
  render->add_option("--embedding", o.embedding, "embedding JSON");
  render->add_option("--forbidden", o.forbidden, "forbidden edge set JSON");
  render->add_option("--svg", o.svg, "output SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*embed) return cmd_embed(o);
    if (*verify) return cmd_verify(o);
    if (*bounds) return cmd_bounds(o);
    if (*search) return cmd_search_min(o);
    if (*render) return cmd_render(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
