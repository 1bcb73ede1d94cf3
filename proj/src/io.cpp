#include "geotree/io.hpp"

#include <fstream>

namespace geotree {

namespace {

// Runs a conversion and reports any schema or validation failure as InputError.
template <typename F>
auto parse(const char* what, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid ") + what + ": " + e.what());
  }
}

std::vector<std::pair<int, int>> pairs_from_json(const json& arr) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : arr.at("edges")) {
    if (!p.is_array() || p.size() != 2) throw InputError("edge must be a two-element array");
    out.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  }
  return out;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

json to_json(const PointSet& s) {
  json pts = json::array();
  for (const Point& p : s.points()) pts.push_back({p.x, p.y});
  return {{"points", pts}};
}

PointSet point_set_from_json(const json& j) {
  return parse("point set", [&] {
    std::vector<Point> pts;
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2) throw InputError("point must be a two-element array");
      pts.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
    }
    return PointSet(std::move(pts));
  });
}

json to_json(Edge e) { return {e.a, e.b}; }

Edge edge_from_json(const json& j) {
  return parse("edge", [&] {
    if (!j.is_array() || j.size() != 2) throw InputError("edge must be a two-element array");
    return Edge(j.at(0).get<int>(), j.at(1).get<int>());
  });
}

json to_json(const EdgeSet& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back(to_json(e));
  return {{"edges", arr}};
}

EdgeSet edge_set_from_json(const json& j) {
  return parse("edge set", [&] {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back(edge_from_json(e));
    return EdgeSet(std::move(edges));
  });
}

json to_json(const Tree& t) {
  json arr = json::array();
  for (auto [u, v] : t.edges()) arr.push_back({u, v});
  return {{"k", t.size()}, {"edges", arr}};
}

Tree tree_from_json(const json& j) {
  return parse("tree", [&] { return Tree(j.at("k").get<int>(), pairs_from_json(j)); });
}

json to_json(const Embedding& e, const EdgeSet& forbidden) {
  const auto check = check_embedding(e);
  bool avoided = true;
  for (const Edge& img : e.edge_images())
    if (forbidden.contains(img)) avoided = false;
  return {{"assignment", e.assignment},
          {"crossings", check.crossings},
          {"hull_edges_used", e.points.size() >= 3 ? hull_edges_used(e) : 0},
          {"forbidden_avoided", avoided}};
}

std::vector<int> assignment_from_json(const json& j) {
  return parse("embedding", [&] { return j.at("assignment").get<std::vector<int>>(); });
}

json to_json(const ForbidConstruction& c) {
  return {{"kind", to_string(c.kind)},
          {"edges", to_json(c.edges).at("edges")},
          {"target_tree", to_json(c.target_tree)},
          {"params",
           {{"n", c.params.n},
            {"k", c.params.k},
            {"r_threshold", c.params.r_threshold},
            {"hull_positions", c.params.hull_positions}}}};
}

ForbidConstruction construction_from_json(const json& j) {
  return parse("construction", [&] {
    ForbidConstruction c;
    c.kind = forbid_kind_from_string(j.at("kind").get<std::string>());
    c.edges = edge_set_from_json(j);
    c.target_tree = tree_from_json(j.at("target_tree"));
    const auto& p = j.at("params");
    c.params.n = p.at("n").get<int>();
    c.params.k = p.at("k").get<int>();
    c.params.r_threshold = p.value("r_threshold", -1);
    c.params.hull_positions = p.value("hull_positions", std::vector<int>{});
    return c;
  });
}

json to_json(const SearchReport& r, const EdgeSet& forbidden) {
  json feasible;
  switch (r.verdict) {
    case Verdict::Feasible: feasible = true; break;
    case Verdict::Infeasible: feasible = false; break;
    case Verdict::Unknown: feasible = "unknown"; break;
  }
  return {{"feasible", feasible},
          {"witness", r.witness ? to_json(*r.witness, forbidden) : json(nullptr)},
          {"nodes", r.nodes_expanded},
          {"prunes",
           {{"crossing", r.prunes.crossing},
            {"forbidden", r.prunes.forbidden},
            {"symmetry", r.prunes.symmetry}}},
          {"ms", r.elapsed.count()}};
}

}  // namespace geotree
