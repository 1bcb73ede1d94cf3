#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "geotree/embedder.hpp"
#include "geotree/forbid.hpp"
#include "geotree/geometry.hpp"
#include "geotree/oracle.hpp"
#include "geotree/trees.hpp"

namespace geotree {

using nlohmann::json;

/// Malformed or unreadable input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

// {"points": [[x, y], ...]}
json to_json(const PointSet& s);
PointSet point_set_from_json(const json& j);

// [a, b]
json to_json(Edge e);
Edge edge_from_json(const json& j);

// {"edges": [[a, b], ...]}
json to_json(const EdgeSet& edges);
EdgeSet edge_set_from_json(const json& j);

// {"k": k, "edges": [[u, v], ...]}
json to_json(const Tree& t);
Tree tree_from_json(const json& j);

// {"assignment": [...], "crossings": c, "hull_edges_used": h,
//  "forbidden_avoided": bool}
json to_json(const Embedding& e, const EdgeSet& forbidden = {});
std::vector<int> assignment_from_json(const json& j);

// {"kind": ..., "edges": [...], "target_tree": {...}, "params": {...}}
json to_json(const ForbidConstruction& c);
ForbidConstruction construction_from_json(const json& j);

// {"feasible": true|false|"unknown", "witness": {...}|null, "nodes": n,
//  "prunes": {...}, "ms": t}
json to_json(const SearchReport& r, const EdgeSet& forbidden = {});

}  // namespace geotree
