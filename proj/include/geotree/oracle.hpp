#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "geotree/embedder.hpp"
#include "geotree/forbid.hpp"
#include "geotree/geometry.hpp"
#include "geotree/trees.hpp"

namespace geotree {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class Verdict { Feasible, Infeasible, Unknown };

const char* to_string(Verdict v);

/// Raised by the boolean wrappers when a search runs out of budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PruneCounts {
  std::uint64_t crossing = 0;
  std::uint64_t forbidden = 0;
  std::uint64_t symmetry = 0;
};

struct SearchReport {
  Verdict verdict = Verdict::Unknown;
  std::optional<Embedding> witness;
  std::uint64_t nodes_expanded = 0;
  PruneCounts prunes;
  std::chrono::duration<double, std::milli> elapsed{0};

  bool feasible() const { return verdict == Verdict::Feasible; }
};

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  /// BFS root of the assignment order; defaults to a max-degree vertex.
  std::optional<int> order_root;
};

/// Exhaustive backtracking: is there an injective, crossing-free drawing of t
/// on s (|t| <= |s|) that uses no edge of `forbidden`?
SearchReport exists_embedding(const Tree& t, const PointSet& s,
                              const EdgeSet& forbidden,
                              const SearchOptions& options = {});

/// True iff every drawing of t on s uses a forbidden edge. Throws
/// BudgetExhausted instead of guessing.
bool forbids(const EdgeSet& forbidden, const Tree& t, const PointSet& s,
             std::uint64_t budget = kDefaultBudget);

struct MinForbidResult {
  std::size_t size = 0;
  EdgeSet edges;
  Tree tree;
};

/// Smallest m <= size_cap such that some m-edge set forbids some tree on k
/// vertices, with a witness; nullopt when no set within the cap does.
/// Edge sets are enumerated by size; convex inputs only visit one set per
/// dihedral orbit of the hull order. Requires 2 <= k <= |s| <= 7.
std::optional<MinForbidResult> min_forbidden_set_size(
    const PointSet& s, int k, std::size_t size_cap,
    std::uint64_t budget = kDefaultBudget);

/// True iff the construction's edges forbid its target tree on s. Blankets
/// with k < n are additionally checked subset by subset: every k-point subset
/// with the blanket restricted to its induced edges must forbid the tree, and
/// the two verdicts must agree.
bool verify_construction(const ForbidConstruction& c, const PointSet& s,
                         std::uint64_t budget = kDefaultBudget);

}  // namespace geotree
