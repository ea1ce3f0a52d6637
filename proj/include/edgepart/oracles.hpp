#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "edgepart/graph.hpp"
#include "edgepart/partition.hpp"

namespace edgepart {

// Exhaustive search for minimum partitions on desk-sized graphs. These are the
// ground truth the polynomial algorithms are checked against.

inline constexpr std::size_t kOracleEdgeGuard = 24;

struct OracleBudget {
  std::size_t max_edges = 16;
  std::size_t max_parts = 8;
};

struct OracleResult {
  // Least number of nonempty parts, or nullopt when none <= max_parts works.
  std::optional<std::size_t> min_parts;
  std::optional<EdgePartition> witness;
};

/// Throws ResourceError if the graph has more than budget.max_edges edges or
/// the budget itself exceeds kOracleEdgeGuard.
OracleResult oracle_min_parts(const Graph& g, Family f, const OracleBudget& budget = {});

inline OracleResult oracle_wr(const Graph& g, const OracleBudget& b = {}) {
  return oracle_min_parts(g, Family::weakly_semiregular, b);
}
inline OracleResult oracle_sr(const Graph& g, const OracleBudget& b = {}) {
  return oracle_min_parts(g, Family::semiregular, b);
}
inline OracleResult oracle_irr(const Graph& g, const OracleBudget& b = {}) {
  return oracle_min_parts(g, Family::locally_irregular, b);
}
inline OracleResult oracle_reg_irr(const Graph& g, const OracleBudget& b = {}) {
  return oracle_min_parts(g, Family::regular_or_locally_irregular, b);
}
inline OracleResult oracle_mixed(const Graph& g, const OracleBudget& b = {}) {
  return oracle_min_parts(g, Family::irregular_or_weakly_semiregular, b);
}

/// Decodes a Prüfer sequence over 0..n-1 (length n-2) into a labeled tree.
Graph tree_from_prufer(std::span<const Vertex> seq, std::size_t n);

/// Calls fn on all n^(n-2) labeled trees on n vertices, 1 <= n <= 9.
void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& fn);

/// All labeled trees on n vertices, 1 <= n <= 8 (materialized).
std::vector<Graph> enumerate_trees(std::size_t n);

/// One representative per isomorphism class of trees on n vertices, n <= 16.
std::vector<Graph> enumerate_free_trees(std::size_t n);

}  // namespace edgepart
