#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "edgepart/graph.hpp"
#include "edgepart/partition.hpp"

namespace edgepart {

// Decisions and constructions for partitioning tree edges into weakly
// semiregular or semiregular forests.

/// Pairs 1 <= alpha <= beta <= max_degree whose achievable degree sums
/// {1, 2, a, a+1, b, b+1, a+b} cover every degree in d. Ascending
/// lexicographic order; empty once |d| >= 8.
std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(const DegreeSet& d,
                                                                 std::size_t max_degree);

struct TreeDecision {
  bool yes = false;
  std::optional<EdgePartition> witness;
  // Restart count of the labeling loop (alg1/alg2) or total over all
  // candidates (wr2_tree/wrc_tree).
  std::size_t restarts = 0;
  // Targets of the successful run: alpha_k for part k.
  std::vector<std::size_t> alphas;
};

/// Red/blue labeling of tree edges where every vertex has red degree in
/// {0, 1, alpha} and blue degree in {0, 1, beta}. Red is part 0.
TreeDecision alg1(const RootedTree& t, std::size_t alpha, std::size_t beta);

using ColorMask = std::uint64_t;
inline constexpr std::size_t kMaxColors = 64;

/// Colors a vertex's downward edges. Edge j may not take a color whose bit is
/// set in forbidden[j]. For every color k the total count at the vertex,
/// (edges colored k) + fixed_counts[k] + [parent_color == k], must land in
/// {0, 1, alphas[k]}. Returns one color per slot or nullopt.
std::optional<std::vector<std::uint32_t>> vertex_feasible(
    std::span<const ColorMask> forbidden, std::span<const std::size_t> fixed_counts,
    std::optional<std::uint32_t> parent_color, std::span<const std::size_t> alphas);

/// c-color generalization of alg1 with per-edge forbidden color sets.
TreeDecision alg2(const RootedTree& t, std::span<const std::size_t> alphas);

/// Is wr(T) <= 2? Tries alg1 over candidate_pairs rooted at vertex 0.
TreeDecision wr2_tree(const Graph& t);

/// Is wr(T) <= c? Tries alg2 over nondecreasing c-tuples of 1..max degree.
TreeDecision wrc_tree(const Graph& t, std::size_t c);

struct BinarySplit {
  // Nonempty label classes, in ascending label order.
  EdgePartition partition;
  // Raw label per edge before empty classes are dropped.
  std::vector<std::size_t> labels;
  // Labels used by odd-depth vertices are shifted by this amount.
  std::size_t offset = 0;
};

/// Splits a tree's edges into (1, 2^t)-forests by the binary expansion of
/// each vertex's downward edge count.
BinarySplit alg3(const Graph& t);

/// Exactly ceil(max_degree / 2) parts, each with degrees in {1, 2}.
EdgePartition sr_tree(const Graph& t);

}  // namespace edgepart
