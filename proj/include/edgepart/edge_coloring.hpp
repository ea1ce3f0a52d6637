#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "edgepart/graph.hpp"
#include "edgepart/partition.hpp"

namespace edgepart {

struct ProperEdgeColoring {
  std::vector<std::uint32_t> colors;  // per edge
  std::size_t num_colors = 0;
};

/// Edges sharing an endpoint differ in color and every color is below
/// num_colors.
bool is_proper(const Graph& g, const ProperEdgeColoring& c);

/// Exactly max_degree colors for a bipartite (multi)graph, by swapping
/// two-colored alternating paths.
ProperEdgeColoring bipartite_color(const Graph& g);

/// Misra-Gries fan rotation: at most max_degree + 1 colors on a simple graph.
/// num_colors is the number of colors actually used.
ProperEdgeColoring vizing(const Graph& g);

struct TwoFactorization {
  // Edge ids per factor; every vertex has degree exactly 2 in each factor.
  std::vector<std::vector<EdgeId>> factors;
};

/// Splits a 2k-regular multigraph into k spanning 2-regular factors via an
/// Euler-circuit orientation and perfect matchings of the out/in graph.
TwoFactorization two_factorize(const Graph& g);

struct FourRegularHost {
  Graph host;
  // Input edge id -> host edge id (the copy-0 image).
  std::vector<EdgeId> embedding;
  std::size_t doublings = 0;
};

/// Doubles the graph and joins each vertex of degree < 4 to its twin until
/// the result is 4-regular.
FourRegularHost four_regularize(const Graph& g);

/// Two parts, each with degrees in {1, 2}, for max degree <= 4.
EdgePartition wr2_deg4(const Graph& g);

/// Pairs color i with color i + ceil(chi/2) of a Vizing coloring; at most
/// ceil((max_degree + 1) / 2) parts with degrees in {1, 2}.
EdgePartition sr_general(const Graph& g);

}  // namespace edgepart
