#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edgepart {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on vertices 0..n-1. Edge ids are stable indices
/// into the edge list. Self-loops are rejected; parallel edges are kept.
/// Immutable once constructed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, std::vector<Edge> edges = {});

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const& noexcept { return edges_; }
  // By value on temporaries, so `for (auto e : make_graph().edges())` is safe.
  std::vector<Edge> edges() && { return std::move(edges_); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  // Endpoint of e that is not v.
  Vertex other(EdgeId e, Vertex v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  /// Incident edge ids of v, ascending.
  std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(v); }

  std::size_t degree(Vertex v) const { return incidence_.at(v).size(); }
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;

  bool is_simple() const;
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Sorted distinct vertex degrees.
class DegreeSet {
 public:
  DegreeSet() = default;
  explicit DegreeSet(std::vector<std::size_t> values);

  std::span<const std::size_t> values() const& noexcept { return values_; }
  std::vector<std::size_t> values() && { return std::move(values_); }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  std::size_t max() const { return values_.back(); }
  std::size_t min() const { return values_.front(); }
  bool contains(std::size_t d) const;

  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

 private:
  std::vector<std::size_t> values_;
};

DegreeSet degree_set(const Graph& g);

struct GraphClass {
  bool is_tree = false;
  bool is_bipartite = false;
  bool is_connected = false;
};

GraphClass classify(const Graph& g);

// BFS 2-coloring; side[v] in {0,1}. Empty when g has an odd cycle.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);

// Component index per vertex, numbered by smallest member vertex.
std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);

Graph complement(const Graph& g);

// ---------------------------------------------------------------------------
// Named constructions. Vertex layouts are part of the contract because the
// reductions address ports by vertex id.

enum class NamedKind { complete, complete_bipartite, cycle, path, star, disjoint_union };

/// K_n on 0..n-1, edges in lexicographic order.
Graph complete(std::size_t n);
/// K_{a,b}: left side 0..a-1, right side a..a+b-1.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// C_n: edges (i, i+1 mod n).
Graph cycle(std::size_t n);
/// P_n with n vertices 0..n-1 in path order.
Graph path(std::size_t n);
/// K_{1,k}: center 0, leaves 1..k.
Graph star(std::size_t k);
/// Relabels operand i's vertices by the running vertex offset and
/// concatenates edge lists in operand order.
Graph disjoint_union(std::span<const Graph> parts);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen();

Graph build_named(NamedKind kind, std::span<const std::size_t> params);
Graph build_named(NamedKind kind, std::span<const Graph> operands);

// ---------------------------------------------------------------------------

/// BFS view of a tree. order lists vertices by nondecreasing depth, each
/// layer sorted by vertex id.
struct RootedTree {
  Vertex root = 0;
  std::size_t num_edges = 0;
  std::vector<std::optional<Vertex>> parent;
  std::vector<std::optional<EdgeId>> parent_edge;
  std::vector<std::size_t> depth;
  std::vector<Vertex> order;
  // Edges to children, ascending edge id.
  std::vector<std::vector<EdgeId>> child_edges;

  std::size_t num_vertices() const noexcept { return order.size(); }
};

RootedTree bfs_root(const Graph& g, Vertex root);

// ---------------------------------------------------------------------------
// Text formats.

/// Header "n m" then m lines "u v". Blank lines and "#" comments are ignored.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
/// Undirected DOT document `graph G { ... }`.
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace edgepart
