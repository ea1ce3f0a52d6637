#include "edgepart/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "edgepart/error.hpp"
#include "graph_io.hpp"

namespace edgepart {

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), incidence_(n) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= n_ || ed.v >= n_) {
      throw ParameterError("edge " + std::to_string(e) + " has an endpoint outside 0.." +
                           std::to_string(n_ == 0 ? 0 : n_ - 1));
    }
    if (ed.u == ed.v) throw ParameterError("edge " + std::to_string(e) + " is a self-loop");
    incidence_[ed.u].push_back(e);
    incidence_[ed.v].push_back(e);
  }
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = incidence_[v].size();
  return d;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& inc : incidence_) best = std::max(best, inc.size());
  return best;
}

std::size_t Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  std::size_t best = incidence_[0].size();
  for (const auto& inc : incidence_) best = std::min(best, inc.size());
  return best;
}

bool Graph::is_simple() const {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : edges_) {
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
  }
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& inc = incidence_.at(u);
  return std::any_of(inc.begin(), inc.end(), [&](EdgeId e) { return other(e, u) == v; });
}

DegreeSet::DegreeSet(std::vector<std::size_t> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool DegreeSet::contains(std::size_t d) const {
  return std::binary_search(values_.begin(), values_.end(), d);
}

DegreeSet degree_set(const Graph& g) {
  if (g.num_vertices() == 0) throw DomainError("degree set of the empty graph is undefined");
  return DegreeSet(g.degrees());
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  constexpr std::uint8_t unseen = 2;
  std::vector<std::uint8_t> side(g.num_vertices(), unseen);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (side[s] != unseen) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(u)) {
        Vertex w = g.other(e, u);
        if (side[w] == unseen) {
          side[w] = side[u] ^ 1;
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
  constexpr auto unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.num_vertices(), unseen);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != unseen) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(u)) {
        Vertex w = g.other(e, u);
        if (comp[w] == unseen) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

GraphClass classify(const Graph& g) {
  GraphClass c;
  std::size_t components = 0;
  connected_components(g, &components);
  c.is_connected = components == 1;
  c.is_tree = c.is_connected && g.num_edges() + 1 == g.num_vertices();
  c.is_bipartite = bipartition(g).has_value();
  return c;
}

Graph complement(const Graph& g) {
  if (!g.is_simple()) throw DomainError("complement requires a simple graph");
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> adj(n * n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u * n + e.v] = 1;
    adj[e.v * n + e.u] = 1;
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!adj[u * n + v]) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

// ---------------------------------------------------------------------------

Graph complete(std::size_t n) {
  if (n < 1) throw ParameterError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw ParameterError("complete bipartite graph needs both sides >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (std::size_t j = 0; j < b; ++j) edges.push_back({u, static_cast<Vertex>(a + j)});
  return Graph(a + b, std::move(edges));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw ParameterError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, std::move(edges));
}

Graph path(std::size_t n) {
  if (n < 2) throw ParameterError("path needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph star(std::size_t k) {
  if (k < 1) throw ParameterError("star needs k >= 1 leaves");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= k; ++i) edges.push_back({0, i});
  return Graph(k + 1, std::move(edges));
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t offset = 0;
  std::vector<Edge> edges;
  for (const Graph& g : parts) {
    for (const Edge& e : g.edges()) {
      edges.push_back({static_cast<Vertex>(e.u + offset), static_cast<Vertex>(e.v + offset)});
    }
    offset += g.num_vertices();
  }
  return Graph(offset, std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (Vertex i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  for (Vertex i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
  return Graph(10, std::move(edges));
}

namespace {

void expect_params(std::span<const std::size_t> params, std::size_t count, const char* kind) {
  if (params.size() != count) {
    throw ParameterError(std::string(kind) + " takes " + std::to_string(count) +
                         " parameter(s), got " + std::to_string(params.size()));
  }
}

}  // namespace

Graph build_named(NamedKind kind, std::span<const std::size_t> params) {
  switch (kind) {
    case NamedKind::complete:
      expect_params(params, 1, "complete");
      return complete(params[0]);
    case NamedKind::complete_bipartite:
      expect_params(params, 2, "complete_bipartite");
      return complete_bipartite(params[0], params[1]);
    case NamedKind::cycle:
      expect_params(params, 1, "cycle");
      return cycle(params[0]);
    case NamedKind::path:
      expect_params(params, 1, "path");
      return path(params[0]);
    case NamedKind::star:
      expect_params(params, 1, "star");
      return star(params[0]);
    case NamedKind::disjoint_union:
      throw ParameterError("disjoint_union takes graph operands, not integers");
  }
  throw ParameterError("unknown graph kind");
}

Graph build_named(NamedKind kind, std::span<const Graph> operands) {
  if (kind != NamedKind::disjoint_union) {
    throw ParameterError("only disjoint_union takes graph operands");
  }
  return disjoint_union(operands);
}

// ---------------------------------------------------------------------------

RootedTree bfs_root(const Graph& g, Vertex root) {
  const std::size_t n = g.num_vertices();
  if (root >= n) throw ParameterError("root vertex out of range");
  if (!classify(g).is_tree) throw DomainError("bfs_root requires a tree");

  RootedTree t;
  t.root = root;
  t.num_edges = g.num_edges();
  t.parent.assign(n, std::nullopt);
  t.parent_edge.assign(n, std::nullopt);
  t.depth.assign(n, 0);
  t.child_edges.assign(n, {});
  t.order.reserve(n);

  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Vertex> layer{root};
  seen[root] = 1;
  std::size_t depth = 0;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    std::vector<Vertex> next;
    for (Vertex u : layer) {
      t.depth[u] = depth;
      t.order.push_back(u);
      for (EdgeId e : g.incident(u)) {
        Vertex w = g.other(e, u);
        if (seen[w]) continue;
        seen[w] = 1;
        t.parent[w] = u;
        t.parent_edge[w] = e;
        t.child_edges[u].push_back(e);
        next.push_back(w);
      }
    }
    layer = std::move(next);
    ++depth;
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace detail {

Graph parse_graph_prefix(std::span<const text::Line> lines, std::size_t& consumed) {
  if (lines.empty()) throw ParseError(1, "missing header line 'n m'");
  const text::Line& header = lines[0];
  if (header.tokens.size() != 2) throw ParseError(header.number, "header must be 'n m'");
  const auto n = text::to_uint(header.tokens[0], header.number);
  const auto m = text::to_uint(header.tokens[1], header.number);
  if (lines.size() < m + 1) {
    const std::size_t last = lines.back().number;
    throw ParseError(last, "expected " + std::to_string(m) + " edge lines, found " +
                               std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const text::Line& line = lines[i];
    if (line.tokens.size() != 2) throw ParseError(line.number, "edge line must be 'u v'");
    const auto u = text::to_uint(line.tokens[0], line.number);
    const auto v = text::to_uint(line.tokens[1], line.number);
    if (u >= n || v >= n) throw ParseError(line.number, "vertex out of range");
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  consumed = m + 1;
  return Graph(n, std::move(edges));
}

}  // namespace detail

Graph parse_graph(std::string_view text) {
  const auto lines = text::tokenize(text);
  std::size_t consumed = 0;
  Graph g = detail::parse_graph_prefix(lines, consumed);
  if (consumed != lines.size()) {
    throw ParseError(lines[consumed].number, "unexpected content after the edge list");
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace edgepart
