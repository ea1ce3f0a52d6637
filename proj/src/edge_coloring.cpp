#include "edgepart/edge_coloring.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "edgepart/error.hpp"

namespace edgepart {

namespace {

constexpr std::int64_t kNoEdge = -1;
constexpr auto kUncolored = static_cast<std::uint32_t>(-1);

// Per-vertex color -> edge table shared by the two colorers.
class ColorTable {
 public:
  ColorTable(const Graph& g, std::size_t palette)
      : g_(g), palette_(palette), at_(g.num_vertices() * palette, kNoEdge),
        color_(g.num_edges(), kUncolored) {}

  bool is_free(Vertex v, std::uint32_t c) const { return at_[v * palette_ + c] == kNoEdge; }
  std::int64_t edge_at(Vertex v, std::uint32_t c) const { return at_[v * palette_ + c]; }
  std::uint32_t color(EdgeId e) const { return color_[e]; }

  std::uint32_t first_free(Vertex v) const {
    for (std::uint32_t c = 0; c < palette_; ++c) {
      if (is_free(v, c)) return c;
    }
    throw std::logic_error("no free color at vertex " + std::to_string(v));
  }

  void set(EdgeId e, std::uint32_t c) {
    const Edge& ed = g_.edge(e);
    assert(is_free(ed.u, c) && is_free(ed.v, c));
    color_[e] = c;
    at_[ed.u * palette_ + c] = e;
    at_[ed.v * palette_ + c] = e;
  }

  void clear(EdgeId e) {
    const std::uint32_t c = color_[e];
    if (c == kUncolored) return;
    const Edge& ed = g_.edge(e);
    at_[ed.u * palette_ + c] = kNoEdge;
    at_[ed.v * palette_ + c] = kNoEdge;
    color_[e] = kUncolored;
  }

  // Swaps colors a and b along the maximal a/b path leaving `start` through
  // its a-colored edge.
  void flip_path(Vertex start, std::uint32_t a, std::uint32_t b) {
    std::vector<EdgeId> path;
    Vertex cur = start;
    std::uint32_t want = a;
    while (edge_at(cur, want) != kNoEdge) {
      const auto e = static_cast<EdgeId>(edge_at(cur, want));
      path.push_back(e);
      cur = g_.other(e, cur);
      want = want == a ? b : a;
    }
    std::vector<std::uint32_t> next(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) next[i] = color_[path[i]] == a ? b : a;
    for (EdgeId e : path) clear(e);
    for (std::size_t i = 0; i < path.size(); ++i) set(path[i], next[i]);
  }

  ProperEdgeColoring finish() const {
    ProperEdgeColoring out;
    out.colors = color_;
    for (std::uint32_t c : color_) out.num_colors = std::max<std::size_t>(out.num_colors, c + 1);
    return out;
  }

 private:
  const Graph& g_;
  std::size_t palette_;
  std::vector<std::int64_t> at_;
  std::vector<std::uint32_t> color_;
};

}  // namespace

bool is_proper(const Graph& g, const ProperEdgeColoring& c) {
  if (c.colors.size() != g.num_edges()) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<std::uint32_t> seen;
    for (EdgeId e : g.incident(v)) {
      if (c.colors[e] >= c.num_colors) return false;
      seen.push_back(c.colors[e]);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

ProperEdgeColoring bipartite_color(const Graph& g) {
  if (!bipartition(g)) throw DomainError("bipartite_color requires a bipartite graph");
  const std::size_t palette = g.max_degree();
  ColorTable table(g, palette);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const std::uint32_t a = table.first_free(ed.u);
    if (!table.is_free(ed.v, a)) {
      // b is free at v; the a/b path from v cannot reach u in a bipartite graph.
      const std::uint32_t b = table.first_free(ed.v);
      table.flip_path(ed.v, a, b);
    }
    table.set(e, a);
  }
  ProperEdgeColoring out = table.finish();
  out.num_colors = palette;
  return out;
}

ProperEdgeColoring vizing(const Graph& g) {
  if (!g.is_simple()) throw DomainError("vizing requires a simple graph");
  const std::size_t palette = g.max_degree() + 1;
  ColorTable table(g, palette);

  std::vector<Vertex> fan;
  std::vector<EdgeId> fan_edge;
  std::vector<std::uint8_t> in_fan(g.num_vertices(), 0);

  for (EdgeId e0 = 0; e0 < g.num_edges(); ++e0) {
    const Vertex x = g.edge(e0).u;
    fan.assign(1, g.edge(e0).v);
    fan_edge.assign(1, e0);
    in_fan[fan[0]] = 1;

    // Maximal fan: next neighbor's edge color must be free on the last member.
    for (bool extended = true; extended;) {
      extended = false;
      for (EdgeId e : g.incident(x)) {
        const Vertex w = g.other(e, x);
        const std::uint32_t c = table.color(e);
        if (c == kUncolored || in_fan[w] || !table.is_free(fan.back(), c)) continue;
        fan.push_back(w);
        fan_edge.push_back(e);
        in_fan[w] = 1;
        extended = true;
      }
    }

    const std::uint32_t c = table.first_free(x);
    const std::uint32_t d = table.first_free(fan.back());
    if (c != d) table.flip_path(x, d, c);

    // First member w with d free such that fan[0..w] is still a fan.
    std::size_t w = 0;
    for (;; ++w) {
      if (w == fan.size()) throw std::logic_error("fan rotation found no target vertex");
      if (w > 0 && !table.is_free(fan[w - 1], table.color(fan_edge[w]))) {
        throw std::logic_error("fan prefix broken before a target vertex was found");
      }
      if (table.is_free(fan[w], d)) break;
    }

    std::vector<std::uint32_t> shifted(w);
    for (std::size_t i = 0; i < w; ++i) shifted[i] = table.color(fan_edge[i + 1]);
    for (std::size_t i = 1; i <= w; ++i) table.clear(fan_edge[i]);
    for (std::size_t i = 0; i < w; ++i) table.set(fan_edge[i], shifted[i]);
    table.set(fan_edge[w], d);

    for (Vertex v : fan) in_fan[v] = 0;
  }
  return table.finish();
}

// ---------------------------------------------------------------------------

namespace {

// Perfect matchings of a k-regular bipartite multigraph, peeled one at a time.
// arcs[i] = (left, right). Returns k lists of arc indices.
std::vector<std::vector<std::size_t>> regular_bipartite_matchings(
    std::size_t side, const std::vector<std::pair<Vertex, Vertex>>& arcs, std::size_t k) {
  std::vector<std::uint8_t> removed(arcs.size(), 0);
  std::vector<std::vector<std::size_t>> out_arcs(side);
  for (std::size_t i = 0; i < arcs.size(); ++i) out_arcs[arcs[i].first].push_back(i);

  std::vector<std::vector<std::size_t>> matchings;
  std::vector<std::int64_t> match_right(side);  // right vertex -> arc
  std::vector<std::uint8_t> visited(side);

  auto augment = [&](auto&& self, Vertex left) -> bool {
    for (std::size_t a : out_arcs[left]) {
      if (removed[a]) continue;
      const Vertex right = arcs[a].second;
      if (visited[right]) continue;
      visited[right] = 1;
      if (match_right[right] == kNoEdge ||
          self(self, arcs[static_cast<std::size_t>(match_right[right])].first)) {
        match_right[right] = static_cast<std::int64_t>(a);
        return true;
      }
    }
    return false;
  };

  for (std::size_t round = 0; round < k; ++round) {
    std::fill(match_right.begin(), match_right.end(), kNoEdge);
    for (Vertex left = 0; left < side; ++left) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(augment, left)) throw std::logic_error("regular bipartite graph lacks a perfect matching");
    }
    std::vector<std::size_t> matching;
    for (Vertex right = 0; right < side; ++right) {
      const auto a = static_cast<std::size_t>(match_right[right]);
      matching.push_back(a);
      removed[a] = 1;
    }
    std::sort(matching.begin(), matching.end());
    matchings.push_back(std::move(matching));
  }
  return matchings;
}

}  // namespace

TwoFactorization two_factorize(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw DomainError("two_factorize needs at least one vertex");
  const std::size_t deg = g.degree(0);
  if (deg == 0 || deg % 2 != 0) throw DomainError("two_factorize needs a 2k-regular graph, k >= 1");
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != deg) throw DomainError("two_factorize needs a regular graph");
  }
  const std::size_t k = deg / 2;

  // Hierholzer per component; each edge is oriented in traversal direction,
  // which balances in- and out-degree at every vertex.
  std::vector<std::pair<Vertex, Vertex>> arcs(g.num_edges());
  std::vector<std::uint8_t> used(g.num_edges(), 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (cursor[s] == g.degree(s)) continue;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      const auto inc = g.incident(v);
      while (cursor[v] < inc.size() && used[inc[cursor[v]]]) ++cursor[v];
      if (cursor[v] == inc.size()) {
        stack.pop_back();
        continue;
      }
      const EdgeId e = inc[cursor[v]];
      used[e] = 1;
      const Vertex w = g.other(e, v);
      arcs[e] = {v, w};
      stack.push_back(w);
    }
  }

  TwoFactorization out;
  for (auto& matching : regular_bipartite_matchings(n, arcs, k)) {
    out.factors.emplace_back(matching.begin(), matching.end());
  }
  return out;
}

FourRegularHost four_regularize(const Graph& g) {
  if (g.num_vertices() == 0 || g.min_degree() < 1) {
    throw DomainError("four_regularize needs minimum degree >= 1");
  }
  if (g.max_degree() > 4) throw DomainError("four_regularize needs maximum degree <= 4");

  FourRegularHost out;
  out.host = g;
  out.embedding.resize(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) out.embedding[e] = e;

  while (out.host.min_degree() < 4) {
    const Graph& cur = out.host;
    const std::size_t n = cur.num_vertices();
    std::vector<Edge> edges(cur.edges().begin(), cur.edges().end());
    for (const Edge& e : cur.edges()) {
      edges.push_back({static_cast<Vertex>(e.u + n), static_cast<Vertex>(e.v + n)});
    }
    for (Vertex v = 0; v < n; ++v) {
      if (cur.degree(v) < 4) edges.push_back({v, static_cast<Vertex>(v + n)});
    }
    out.host = Graph(2 * n, std::move(edges));
    ++out.doublings;
    assert(out.doublings <= 3);
  }
  return out;
}

EdgePartition wr2_deg4(const Graph& g) {
  const FourRegularHost reg = four_regularize(g);
  const TwoFactorization tf = two_factorize(reg.host);
  std::vector<PartId> host_part(reg.host.num_edges(), 0);
  for (PartId i = 0; i < tf.factors.size(); ++i) {
    for (EdgeId e : tf.factors[i]) host_part[e] = i;
  }
  std::vector<PartId> part(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) part[e] = host_part[reg.embedding[e]];
  return EdgePartition(2, std::move(part));
}

EdgePartition sr_general(const Graph& g) {
  if (g.num_edges() == 0) throw DomainError("sr_general needs at least one edge");
  const ProperEdgeColoring col = vizing(g);
  const std::size_t half = (col.num_colors + 1) / 2;
  std::vector<PartId> part(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const std::uint32_t c = col.colors[e];
    part[e] = static_cast<PartId>(c < half ? c : c - half);
  }
  return EdgePartition(half, std::move(part));
}

}  // namespace edgepart
