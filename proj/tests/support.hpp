#pragma once

// Test-side reference checks. Deliberately written without calling the
// library's verifiers so that they can catch the library's mistakes.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "edgepart/graph.hpp"
#include "edgepart/partition.hpp"

namespace ref {

using edgepart::Edge;
using edgepart::Graph;
using edgepart::Vertex;

// Degrees of the vertices touched by the selected edges.
inline std::map<Vertex, std::size_t> degrees(const Graph& g, const std::vector<std::size_t>& edge_ids) {
  std::map<Vertex, std::size_t> deg;
  for (auto e : edge_ids) {
    ++deg[g.edges()[e].u];
    ++deg[g.edges()[e].v];
  }
  return deg;
}

inline std::set<std::size_t> degree_values(const std::map<Vertex, std::size_t>& deg) {
  std::set<std::size_t> out;
  for (const auto& [v, d] : deg) out.insert(d);
  return out;
}

enum class Kind { ws, sr, reg, locreg, lirr, reg_or_lirr, lirr_or_ws };

// Membership of the edge-induced subgraph on edge_ids.
inline bool member(const Graph& g, const std::vector<std::size_t>& edge_ids, Kind kind) {
  if (edge_ids.empty()) return true;
  const auto deg = degrees(g, edge_ids);
  const auto vals = degree_values(deg);
  const bool ws = vals.size() <= 2;
  const bool sr = *vals.rbegin() - *vals.begin() <= 1;
  const bool reg = vals.size() == 1;
  bool lirr = true;
  for (auto e : edge_ids) lirr = lirr && deg.at(g.edges()[e].u) != deg.at(g.edges()[e].v);
  switch (kind) {
    case Kind::ws: return ws;
    case Kind::sr: return sr;
    case Kind::reg: return reg;
    case Kind::lirr: return lirr;
    case Kind::reg_or_lirr: return reg || lirr;
    case Kind::lirr_or_ws: return lirr || ws;
    case Kind::locreg: {
      // Union-find over touched vertices; each component must be regular.
      std::map<Vertex, Vertex> parent;
      std::function<Vertex(Vertex)> find = [&](Vertex x) {
        if (!parent.count(x)) parent[x] = x;
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      for (auto e : edge_ids) parent[find(g.edges()[e].u)] = find(g.edges()[e].v);
      std::map<Vertex, std::size_t> comp_deg;
      for (const auto& [v, d] : deg) {
        auto [it, fresh] = comp_deg.emplace(find(v), d);
        if (!fresh && it->second != d) return false;
      }
      return true;
    }
  }
  return false;
}

inline std::vector<std::vector<std::size_t>> split(std::size_t k, const std::vector<std::uint32_t>& part) {
  std::vector<std::vector<std::size_t>> out(k);
  for (std::size_t e = 0; e < part.size(); ++e) out[part[e]].push_back(e);
  return out;
}

inline bool all_members(const Graph& g, std::size_t k, const std::vector<std::uint32_t>& part, Kind kind) {
  for (const auto& ids : split(k, part)) {
    if (!member(g, ids, kind)) return false;
  }
  return true;
}

// Plain k^m enumeration: is there an assignment into k parts (some possibly
// empty) with every part a member? Only for small m.
inline bool splittable(const Graph& g, std::size_t k, Kind kind) {
  const std::size_t m = g.num_edges();
  std::vector<std::uint32_t> part(m, 0);
  while (true) {
    if (all_members(g, k, part, kind)) return true;
    std::size_t i = 0;
    while (i < m && ++part[i] == k) part[i++] = 0;
    if (i == m) return false;
  }
}

inline std::size_t min_parts(const Graph& g, Kind kind, std::size_t kmax = 6) {
  if (g.num_edges() == 0) return 0;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (splittable(g, k, kind)) return k;
  }
  return kmax + 1;
}

inline bool properly_colorable(const Graph& g, std::size_t k) {
  const std::size_t m = g.num_edges();
  std::vector<std::uint32_t> c(m, 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      for (std::size_t b = a + 1; b < m && ok; ++b) {
        const Edge& x = g.edges()[a];
        const Edge& y = g.edges()[b];
        const bool share = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
        ok = !(share && c[a] == c[b]);
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < m && ++c[i] == k) c[i++] = 0;
    if (i == m) return false;
  }
}

inline std::set<std::pair<Vertex, Vertex>> edge_set(const Graph& g) {
  std::set<std::pair<Vertex, Vertex>> s;
  for (const Edge& e : g.edges()) s.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  return s;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const auto target = edge_set(b);
  std::vector<Vertex> perm(a.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::set<std::pair<Vertex, Vertex>> mapped;
    for (const Edge& e : a.edges()) {
      mapped.emplace(std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v]));
    }
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---------------------------------------------------------------------------
// Random instances.

// Random recursive tree; with probability hub_bias a new vertex attaches to
// one of a few hubs, which produces large maximum degrees.
inline Graph random_tree(std::mt19937_64& rng, std::size_t n, double hub_bias = 0.3) {
  std::vector<Edge> edges;
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Vertex v = 1; v < n; ++v) {
    Vertex p;
    if (coin(rng) < hub_bias) {
      p = std::uniform_int_distribution<Vertex>(0, std::min<Vertex>(v - 1, 2))(rng);
    } else {
      p = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    }
    edges.push_back({label[p], label[v]});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, std::move(edges));
}

// Simple graph with max degree <= max_deg and min degree >= 1; n >= 2.
inline Graph random_bounded_graph(std::mt19937_64& rng, std::size_t n, std::size_t max_deg) {
  std::vector<std::size_t> deg(n, 0);
  std::set<std::pair<Vertex, Vertex>> present;
  std::vector<Edge> edges;
  auto add = [&](Vertex a, Vertex b) {
    if (a == b || deg[a] >= max_deg || deg[b] >= max_deg) return false;
    if (!present.emplace(std::min(a, b), std::max(a, b)).second) return false;
    ++deg[a];
    ++deg[b];
    edges.push_back({a, b});
    return true;
  };
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i + 1 < n; i += 2) add(order[i], order[i + 1]);
  if (n % 2 == 1) add(order[n - 1], order[0]);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  const std::size_t attempts = std::uniform_int_distribution<std::size_t>(0, 3 * n)(rng);
  for (std::size_t t = 0; t < attempts; ++t) add(pick(rng), pick(rng));
  return Graph(n, std::move(edges));
}

inline Graph random_simple_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, std::move(edges));
}

inline std::size_t floor_log2(std::size_t x) {
  std::size_t r = 0;
  while (x >>= 1) ++r;
  return r;
}

}  // namespace ref

namespace ref {

// Every labeled simple 3-regular graph on n vertices, each exactly once.
inline void for_each_cubic_graph(std::size_t n, const std::function<void(const Graph&)>& fn) {
  std::vector<std::size_t> deg(n, 0);
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  std::vector<Edge> edges;
  std::function<void()> rec = [&]() {
    std::size_t v = 0;
    while (v < n && deg[v] == 3) ++v;
    if (v == n) {
      fn(Graph(n, edges));
      return;
    }
    const std::size_t need = 3 - deg[v];
    std::vector<Vertex> cand;
    for (Vertex w = static_cast<Vertex>(v + 1); w < n; ++w) {
      if (deg[w] < 3 && !adj[v][w]) cand.push_back(w);
    }
    if (cand.size() < need) return;
    std::vector<std::uint8_t> pick(cand.size(), 0);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(need), pick.end(), 1);
    do {
      for (std::size_t i = 0; i < cand.size(); ++i) {
        if (!pick[i]) continue;
        const Vertex w = cand[i];
        adj[v][w] = adj[w][v] = 1;
        ++deg[v];
        ++deg[w];
        edges.push_back({static_cast<Vertex>(v), w});
      }
      rec();
      for (std::size_t i = 0; i < cand.size(); ++i) {
        if (!pick[i]) continue;
        const Vertex w = cand[i];
        adj[v][w] = adj[w][v] = 0;
        --deg[v];
        --deg[w];
        edges.pop_back();
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  };
  rec();
}

}  // namespace ref
