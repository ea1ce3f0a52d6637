#include "edgepart/oracles.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "edgepart/error.hpp"

namespace edgepart {

namespace {

// Restricted-growth enumeration of edge -> part maps (edge 0 in part 0, part
// ids in first-use order), pruned on vertices whose degrees are final.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, Family f) : g_(g), family_(f) {
    last_edge_.assign(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      last_edge_[g.edge(e).u] = e;
      last_edge_[g.edge(e).v] = e;
    }
  }

  std::optional<EdgePartition> run(std::size_t max_parts) {
    k_ = max_parts;
    deg_.assign(k_ * g_.num_vertices(), 0);
    assign_.assign(g_.num_edges(), 0);
    found_.reset();
    descend(0, 0);
    return found_;
  }

 private:
  std::size_t& deg(PartId p, Vertex v) { return deg_[p * g_.num_vertices() + v]; }

  bool closed(Vertex v, EdgeId idx) const { return last_edge_[v] <= idx; }

  bool descend(EdgeId idx, std::size_t used) {
    if (idx == g_.num_edges()) {
      EdgePartition p(used, assign_);
      if (!verify_partition(g_, p, family_)) return false;
      found_ = std::move(p);
      return true;
    }
    const Edge& e = g_.edge(idx);
    const std::size_t limit = std::min(used + 1, k_);
    for (PartId p = 0; p < limit; ++p) {
      assign_[idx] = p;
      ++deg(p, e.u);
      ++deg(p, e.v);
      const bool ok = consistent(idx, p) && descend(idx + 1, std::max<std::size_t>(used, p + 1));
      --deg(p, e.u);
      --deg(p, e.v);
      if (ok) return true;
    }
    return false;
  }

  // Can part p, with edges 0..idx assigned, still extend to a family member?
  bool consistent(EdgeId idx, PartId p) {
    const std::size_t n = g_.num_vertices();
    switch (family_) {
      case Family::weakly_semiregular:
      case Family::semiregular:
      case Family::regular: {
        std::size_t values[3];
        std::size_t distinct = 0;
        std::size_t lo = SIZE_MAX, hi = 0, open_hi = 0;
        for (Vertex v = 0; v < n; ++v) {
          const std::size_t d = deg(p, v);
          if (d == 0) continue;
          if (!closed(v, idx)) {
            open_hi = std::max(open_hi, d);
            continue;
          }
          lo = std::min(lo, d);
          hi = std::max(hi, d);
          if (std::find(values, values + distinct, d) == values + distinct) {
            if (distinct == 2) return false;  // only reachable for weakly semiregular
            values[distinct++] = d;
          }
        }
        if (distinct == 0) return true;
        if (family_ == Family::weakly_semiregular) return !(distinct == 2 && open_hi > hi);
        if (family_ == Family::semiregular) return hi - lo <= 1 && open_hi <= lo + 1;
        return distinct == 1 && open_hi <= hi;
      }
      case Family::locally_irregular: {
        for (Vertex w : {g_.edge(idx).u, g_.edge(idx).v}) {
          if (!closed(w, idx)) continue;
          for (EdgeId e : g_.incident(w)) {
            if (e > idx || assign_[e] != p) continue;
            const Vertex z = g_.other(e, w);
            if (closed(z, idx) && deg(p, z) == deg(p, w)) return false;
          }
        }
        return true;
      }
      default:
        return true;
    }
  }

  const Graph& g_;
  Family family_;
  std::size_t k_ = 0;
  std::vector<EdgeId> last_edge_;
  std::vector<std::size_t> deg_;
  std::vector<PartId> assign_;
  std::optional<EdgePartition> found_;
};

}  // namespace

OracleResult oracle_min_parts(const Graph& g, Family f, const OracleBudget& budget) {
  if (budget.max_edges > kOracleEdgeGuard) {
    throw ResourceError("oracle budget max_edges exceeds the hard guard of " +
                        std::to_string(kOracleEdgeGuard));
  }
  if (g.num_edges() > budget.max_edges) {
    throw ResourceError("graph has " + std::to_string(g.num_edges()) +
                        " edges; oracle budget allows " + std::to_string(budget.max_edges));
  }
  OracleResult result;
  if (g.num_edges() == 0) {
    result.min_parts = 0;
    result.witness = EdgePartition(0, {});
    return result;
  }
  PartitionSearch search(g, f);
  for (std::size_t k = 1; k <= budget.max_parts; ++k) {
    if (auto witness = search.run(k)) {
      result.min_parts = witness->num_parts();
      result.witness = std::move(witness);
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

Graph tree_from_prufer(std::span<const Vertex> seq, std::size_t n) {
  if (n < 2) {
    if (!seq.empty()) throw ParameterError("Prüfer sequence too long");
    return Graph(n);
  }
  if (seq.size() != n - 2) throw ParameterError("Prüfer sequence must have length n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) {
    if (v >= n) throw ParameterError("Prüfer entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (Vertex v : seq) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, v});
    if (--degree[v] == 1) leaves.insert(v);
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 9) throw ParameterError("labeled tree enumeration supports 1 <= n <= 9");
  if (n <= 2) {
    fn(n == 1 ? Graph(1) : path(2));
    return;
  }
  std::vector<Vertex> seq(n - 2, 0);
  for (;;) {
    fn(tree_from_prufer(seq, n));
    std::size_t i = 0;
    while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
    if (i == seq.size()) break;
    ++seq[i];
  }
}

std::vector<Graph> enumerate_trees(std::size_t n) {
  if (n > 8) throw ParameterError("materialized tree enumeration supports n <= 8");
  std::vector<Graph> out;
  for_each_labeled_tree(n, [&](const Graph& t) { out.push_back(t); });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Canonical string of the tree hanging from v (parent excluded).
std::string ahu(const Graph& t, Vertex v, std::optional<Vertex> parent) {
  std::vector<std::string> kids;
  for (EdgeId e : t.incident(v)) {
    const Vertex w = t.other(e, v);
    if (parent && w == *parent) continue;
    kids.push_back(ahu(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ')';
  return out;
}

std::string free_tree_key(const Graph& t) {
  const std::size_t n = t.num_vertices();
  if (n <= 2) return std::to_string(n);
  std::vector<std::size_t> degree = t.degrees();
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      degree[leaf] = 0;
      for (EdgeId e : t.incident(leaf)) {
        const Vertex w = t.other(e, leaf);
        if (degree[w] > 0 && --degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string key = ahu(t, c, std::nullopt);
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

struct RootedShape {
  std::size_t size;
  std::vector<std::size_t> children;  // indices into the shape list
};

}  // namespace

std::vector<Graph> enumerate_free_trees(std::size_t n) {
  if (n < 1 || n > 16) throw ParameterError("free tree enumeration supports 1 <= n <= 16");

  // Rooted shapes of every size below n, each isomorphism class once: a shape
  // is a root plus a non-increasing sequence of smaller shape indices.
  std::vector<RootedShape> shapes;
  std::vector<std::size_t> first_of_size(n + 2, 0);
  for (std::size_t s = 1; s <= n; ++s) {
    first_of_size[s] = shapes.size();
    const std::size_t existing = shapes.size();
    std::vector<std::size_t> picked;
    auto pick = [&](auto&& self, std::size_t remaining, std::size_t max_index) -> void {
      if (remaining == 0) {
        shapes.push_back({s, picked});
        return;
      }
      for (std::size_t i = max_index; i-- > 0;) {
        if (shapes[i].size > remaining) continue;
        picked.push_back(i);
        self(self, remaining - shapes[i].size, i + 1);
        picked.pop_back();
      }
    };
    pick(pick, s - 1, existing);
  }
  first_of_size[n + 1] = shapes.size();

  std::set<std::string> seen;
  std::vector<Graph> out;
  for (std::size_t idx = first_of_size[n]; idx < first_of_size[n + 1]; ++idx) {
    std::vector<Edge> edges;
    Vertex next = 1;
    auto build = [&](auto&& self, std::size_t shape, Vertex at) -> void {
      for (std::size_t child : shapes[shape].children) {
        const Vertex v = next++;
        edges.push_back({at, v});
        self(self, child, v);
      }
    };
    build(build, idx, 0);
    Graph t(n, std::move(edges));
    if (seen.insert(free_tree_key(t)).second) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace edgepart
