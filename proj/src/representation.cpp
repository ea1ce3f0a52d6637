#include "edgepart/representation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "edgepart/edge_coloring.hpp"
#include "edgepart/error.hpp"
#include "text.hpp"

namespace edgepart {

namespace {

std::vector<std::uint8_t> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> adj(n * n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u * n + e.v] = 1;
    adj[e.v * n + e.u] = 1;
  }
  return adj;
}

bool coprime_gap(std::uint64_t a, std::uint64_t b, std::uint64_t r) {
  const std::uint64_t gap = a > b ? a - b : b - a;
  return std::gcd(gap, r) == 1;
}

}  // namespace

bool verify_rep(const Graph& g, const Representation& rep) {
  const std::size_t n = g.num_vertices();
  if (rep.labels.size() != n) throw ParameterError("representation needs one label per vertex");
  for (auto l : rep.labels) {
    if (l >= rep.modulus) throw ParameterError("label " + std::to_string(l) + " not below modulus");
  }
  std::vector<std::uint64_t> sorted = rep.labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParameterError("representation labels are not injective");
  }
  const auto adj = adjacency_matrix(g);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coprime_gap(rep.labels[u], rep.labels[v], rep.modulus) != (adj[u * n + v] != 0)) {
        return false;
      }
    }
  }
  return true;
}

Graph graph_from_rep(const Representation& rep) {
  std::vector<Edge> edges;
  const std::size_t n = rep.labels.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coprime_gap(rep.labels[u], rep.labels[v], rep.modulus)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

// ---------------------------------------------------------------------------

namespace {

class RepSearch {
 public:
  RepSearch(const Graph& g, std::uint64_t r, bool pin)
      : n_(g.num_vertices()), r_(r), pin_(pin), adj_(adjacency_matrix(g)),
        coprime_(r), used_(r, 0), labels_(n_, 0) {
    for (std::uint64_t d = 0; d < r; ++d) coprime_[d] = std::gcd(d, r) == 1;
  }

  std::optional<std::vector<std::uint64_t>> run() {
    if (place(0)) return labels_;
    return std::nullopt;
  }

 private:
  bool place(std::size_t v) {
    if (v == n_) return true;
    const std::uint64_t hi = (pin_ && v == 0) ? 1 : r_;
    for (std::uint64_t l = 0; l < hi; ++l) {
      if (used_[l]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        const std::uint64_t gap = l > labels_[u] ? l - labels_[u] : labels_[u] - l;
        ok = coprime_[gap] == (adj_[u * n_ + v] != 0);
      }
      if (!ok) continue;
      labels_[v] = l;
      used_[l] = 1;
      if (place(v + 1)) return true;
      used_[l] = 0;
    }
    return false;
  }

  std::size_t n_;
  std::uint64_t r_;
  bool pin_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::uint8_t> coprime_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint64_t> labels_;
};

}  // namespace

std::optional<Representation> rep_search(const Graph& g, const RepSearchOptions& options) {
  if (g.num_vertices() > kRepSearchMaxVertices) {
    throw ResourceError("rep_search supports at most " + std::to_string(kRepSearchMaxVertices) +
                        " vertices");
  }
  if (options.r_max > kRepSearchMaxModulus) {
    throw ResourceError("rep_search r_max is capped at " + std::to_string(kRepSearchMaxModulus));
  }
  const std::uint64_t start = std::max<std::uint64_t>(1, g.num_vertices());
  for (std::uint64_t r = start; r <= options.r_max; ++r) {
    if (auto labels = RepSearch(g, r, options.pin_first_label).run()) {
      return Representation{r, std::move(*labels)};
    }
  }
  return std::nullopt;
}

std::uint64_t next_prime(std::uint64_t m) {
  for (std::uint64_t p = std::max<std::uint64_t>(m, 2);; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime) return p;
  }
}

// ---------------------------------------------------------------------------

namespace {

bool has_triangle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const auto adj = adjacency_matrix(g);
  for (const Edge& e : g.edges()) {
    for (Vertex w = 0; w < n; ++w) {
      if (adj[e.u * n + w] && adj[e.v * n + w]) return true;
    }
  }
  return false;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > UINT64_MAX) throw ResourceError("representation modulus overflows 64 bits");
  return static_cast<std::uint64_t>(p);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Inverse of a modulo a prime p (a not divisible by p).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

TfcRepresentation rep_construct_tfc(const Graph& g) {
  TfcRepresentation out;
  out.complement = complement(g);
  const Graph& comp = out.complement;
  const std::size_t n = g.num_vertices();
  if (n == 0) throw DomainError("rep_construct_tfc needs at least one vertex");
  const std::size_t r = comp.degree(0);
  for (Vertex v = 0; v < n; ++v) {
    if (comp.degree(v) != r) throw DomainError("complement is not regular");
  }
  if (has_triangle(comp)) throw DomainError("complement contains a triangle");

  PrimePlan& plan = out.plan;
  const ProperEdgeColoring col = vizing(comp);
  plan.matchings.assign(std::max<std::size_t>(col.num_colors, 1), {});
  for (EdgeId e = 0; e < comp.num_edges(); ++e) plan.matchings[col.colors[e]].push_back(e);

  plan.coordinates.assign(n, {});
  std::uint64_t previous = 1;
  for (const auto& matching : plan.matchings) {
    const std::uint64_t need = n - matching.size();
    const std::uint64_t p = next_prime(std::max(need, previous + 1));
    plan.primes.push_back(p);
    previous = p;

    std::vector<std::uint64_t> coord(n, 0);
    std::vector<std::uint8_t> matched(n, 0);
    std::uint64_t next = 0;
    for (EdgeId e : matching) {
      coord[comp.edge(e).u] = next;
      coord[comp.edge(e).v] = next;
      matched[comp.edge(e).u] = matched[comp.edge(e).v] = 1;
      ++next;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!matched[v]) coord[v] = next++;
    }
    if (next > p) throw std::logic_error("prime too small for its residue classes");
    for (Vertex v = 0; v < n; ++v) plan.coordinates[v].push_back(coord[v]);
  }

  // Chinese remainder combination.
  std::uint64_t modulus = 1;
  for (auto p : plan.primes) modulus = checked_mul(modulus, p);
  out.rep.modulus = modulus;
  out.rep.labels.assign(n, 0);
  for (std::size_t i = 0; i < plan.primes.size(); ++i) {
    const std::uint64_t p = plan.primes[i];
    const std::uint64_t rest = modulus / p;
    const std::uint64_t basis = mul_mod(rest, inverse_mod(rest % p, p), modulus);
    for (Vertex v = 0; v < n; ++v) {
      const std::uint64_t term = mul_mod(basis, plan.coordinates[v][i], modulus);
      out.rep.labels[v] = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(out.rep.labels[v]) + term) % modulus);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string serialize_rep(const Representation& rep, const std::vector<std::uint64_t>& primes) {
  std::ostringstream out;
  out << "r " << rep.modulus << '\n';
  if (!primes.empty()) {
    out << "primes";
    for (auto p : primes) out << ' ' << p;
    out << '\n';
  }
  out << "labels";
  for (auto l : rep.labels) out << ' ' << l;
  out << '\n';
  return out.str();
}

Representation parse_rep(std::string_view text) {
  Representation rep;
  bool have_r = false, have_labels = false;
  for (const auto& line : text::tokenize(text)) {
    const auto key = line.tokens[0];
    if (key == "r") {
      if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'r <modulus>'");
      rep.modulus = text::to_uint(line.tokens[1], line.number);
      have_r = true;
    } else if (key == "labels") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        rep.labels.push_back(text::to_uint(line.tokens[i], line.number));
      }
      have_labels = true;
    } else if (key != "primes") {
      throw ParseError(line.number, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_r || !have_labels) throw ParseError(1, "representation needs 'r' and 'labels' lines");
  return rep;
}

}  // namespace edgepart
