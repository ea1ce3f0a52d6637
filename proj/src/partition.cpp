#include "edgepart/partition.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "edgepart/error.hpp"
#include "text.hpp"

namespace edgepart {

EdgePartition::EdgePartition(std::size_t k, std::vector<PartId> part)
    : k_(k), part_(std::move(part)) {
  for (EdgeId e = 0; e < part_.size(); ++e) {
    if (part_[e] >= k_) {
      throw ParameterError("edge " + std::to_string(e) + " assigned to part " +
                           std::to_string(part_[e]) + " but k = " + std::to_string(k_));
    }
  }
}

std::vector<std::size_t> EdgePartition::part_sizes() const {
  std::vector<std::size_t> sizes(k_, 0);
  for (PartId p : part_) ++sizes[p];
  return sizes;
}

std::size_t EdgePartition::num_nonempty() const {
  const auto sizes = part_sizes();
  return static_cast<std::size_t>(
      std::count_if(sizes.begin(), sizes.end(), [](std::size_t s) { return s > 0; }));
}

EdgePartition EdgePartition::compacted() const {
  const auto sizes = part_sizes();
  std::vector<PartId> remap(k_, 0);
  PartId next = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    if (sizes[i] > 0) remap[i] = next++;
  }
  std::vector<PartId> part(part_.size());
  for (std::size_t e = 0; e < part_.size(); ++e) part[e] = remap[part_[e]];
  return EdgePartition(next, std::move(part));
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::weakly_semiregular, "weakly-semiregular"},
    {Family::semiregular, "semiregular"},
    {Family::regular, "regular"},
    {Family::locally_regular, "locally-regular"},
    {Family::locally_irregular, "locally-irregular"},
    {Family::regular_or_locally_irregular, "regular-or-locally-irregular"},
    {Family::irregular_or_weakly_semiregular, "irregular-or-weakly-semiregular"},
}};

bool components_regular(const Graph& g) {
  std::size_t count = 0;
  const auto comp = connected_components(g, &count);
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> deg(count, unset);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::size_t d = g.degree(v);
    if (d == 0) continue;
    if (deg[comp[v]] == unset) {
      deg[comp[v]] = d;
    } else if (deg[comp[v]] != d) {
      return false;
    }
  }
  return true;
}

bool locally_irregular(const Graph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return g.degree(e.u) != g.degree(e.v); });
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& [family, n] : kFamilyNames) {
    if (n == name) return family;
  }
  return std::nullopt;
}

Graph part_subgraph(const Graph& g, const EdgePartition& p, PartId i) {
  if (i >= p.num_parts()) throw ParameterError("part id out of range");
  if (p.num_edges() != g.num_edges()) {
    throw ParameterError("partition covers " + std::to_string(p.num_edges()) +
                         " edges but the graph has " + std::to_string(g.num_edges()));
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (p.part_of(e) == i) edges.push_back(g.edge(e));
  }
  return Graph(g.num_vertices(), std::move(edges));
}

DegreeSet incident_degree_set(const Graph& g) {
  std::vector<std::size_t> degs;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) degs.push_back(g.degree(v));
  }
  return DegreeSet(std::move(degs));
}

bool is_family(const Graph& g, Family f) {
  if (g.num_edges() == 0) return true;
  const DegreeSet d = incident_degree_set(g);
  switch (f) {
    case Family::weakly_semiregular:
      return d.size() <= 2;
    case Family::semiregular:
      return d.max() - d.min() <= 1;
    case Family::regular:
      return d.size() == 1;
    case Family::locally_regular:
      return components_regular(g);
    case Family::locally_irregular:
      return locally_irregular(g);
    case Family::regular_or_locally_irregular:
      return d.size() == 1 || locally_irregular(g);
    case Family::irregular_or_weakly_semiregular:
      return d.size() <= 2 || locally_irregular(g);
  }
  return false;
}

bool verify_partition(const Graph& g, const EdgePartition& p, Family f) {
  if (p.num_edges() != g.num_edges()) {
    throw ParameterError("partition covers " + std::to_string(p.num_edges()) +
                         " edges but the graph has " + std::to_string(g.num_edges()));
  }
  for (PartId i = 0; i < p.num_parts(); ++i) {
    if (!is_family(part_subgraph(g, p, i), f)) return false;
  }
  return true;
}

std::size_t wr_lower_bound(const Graph& g, bool loose) {
  if (g.num_vertices() == 0 || g.min_degree() == 0) {
    throw DomainError("wr lower bound needs every vertex to have degree >= 1");
  }
  const std::size_t size = degree_set(g).size();
  std::size_t k = 1;
  std::size_t power = 3;
  while ((loose ? power : power - 1) < size) {
    ++k;
    power *= 3;
  }
  return k;
}

EdgePartition parse_partition(std::string_view text) {
  const auto lines = text::tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing header line 'k m'");
  const auto& header = lines[0];
  if (header.tokens.size() != 2) throw ParseError(header.number, "header must be 'k m'");
  const auto k = text::to_uint(header.tokens[0], header.number);
  const auto m = text::to_uint(header.tokens[1], header.number);
  if (lines.size() != m + 1) {
    throw ParseError(lines.back().number, "expected " + std::to_string(m) +
                                              " assignment lines, found " +
                                              std::to_string(lines.size() - 1));
  }
  constexpr auto unset = static_cast<PartId>(-1);
  std::vector<PartId> part(m, unset);
  for (std::size_t i = 1; i <= m; ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 2) throw ParseError(line.number, "line must be 'edge_id part_id'");
    const auto e = text::to_uint(line.tokens[0], line.number);
    const auto pid = text::to_uint(line.tokens[1], line.number);
    if (e >= m) throw ParseError(line.number, "edge id out of range");
    if (pid >= k) throw ParseError(line.number, "part id out of range");
    if (part[e] != unset) throw ParseError(line.number, "edge " + std::to_string(e) + " assigned twice");
    part[e] = static_cast<PartId>(pid);
  }
  return EdgePartition(k, std::move(part));
}

std::string serialize_partition(const EdgePartition& p) {
  std::ostringstream out;
  out << p.num_parts() << ' ' << p.num_edges() << '\n';
  for (EdgeId e = 0; e < p.num_edges(); ++e) out << e << ' ' << p.part_of(e) << '\n';
  return out.str();
}

}  // namespace edgepart
