#include "edgepart/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "edgepart/error.hpp"
#include "graph_io.hpp"
#include "text.hpp"

namespace edgepart {

bool NaeFormula::is_cubic() const {
  std::vector<std::size_t> count(num_vars, 0);
  for (const auto& c : clauses) {
    for (auto x : c) ++count[x];
  }
  return std::all_of(count.begin(), count.end(), [](std::size_t k) { return k == 3; });
}

NaeFormula parse_nae(std::string_view text) {
  NaeFormula f;
  for (const auto& line : text::tokenize(text)) {
    if (line.tokens.size() != 2 && line.tokens.size() != 3) {
      throw ParseError(line.number, "clause must have 2 or 3 variables, got " +
                                        std::to_string(line.tokens.size()));
    }
    std::vector<std::uint32_t> clause;
    for (auto tok : line.tokens) {
      if (!tok.empty() && (tok[0] == '-' || tok[0] == '~' || tok[0] == '!')) {
        throw ParseError(line.number, "negated literal '" + std::string(tok) +
                                          "' in a monotone formula");
      }
      const auto x = text::to_uint(tok, line.number);
      if (x >= (std::uint64_t{1} << 31)) throw ParseError(line.number, "variable id too large");
      clause.push_back(static_cast<std::uint32_t>(x));
      f.num_vars = std::max<std::size_t>(f.num_vars, x + 1);
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

std::string serialize_nae(const NaeFormula& f) {
  std::ostringstream out;
  for (const auto& c : f.clauses) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << '\n';
  }
  return out.str();
}

bool nae_satisfies(const NaeFormula& f, const std::vector<bool>& assignment) {
  if (assignment.size() != f.num_vars) return false;
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
    bool any_true = false, any_false = false;
    for (auto x : c) (assignment[x] ? any_true : any_false) = true;
    return any_true && any_false;
  });
}

std::optional<std::vector<bool>> nae_bruteforce(const NaeFormula& f) {
  if (f.num_vars > kNaeVarGuard) {
    throw ResourceError("NAE brute force supports at most " + std::to_string(kNaeVarGuard) +
                        " variables");
  }
  std::vector<std::uint32_t> masks;
  for (const auto& c : f.clauses) {
    std::uint32_t m = 0;
    for (auto x : c) m |= std::uint32_t{1} << x;
    masks.push_back(m);
  }
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t a = 0; a < total; ++a) {
    const bool ok = std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) {
      const std::uint32_t on = static_cast<std::uint32_t>(a) & m;
      return on != 0 && on != m;
    });
    if (!ok) continue;
    std::vector<bool> assignment(f.num_vars);
    for (std::size_t x = 0; x < f.num_vars; ++x) assignment[x] = (a >> x) & 1U;
    return assignment;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

void require_cubic_graph(const Graph& g) {
  if (g.num_vertices() == 0) throw DomainError("expected a 3-regular graph, got the empty graph");
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 3) {
      throw DomainError("expected a 3-regular graph; vertex " + std::to_string(v) + " has degree " +
                        std::to_string(g.degree(v)));
    }
  }
}

void check_labels(const Graph& g, std::span<const std::uint8_t> labels) {
  if (labels.size() != g.num_edges()) throw ParameterError("one label per edge required");
  for (std::size_t e = 0; e < labels.size(); ++e) {
    if (labels[e] != 1 && labels[e] != 2) {
      throw ParameterError("edge " + std::to_string(e) + " label must be 1 or 2");
    }
  }
}

}  // namespace

Graph thm4_construct(const Graph& g) {
  require_cubic_graph(g);
  std::vector<Graph> parts{g, cycle(4), path(5), complete_bipartite(9, 9)};
  for (std::size_t k = 4; k <= 8; ++k) parts.push_back(star(k));
  return disjoint_union(parts);
}

bool additive_equiv(const Graph& g, std::span<const std::uint8_t> labels) {
  require_cubic_graph(g);
  check_labels(g, labels);
  std::vector<std::size_t> sum(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    sum[g.edge(e).u] += labels[e];
    sum[g.edge(e).v] += labels[e];
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return sum[e.u] != sum[e.v]; });
}

EdgePartition partition_from_labels(const Graph& g, std::span<const std::uint8_t> labels) {
  check_labels(g, labels);
  std::vector<PartId> part(labels.size());
  for (std::size_t e = 0; e < labels.size(); ++e) part[e] = labels[e] - 1U;
  return EdgePartition(2, std::move(part));
}

// ---------------------------------------------------------------------------

Gadget parse_gadget(std::string_view text) {
  const auto lines = text::tokenize(text);
  std::size_t consumed = 0;
  Gadget gadget;
  gadget.graph = detail::parse_graph_prefix(lines, consumed);
  for (std::size_t i = consumed; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 3 || line.tokens[0] != "port") {
      throw ParseError(line.number, "expected 'port <name> <vertex-id>'");
    }
    const auto v = text::to_uint(line.tokens[2], line.number);
    if (v >= gadget.graph.num_vertices()) throw ParseError(line.number, "port vertex out of range");
    const std::string name(line.tokens[1]);
    if (!gadget.ports.emplace(name, static_cast<Vertex>(v)).second) {
      throw ParseError(line.number, "duplicate port '" + name + "'");
    }
  }
  return gadget;
}

std::string_view to_string(ReductionVariant v) {
  return v == ReductionVariant::thm2 ? "thm2" : "thm3iii";
}

std::optional<ReductionVariant> variant_from_string(std::string_view name) {
  if (name == "thm2") return ReductionVariant::thm2;
  if (name == "thm3iii") return ReductionVariant::thm3iii;
  return std::nullopt;
}

VariantGadgets gadget_names(ReductionVariant v) {
  if (v == ReductionVariant::thm2) return {"B", "H", "I"};
  return {"P", "F", "D"};
}

namespace {

const Gadget& require_gadget(const GadgetSet& gs, std::string_view name,
                             std::initializer_list<std::string_view> ports) {
  const auto it = gs.find(name);
  if (it == gs.end()) throw ValidationError("missing gadget '" + std::string(name) + "'");
  if (!bipartition(it->second.graph)) {
    throw ValidationError("gadget '" + std::string(name) + "' is not bipartite");
  }
  for (auto port : ports) {
    if (!it->second.ports.contains(port)) {
      throw ValidationError("gadget '" + std::string(name) + "' lacks port '" + std::string(port) + "'");
    }
  }
  return it->second;
}

}  // namespace

Reduction gadget_reduce(const NaeFormula& f, const GadgetSet& gadgets, ReductionVariant variant) {
  const VariantGadgets names = gadget_names(variant);
  const bool has3 = std::any_of(f.clauses.begin(), f.clauses.end(),
                                [](const auto& c) { return c.size() == 3; });
  const bool has2 = std::any_of(f.clauses.begin(), f.clauses.end(),
                                [](const auto& c) { return c.size() == 2; });
  const Gadget& base = require_gadget(gadgets, names.base, {});
  const Gadget* g3 = has3 ? &require_gadget(gadgets, names.clause3, {"a", "t"}) : nullptr;
  const Gadget* g2 = has2 ? &require_gadget(gadgets, names.clause2, {"b", "t"}) : nullptr;

  // Step 1: fixed base components.
  std::vector<Graph> parts{base.graph};
  if (variant == ReductionVariant::thm2) {
    parts.push_back(star(6));
    parts.push_back(complete_bipartite(3, 6));
  }
  std::size_t offset = 0;
  for (const auto& p : parts) offset += p.num_vertices();

  // Step 2: one gadget copy per clause.
  Reduction out;
  for (const auto& c : f.clauses) {
    const Gadget& gad = c.size() == 3 ? *g3 : *g2;
    out.ports.clause_port.push_back(
        static_cast<Vertex>(offset + gad.ports.find(c.size() == 3 ? "a" : "b")->second));
    out.ports.clause_check.push_back(static_cast<Vertex>(offset + gad.ports.find("t")->second));
    parts.push_back(gad.graph);
    offset += gad.graph.num_vertices();
  }

  // Step 3: variable vertices and clause-port edges.
  Graph body = disjoint_union(parts);
  std::vector<Edge> edges(body.edges().begin(), body.edges().end());
  for (std::size_t x = 0; x < f.num_vars; ++x) out.ports.variable.push_back(static_cast<Vertex>(offset + x));
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    for (auto x : f.clauses[i]) edges.push_back({out.ports.clause_port[i], out.ports.variable[x]});
  }
  out.graph = Graph(offset + f.num_vars, std::move(edges));

  if (!bipartition(out.graph)) throw ValidationError("reduction output is not bipartite");
  const DegreeSet d = degree_set(out.graph);
  const std::vector<std::size_t> allowed =
      variant == ReductionVariant::thm2 ? std::vector<std::size_t>{1, 3, 6}
                                        : std::vector<std::size_t>{2, 3, 4, 6};
  for (std::size_t deg : d.values()) {
    if (std::find(allowed.begin(), allowed.end(), deg) == allowed.end()) {
      throw ValidationError("reduction output has a vertex of degree " + std::to_string(deg) +
                            ", outside the allowed set for " + std::string(to_string(variant)));
    }
  }
  return out;
}

std::vector<bool> extract_assignment(const Graph& g, const EdgePartition& p,
                                     const ReductionPorts& ports) {
  if (p.num_edges() != g.num_edges()) throw ParameterError("partition does not match the graph");
  if (p.num_parts() != 2) throw ParameterError("assignment extraction needs a 2-part partition");
  std::vector<bool> assignment(ports.variable.size(), false);
  for (std::size_t x = 0; x < ports.variable.size(); ++x) {
    const Vertex v = ports.variable[x];
    const auto inc = g.incident(v);
    if (inc.empty()) continue;
    const PartId first = p.part_of(inc[0]);
    for (EdgeId e : inc) {
      if (p.part_of(e) != first) {
        throw DomainError("variable " + std::to_string(x) + " (vertex " + std::to_string(v) +
                          ") has edges in both parts");
      }
    }
    assignment[x] = first == 0;
  }
  return assignment;
}

}  // namespace edgepart
