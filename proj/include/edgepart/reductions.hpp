#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgepart/graph.hpp"
#include "edgepart/partition.hpp"

namespace edgepart {

// ---------------------------------------------------------------------------
// Monotone NAE-SAT with clause sizes 2 and 3.

struct NaeFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<std::uint32_t>> clauses;

  /// Every variable 0..num_vars-1 occurs exactly three times.
  bool is_cubic() const;
};

/// One clause per line of space-separated variable ids. Negated literals and
/// clause sizes other than 2 or 3 are rejected.
NaeFormula parse_nae(std::string_view text);
std::string serialize_nae(const NaeFormula& f);

/// Every clause contains both a true and a false variable.
bool nae_satisfies(const NaeFormula& f, const std::vector<bool>& assignment);

inline constexpr std::size_t kNaeVarGuard = 24;

/// First satisfying assignment in binary counting order, or nullopt (UNSAT).
std::optional<std::vector<bool>> nae_bruteforce(const NaeFormula& f);

// ---------------------------------------------------------------------------
// Degree-set padding for cubic graphs.

/// g + C_4 + P_5 + K_{9,9} + K_{1,4} + ... + K_{1,8}, in that vertex order.
/// Requires g to be 3-regular.
Graph thm4_construct(const Graph& g);

/// For each edge uv the label sums at u and v differ. Labels are 1 or 2.
bool additive_equiv(const Graph& g, std::span<const std::uint8_t> labels);
/// Label 1 -> part 0, label 2 -> part 1.
EdgePartition partition_from_labels(const Graph& g, std::span<const std::uint8_t> labels);

// ---------------------------------------------------------------------------
// Gadget-driven reductions from NAE-SAT.

struct Gadget {
  Graph graph;
  std::map<std::string, Vertex, std::less<>> ports;
};

/// Edge-list format followed by lines "port <name> <vertex-id>".
Gadget parse_gadget(std::string_view text);

using GadgetSet = std::map<std::string, Gadget, std::less<>>;

enum class ReductionVariant { thm2, thm3iii };

std::string_view to_string(ReductionVariant v);
std::optional<ReductionVariant> variant_from_string(std::string_view name);

/// Gadget names a variant needs: base component, 3-clause gadget, 2-clause
/// gadget. 3-clause gadgets expose ports "a" and "t"; 2-clause gadgets "b"
/// and "t".
struct VariantGadgets {
  std::string_view base;
  std::string_view clause3;
  std::string_view clause2;
};
VariantGadgets gadget_names(ReductionVariant v);

struct ReductionPorts {
  std::vector<Vertex> variable;      // vertex of variable x
  std::vector<Vertex> clause_port;   // a_c or b_c
  std::vector<Vertex> clause_check;  // t_c
};

struct Reduction {
  Graph graph;
  ReductionPorts ports;
};

/// Base components, one gadget copy per clause, one vertex per variable, and
/// port-to-variable edges. Throws ValidationError when the result is not
/// bipartite or has a degree outside the variant's allowed set.
Reduction gadget_reduce(const NaeFormula& f, const GadgetSet& gadgets, ReductionVariant variant);

/// Reads a truth assignment off a 2-part partition: x is true iff all of its
/// edges are in part 0. Throws DomainError naming a variable whose edges are
/// split across both parts.
std::vector<bool> extract_assignment(const Graph& g, const EdgePartition& p,
                                     const ReductionPorts& ports);

}  // namespace edgepart
