#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgepart/graph.hpp"

namespace edgepart {

using PartId = std::uint32_t;

/// Assignment edge id -> part id in 0..k-1. Empty parts are allowed.
class EdgePartition {
 public:
  EdgePartition() = default;
  EdgePartition(std::size_t k, std::vector<PartId> part);

  std::size_t num_parts() const noexcept { return k_; }
  std::size_t num_edges() const noexcept { return part_.size(); }
  PartId part_of(EdgeId e) const { return part_.at(e); }
  const std::vector<PartId>& parts() const noexcept { return part_; }

  std::vector<std::size_t> part_sizes() const;
  std::size_t num_nonempty() const;
  bool has_empty_part() const { return num_nonempty() < k_; }

  /// Drops empty parts; the remaining parts keep their relative order.
  EdgePartition compacted() const;

  friend bool operator==(const EdgePartition&, const EdgePartition&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<PartId> part_;
};

enum class Family {
  weakly_semiregular,
  semiregular,
  regular,
  locally_regular,
  locally_irregular,
  regular_or_locally_irregular,
  // Locally irregular or weakly semiregular, decided per part.
  irregular_or_weakly_semiregular,
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

/// Edge-induced subgraph of part i on the host's vertex set. Vertices with no
/// edge in the part are isolated and do not count toward any family test.
Graph part_subgraph(const Graph& g, const EdgePartition& p, PartId i);

/// Degree set over non-isolated vertices. Empty for an edgeless graph.
DegreeSet incident_degree_set(const Graph& g);

/// Family membership judged on non-isolated vertices only. Edgeless graphs
/// are members of every family.
bool is_family(const Graph& g, Family f);

bool verify_partition(const Graph& g, const EdgePartition& p, Family f);

/// Least k with 3^k - 1 >= |D| (or 3^k >= |D| with loose), k >= 1.
std::size_t wr_lower_bound(const Graph& g, bool loose = false);

/// Header "k m" then m lines "edge_id part_id".
EdgePartition parse_partition(std::string_view text);
std::string serialize_partition(const EdgePartition& p);

}  // namespace edgepart
