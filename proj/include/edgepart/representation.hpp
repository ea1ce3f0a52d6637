#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgepart/graph.hpp"

namespace edgepart {

// Representations modulo r: injective labels in Z_r with u ~ v exactly when
// gcd(|l(u) - l(v)|, r) = 1.

struct Representation {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> labels;
};

/// Throws ParameterError on a label count mismatch, a label >= modulus, or
/// repeated labels.
bool verify_rep(const Graph& g, const Representation& rep);

/// Graph whose adjacency is read back from a representation.
Graph graph_from_rep(const Representation& rep);

inline constexpr std::size_t kRepSearchMaxVertices = 8;
inline constexpr std::uint64_t kRepSearchMaxModulus = 10'000;

struct RepSearchOptions {
  std::uint64_t r_max = 64;
  // Pin vertex 0 to label 0. Exact because cyclic shifts preserve every
  // difference modulo r.
  bool pin_first_label = true;
};

/// Least r <= r_max admitting a representation, with a witness.
std::optional<Representation> rep_search(const Graph& g, const RepSearchOptions& options = {});

std::uint64_t next_prime(std::uint64_t m);

struct PrimePlan {
  // Matchings of the complement, as edge ids of the complement graph.
  std::vector<std::vector<EdgeId>> matchings;
  std::vector<std::uint64_t> primes;
  // coordinates[v][i] = residue of v modulo primes[i].
  std::vector<std::vector<std::uint64_t>> coordinates;
};

struct TfcRepresentation {
  Representation rep;
  PrimePlan plan;
  Graph complement;
};

/// Representation for graphs whose complement is triangle-free and regular:
/// one prime per matching of a proper edge coloring of the complement, labels
/// combined by the Chinese remainder theorem.
TfcRepresentation rep_construct_tfc(const Graph& g);

/// Line-oriented block: "r <modulus>", optional "primes ...", "labels ...".
std::string serialize_rep(const Representation& rep,
                          const std::vector<std::uint64_t>& primes = {});
Representation parse_rep(std::string_view text);

}  // namespace edgepart
