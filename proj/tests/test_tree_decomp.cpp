#include <doctest.h>

#include "edgepart/error.hpp"
#include "edgepart/oracles.hpp"
#include "edgepart/tree_decomp.hpp"
#include "support.hpp"

using namespace edgepart;

namespace {

// Spider with three legs of length two around vertex 0.
Graph spider222() { return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

Graph perfect_binary_tree(std::size_t height) {
  const std::size_t n = (std::size_t{1} << (height + 1)) - 1;
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({(v - 1) / 2, v});
  return Graph(n, std::move(edges));
}

// Degrees of a tree part restricted to (1, alpha).
bool part_within(const Graph& g, const EdgePartition& p, PartId i, std::size_t alpha) {
  const DegreeSet d = incident_degree_set(part_subgraph(g, p, i));
  return std::all_of(d.values().begin(), d.values().end(),
                     [&](std::size_t x) { return x == 1 || x == alpha; });
}

}  // namespace

TEST_CASE("candidate pairs") {
  const auto c13 = candidate_pairs(DegreeSet({1, 3}), 3);
  CHECK(std::find(c13.begin(), c13.end(), std::pair<std::size_t, std::size_t>{1, 2}) != c13.end());
  CHECK(std::is_sorted(c13.begin(), c13.end()));
  CHECK(candidate_pairs(DegreeSet({1, 2, 3, 4, 5, 6, 7, 8}), 8).empty());
  const auto c1 = candidate_pairs(DegreeSet({1}), 1);
  CHECK(c1 == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}});
  for (const auto& [a, b] : candidate_pairs(DegreeSet({1, 4, 9}), 9)) CHECK(a <= b);
}

TEST_CASE("alg1 examples") {
  const Graph s5 = star(5);
  const TreeDecision yes = alg1(bfs_root(s5, 0), 1, 4);
  REQUIRE(yes.yes);
  CHECK(yes.witness->part_sizes() == std::vector<std::size_t>{1, 4});
  CHECK(part_within(s5, *yes.witness, 0, 1));
  CHECK(part_within(s5, *yes.witness, 1, 4));

  CHECK(alg1(bfs_root(path(2), 0), 1, 1).yes);
  CHECK_FALSE(alg1(bfs_root(s5, 0), 1, 1).yes);
}

TEST_CASE("alg1 witnesses respect both targets") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const Graph t = ref::random_tree(rng, 2 + i % 25);
    const RootedTree rt = bfs_root(t, 0);
    for (const auto& [a, b] : candidate_pairs(degree_set(t), t.max_degree())) {
      const TreeDecision d = alg1(rt, a, b);
      CHECK(d.restarts <= t.num_edges());
      if (!d.yes) continue;
      CHECK(part_within(t, *d.witness, 0, a));
      CHECK(part_within(t, *d.witness, 1, b));
    }
  }
}

TEST_CASE("wr2_tree basics") {
  CHECK(wr2_tree(path(6)).yes);
  CHECK(wr2_tree(star(7)).yes);
  const TreeDecision single = wr2_tree(star(4));
  REQUIRE(single.yes);
  CHECK(single.witness->num_parts() == 2);

  // Caterpillar whose spine vertices have degrees 2..9: degree set {1,...,9}.
  std::vector<Edge> edges;
  Vertex next = 8;
  for (Vertex s = 0; s < 8; ++s) {
    if (s + 1 < 8) edges.push_back({s, s + 1});
    const std::size_t want = s + 2;
    const std::size_t have = (s > 0) + (s + 1 < 8);
    for (std::size_t j = have; j < want; ++j) edges.push_back({s, next++});
  }
  const Graph cat(next, edges);
  REQUIRE(degree_set(cat).size() >= 8);
  CHECK_FALSE(wr2_tree(cat).yes);

  CHECK_THROWS_AS(wr2_tree(cycle(4)), DomainError);
  CHECK(wr2_tree(Graph(1)).yes);
}

TEST_CASE("wr2_tree on the three-leg spider matches brute force") {
  const Graph s = spider222();
  const bool brute = ref::splittable(s, 2, ref::Kind::ws);
  CHECK(brute);
  CHECK(wr2_tree(s).yes == brute);
}

TEST_CASE("vertex_feasible") {
  const std::vector<ColorMask> none5(5, 0);
  const std::vector<std::size_t> zero2(2, 0), alphas14{1, 4};
  const auto split = vertex_feasible(none5, zero2, std::nullopt, alphas14);
  REQUIRE(split);
  CHECK(std::count(split->begin(), split->end(), 0U) == 1);
  CHECK(std::count(split->begin(), split->end(), 1U) == 4);

  const std::vector<ColorMask> none2(2, 0);
  const std::vector<std::size_t> zero1(1, 0), alphas3{3};
  CHECK_FALSE(vertex_feasible(none2, zero1, std::nullopt, alphas3));

  const std::vector<ColorMask> empty;
  const std::vector<std::size_t> alphas2{2};
  CHECK(vertex_feasible(empty, zero1, 0U, alphas2));

  // Forbidden colors are honored.
  const std::vector<ColorMask> forbid_first{0b01, 0, 0, 0, 0};
  const auto f = vertex_feasible(forbid_first, zero2, std::nullopt, alphas14);
  REQUIRE(f);
  CHECK((*f)[0] == 1U);

  const std::vector<std::size_t> too_many{5, 0};
  CHECK_THROWS_AS(vertex_feasible(none2, too_many, std::nullopt, alphas14), ParameterError);
  CHECK_THROWS_AS(vertex_feasible(none2, zero1, std::nullopt, alphas14), ParameterError);
}

TEST_CASE("alg2 examples") {
  const std::vector<std::size_t> a124{1, 2, 4};
  const TreeDecision d = alg2(bfs_root(star(7), 0), a124);
  REQUIRE(d.yes);
  CHECK(d.witness->part_sizes() == std::vector<std::size_t>{1, 2, 4});
  const std::vector<std::size_t> a1{1};
  CHECK_FALSE(alg2(bfs_root(path(3), 0), a1).yes);
  const std::vector<std::size_t> empty;
  CHECK_THROWS_AS(alg2(bfs_root(path(3), 0), empty), ParameterError);
}

TEST_CASE("alg2 with two colors agrees with alg1 on random trees") {
  std::mt19937_64 rng(1000);
  std::size_t runs = 0, yes = 0;
  for (int i = 0; i < 1000; ++i) {
    const Graph t = ref::random_tree(rng, 2 + i % 40, (i % 3) * 0.3);
    const RootedTree rt = bfs_root(t, 0);
    for (const auto& [a, b] : candidate_pairs(degree_set(t), t.max_degree())) {
      const std::vector<std::size_t> ab{a, b};
      const TreeDecision one = alg1(rt, a, b);
      const TreeDecision two = alg2(rt, ab);
      CHECK(one.yes == two.yes);
      CHECK(two.restarts <= 2 * t.num_edges());
      ++runs;
      yes += one.yes;
    }
  }
  CHECK(runs > 1000);
  CHECK(yes > 0);
  CHECK(yes < runs);
}

TEST_CASE("wrc_tree") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Graph t = ref::random_tree(rng, 2 + i % 15);
    CHECK(wrc_tree(t, 1).yes == (degree_set(t).size() <= 2));
  }
  CHECK(wrc_tree(star(3), 3).yes);
  const TreeDecision d = wrc_tree(spider222(), 2);
  REQUIRE(d.yes);
  CHECK(verify_partition(spider222(), *d.witness, Family::weakly_semiregular));
  CHECK_THROWS_AS(wrc_tree(path(3), 0), ParameterError);
}

TEST_CASE("wrc_tree with c = 2 agrees with wr2_tree on all trees up to 9 vertices") {
  std::size_t trees = 0, disagreements = 0;
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const Graph& t : enumerate_free_trees(n)) {
      ++trees;
      disagreements += wrc_tree(t, 2).yes != wr2_tree(t).yes;
    }
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_labeled_tree(n, [&](const Graph& t) {
      ++trees;
      disagreements += wrc_tree(t, 2).yes != wr2_tree(t).yes;
    });
  }
  CHECK(trees > 18000);
  CHECK(disagreements == 0);
}

TEST_CASE("alg3 examples") {
  const BinarySplit s5 = alg3(star(5));
  CHECK(s5.labels == std::vector<std::size_t>{0, 2, 2, 2, 2});
  CHECK(s5.partition.part_sizes() == std::vector<std::size_t>{1, 4});

  const BinarySplit p2 = alg3(path(2));
  CHECK(p2.labels == std::vector<std::size_t>{0});
  CHECK(p2.partition.num_parts() == 1);

  const Graph bt = perfect_binary_tree(3);
  const BinarySplit b = alg3(bt);
  CHECK(verify_partition(bt, b.partition, Family::weakly_semiregular));

  CHECK_THROWS_AS(alg3(Graph(1)), DomainError);
  CHECK_THROWS_AS(alg3(cycle(3)), DomainError);
}

TEST_CASE("alg3 classes are (1, 2^t) forests") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const Graph t = ref::random_tree(rng, 2 + i % 120, 0.6);
    const BinarySplit s = alg3(t);
    const std::size_t delta = t.max_degree();
    CHECK(s.offset == ref::floor_log2(delta) + 1);
    CHECK(s.partition.num_parts() <= 2 * ref::floor_log2(delta) + 2);
    CHECK_FALSE(s.partition.has_empty_part());
    std::map<std::size_t, std::vector<std::size_t>> classes;
    for (std::size_t e = 0; e < s.labels.size(); ++e) classes[s.labels[e]].push_back(e);
    for (const auto& [label, ids] : classes) {
      const std::size_t power = std::size_t{1} << (label % s.offset);
      for (const auto& [v, d] : ref::degrees(t, ids)) CHECK((d == 1 || d == power));
    }
  }
}

TEST_CASE("sr_tree") {
  const EdgePartition s5 = sr_tree(star(5));
  CHECK(s5.num_parts() == 3);
  auto sizes = s5.part_sizes();
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 2});
  CHECK(verify_partition(star(5), s5, Family::semiregular));

  CHECK(sr_tree(path(4)).num_parts() == 1);

  std::mt19937_64 rng(7);
  int seen7 = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph t = ref::random_tree(rng, 2 + i % 60, 0.5);
    const EdgePartition p = sr_tree(t);
    CHECK(p.num_parts() == (t.max_degree() + 1) / 2);
    CHECK(verify_partition(t, p, Family::semiregular));
    if (t.max_degree() == 7) {
      ++seen7;
      CHECK(p.num_parts() == 4);
    }
  }
  CHECK(seen7 > 0);
  CHECK_THROWS_AS(sr_tree(Graph(1)), DomainError);
}

TEST_CASE("wr2_tree matches the oracle on every tree shape up to 16 vertices") {
  std::size_t trees = 0, no = 0, disagreements = 0;
  for (std::size_t n = 2; n <= 16; ++n) {
    for (const Graph& t : enumerate_free_trees(n)) {
      ++trees;
      const TreeDecision d = wr2_tree(t);
      const bool oracle_yes = oracle_wr(t, {.max_edges = 16, .max_parts = 2}).min_parts.has_value();
      no += !oracle_yes;
      disagreements += d.yes != oracle_yes;
      if (!oracle_yes) CHECK_FALSE(wrc_tree(t, 2).yes);
    }
  }
  CHECK(trees == 32507);
  // The smallest trees needing three parts have 15 vertices.
  CHECK(no == 17);
  CHECK(disagreements == 0);
}

TEST_CASE("wr2_tree matches the oracle on all labeled trees with 9 vertices") {
  std::size_t trees = 0, disagreements = 0;
  for_each_labeled_tree(9, [&](const Graph& t) {
    ++trees;
    const bool oracle_yes = oracle_wr(t, {.max_edges = 16, .max_parts = 2}).min_parts.has_value();
    disagreements += wr2_tree(t).yes != oracle_yes;
  });
  CHECK(trees == 4782969);
  CHECK(disagreements == 0);
}
