#include <doctest.h>

#include "edgepart/edge_coloring.hpp"
#include "edgepart/error.hpp"
#include "support.hpp"

using namespace edgepart;

namespace {

// Independent properness check.
bool proper(const Graph& g, const ProperEdgeColoring& c) {
  if (c.colors.size() != g.num_edges()) return false;
  std::set<std::pair<Vertex, std::uint32_t>> seen;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (c.colors[e] >= c.num_colors) return false;
    if (!seen.emplace(g.edge(e).u, c.colors[e]).second) return false;
    if (!seen.emplace(g.edge(e).v, c.colors[e]).second) return false;
  }
  return true;
}

std::size_t distinct_colors(const ProperEdgeColoring& c) {
  return std::set<std::uint32_t>(c.colors.begin(), c.colors.end()).size();
}

void check_factorization(const Graph& g, const TwoFactorization& f) {
  std::vector<int> used(g.num_edges(), 0);
  for (const auto& factor : f.factors) {
    std::vector<std::size_t> deg(g.num_vertices(), 0);
    for (EdgeId e : factor) {
      ++used[e];
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    for (auto d : deg) CHECK(d == 2);
  }
  for (int u : used) CHECK(u == 1);
}

}  // namespace

TEST_CASE("bipartite coloring") {
  const ProperEdgeColoring k33 = bipartite_color(complete_bipartite(3, 3));
  CHECK(proper(complete_bipartite(3, 3), k33));
  CHECK(k33.num_colors == 3);
  CHECK(bipartite_color(path(4)).num_colors == 2);
  CHECK(proper(cycle(6), bipartite_color(cycle(6))));
  CHECK(bipartite_color(cycle(6)).num_colors == 2);
  CHECK_THROWS_AS(bipartite_color(cycle(5)), DomainError);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const Graph t = ref::random_tree(rng, 2 + i % 50, 0.5);
    const ProperEdgeColoring c = bipartite_color(t);
    CHECK(proper(t, c));
    CHECK(c.num_colors == t.max_degree());
  }
  // Bipartite multigraph.
  const Graph multi(4, {{0, 2}, {0, 2}, {1, 3}, {0, 3}, {1, 2}});
  const ProperEdgeColoring mc = bipartite_color(multi);
  CHECK(proper(multi, mc));
  CHECK(mc.num_colors == 3);
}

TEST_CASE("vizing examples") {
  const ProperEdgeColoring c5 = vizing(cycle(5));
  CHECK(proper(cycle(5), c5));
  CHECK(c5.num_colors == 3);

  CHECK(ref::properly_colorable(complete(4), 3));
  const ProperEdgeColoring k4 = vizing(complete(4));
  CHECK(proper(complete(4), k4));
  CHECK(k4.num_colors <= 4);

  const Graph p = petersen();
  CHECK_FALSE(ref::properly_colorable(p, 3));
  const ProperEdgeColoring pc = vizing(p);
  CHECK(proper(p, pc));
  CHECK(pc.num_colors == 4);
  CHECK(is_proper(p, pc));

  CHECK_THROWS_AS(vizing(Graph(2, {{0, 1}, {0, 1}})), DomainError);
  CHECK(vizing(Graph(3)).colors.empty());
}

TEST_CASE("vizing on random graphs") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const Graph g = ref::random_simple_graph(rng, 2 + i % 30, 0.05 + (i % 10) * 0.09);
    const ProperEdgeColoring c = vizing(g);
    CHECK(proper(g, c));
    CHECK(is_proper(g, c));
    CHECK(distinct_colors(c) <= g.max_degree() + 1);
  }
}

TEST_CASE("is_proper rejects clashes") {
  const Graph p3 = path(3);
  CHECK_FALSE(is_proper(p3, {{0, 0}, 1}));
  CHECK_FALSE(is_proper(p3, {{0, 2}, 2}));
  CHECK(is_proper(p3, {{0, 1}, 2}));
}

TEST_CASE("two-factorization") {
  const TwoFactorization c6 = two_factorize(cycle(6));
  REQUIRE(c6.factors.size() == 1);
  check_factorization(cycle(6), c6);

  const TwoFactorization k5 = two_factorize(complete(5));
  CHECK(k5.factors.size() == 2);
  check_factorization(complete(5), k5);

  const std::vector<Graph> triangles{cycle(3), cycle(3)};
  const Graph two_c3 = disjoint_union(triangles);
  const TwoFactorization t = two_factorize(two_c3);
  CHECK(t.factors.size() == 1);
  check_factorization(two_c3, t);

  const TwoFactorization k9 = two_factorize(complete(9));
  CHECK(k9.factors.size() == 4);
  check_factorization(complete(9), k9);

  // 4-regular multigraph: doubled C_5.
  std::vector<Edge> doubled;
  for (const Edge& e : cycle(5).edges()) {
    doubled.push_back(e);
    doubled.push_back(e);
  }
  const Graph dc5(5, doubled);
  check_factorization(dc5, two_factorize(dc5));

  CHECK_THROWS_AS(two_factorize(petersen()), DomainError);
  CHECK_THROWS_AS(two_factorize(path(3)), DomainError);
}

TEST_CASE("four-regular host") {
  const Graph k5 = complete(5);
  const FourRegularHost same = four_regularize(k5);
  CHECK(same.doublings == 0);
  CHECK(same.host == k5);
  for (EdgeId e = 0; e < k5.num_edges(); ++e) CHECK(same.embedding[e] == e);

  const FourRegularHost k2 = four_regularize(path(2));
  CHECK(k2.doublings == 3);
  CHECK(k2.host.num_vertices() == 16);
  CHECK(degree_set(k2.host) == DegreeSet({4}));

  const FourRegularHost c4 = four_regularize(cycle(4));
  CHECK(c4.doublings == 2);
  CHECK(c4.host.num_vertices() == 16);
  CHECK(degree_set(c4.host) == DegreeSet({4}));
  for (EdgeId e = 0; e < 4; ++e) CHECK(c4.host.edge(c4.embedding[e]) == cycle(4).edge(e));

  CHECK_THROWS_AS(four_regularize(star(5)), DomainError);
  CHECK_THROWS_AS(four_regularize(Graph(3, {{0, 1}})), DomainError);
}

TEST_CASE("wr2_deg4") {
  for (const Graph& g : {complete(4), cycle(5), path(3), petersen(), complete(5)}) {
    const EdgePartition p = wr2_deg4(g);
    CHECK(p.num_parts() == 2);
    for (PartId i = 0; i < 2; ++i) {
      for (auto d : incident_degree_set(part_subgraph(g, p, i)).values()) CHECK((d == 1 || d == 2));
    }
    CHECK(verify_partition(g, p, Family::weakly_semiregular));
  }
  CHECK_THROWS_AS(wr2_deg4(star(5)), DomainError);
}

TEST_CASE("sr_general") {
  const EdgePartition c5 = sr_general(cycle(5));
  CHECK(c5.num_parts() <= 2);
  CHECK(verify_partition(cycle(5), c5, Family::semiregular));
  const EdgePartition k4 = sr_general(complete(4));
  CHECK(k4.num_parts() <= 2);
  CHECK(verify_partition(complete(4), k4, Family::semiregular));
  CHECK(sr_general(path(2)).num_parts() == 1);
  CHECK_THROWS_AS(sr_general(Graph(4)), DomainError);
}

TEST_CASE("Remark 1 and sr constructions on random graphs") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const Graph g = ref::random_bounded_graph(rng, 2 + i % 39, 4);
    const EdgePartition p = wr2_deg4(g);
    CHECK(p.num_parts() == 2);
    CHECK(ref::all_members(g, 2, p.parts(), ref::Kind::ws));
    CHECK(ref::all_members(g, 2, p.parts(), ref::Kind::sr));

    const Graph h = ref::random_simple_graph(rng, 2 + i % 39, 0.15);
    if (h.num_edges() == 0) continue;
    const EdgePartition s = sr_general(h);
    CHECK(s.num_parts() <= (h.max_degree() + 2) / 2);
    CHECK(ref::all_members(h, s.num_parts(), s.parts(), ref::Kind::sr));
  }
}
