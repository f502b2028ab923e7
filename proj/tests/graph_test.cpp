#include "csf/graph.hpp"

#include "doctest.h"

#include "csf/error.hpp"
#include "csf/samplers.hpp"

using namespace csf;

namespace {

bool brute_claw_free(const Graph& g) {
  const unsigned d = g.vertex_count();
  for (unsigned a = 0; a < d; ++a)
    for (unsigned b = a + 1; b < d; ++b)
      for (unsigned c = b + 1; c < d; ++c)
        for (unsigned e = c + 1; e < d; ++e) {
          const unsigned q[4] = {a, b, c, e};
          for (unsigned center = 0; center < 4; ++center) {
            bool claw = true;
            for (unsigned x = 0; x < 4; ++x)
              for (unsigned y = x + 1; y < 4; ++y) {
                const bool touches_center = x == center || y == center;
                if (g.adjacent(q[x], q[y]) != touches_center) claw = false;
              }
            if (claw) return false;
          }
        }
  return true;
}

void check_symmetric(const Graph& g) {
  for (unsigned u = 0; u < g.vertex_count(); ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (unsigned v = 0; v < g.vertex_count(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
}

}  // namespace

TEST_CASE("generators") {
  const Graph claw = gen_claw();
  CHECK(claw.vertex_count() == 4);
  CHECK(claw.edge_count() == 3);
  CHECK(claw.degree(0) == 3);
  for (unsigned v = 1; v < 4; ++v) CHECK(claw.degree(v) == 1);

  const Graph c5 = gen_cycle(5);
  CHECK(c5.edge_count() == 5);
  for (unsigned v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK(c5.adjacent(4, 0));

  const Graph k22 = gen_complete_bipartite(2, 2);
  CHECK(k22.edge_count() == 4);
  for (unsigned v = 0; v < 4; ++v) CHECK(k22.degree(v) == 2);  // 2-regular on 4 vertices: C_4

  CHECK(gen_path(4).edge_count() == 3);
  CHECK(gen_empty(3).edge_count() == 0);
  CHECK_THROWS_AS(gen_cycle(2), Error);
  CHECK_THROWS_AS(gen_path(0), Error);
  CHECK_THROWS_AS(gen_complete_bipartite(0, 2), Error);
  for (const auto& g : {claw, c5, k22, gen_squid(4), gen_complete(6)}) check_symmetric(g);
}

TEST_CASE("squid graph") {
  const Graph sq3 = gen_squid(3);
  CHECK(sq3.vertex_count() == 8);
  CHECK(sq3.edge_count() == 8);
  CHECK(sq3.degree(0) == 5);
  CHECK(sq3.name(0) == "u");
  CHECK(sq3.name(4) == "u_4");
  CHECK(sq3.name(5) == "v_1");
  const Graph sq4 = gen_squid(4);
  CHECK(sq4.vertex_count() == 11);
  CHECK(sq4.edge_count() == 11);
  CHECK_THROWS_AS(gen_squid(1), Error);

  const auto claw = find_claw(sq3);
  REQUIRE(claw);
  CHECK(claw->center == 0);
  // Leaves v_1, v_2, v_3 are pairwise non-adjacent neighbours of u.
  CHECK_FALSE(is_claw_free(induced_subgraph(sq3, singleton(0) | singleton(5) | singleton(6) | singleton(7)).graph));
}

TEST_CASE("claw detection") {
  CHECK_FALSE(is_claw_free(gen_claw()));
  for (unsigned n = 3; n <= 10; ++n) CHECK(is_claw_free(gen_cycle(n)));
  CHECK(is_claw_free(gen_complete(6)));
  CHECK_FALSE(is_claw_free(gen_complete_bipartite(1, 3)));
}

TEST_CASE("claw detection matches brute force on all labeled graphs up to 6 vertices") {
  for (unsigned d = 0; d <= 6; ++d)
    for (std::uint64_t mask = 0; mask < labeled_graph_count(d); ++mask) {
      const Graph g = labeled_graph(d, mask);
      const auto claw = find_claw(g);
      CHECK(claw.has_value() != brute_claw_free(g));
      if (claw) {
        for (auto l : claw->leaves) CHECK(g.adjacent(claw->center, l));
        CHECK_FALSE(g.adjacent(claw->leaves[0], claw->leaves[1]));
        CHECK_FALSE(g.adjacent(claw->leaves[0], claw->leaves[2]));
        CHECK_FALSE(g.adjacent(claw->leaves[1], claw->leaves[2]));
      }
    }
}

TEST_CASE("induced subgraphs") {
  const Graph claw = gen_claw();
  CHECK(induced_subgraph(claw, claw.vertices()).graph == claw);
  const auto edge = induced_subgraph(claw, singleton(0) | singleton(2));
  CHECK(edge.graph == Graph(2, {{0, 1}}));
  CHECK(edge.old_to_new[2] == 1);
  CHECK(edge.old_to_new[1] == -1);
  CHECK(induced_subgraph(gen_cycle(5), 0b00111).graph == gen_path(3));
  CHECK_THROWS_AS(induced_subgraph(claw, singleton(7)), Error);
}

TEST_CASE("induced subgraphs of claw-free graphs are claw-free") {
  Rng rng(7);
  for (int s = 0; s < 200; ++s) {
    const unsigned d = 4 + static_cast<unsigned>(uniform_below(rng, 6));
    const Graph g = random_claw_free_graph(d, rng);
    REQUIRE(is_claw_free(g));
    const VertexSet subset = rng() & g.vertices();
    CHECK(is_claw_free(induced_subgraph(g, subset).graph));
  }
}

TEST_CASE("posets and incomparability graphs") {
  CHECK(incomparability_graph(gen_chain(5)).edge_count() == 0);
  CHECK(incomparability_graph(gen_antichain(5)) == gen_complete(5));

  const Poset b2 = gen_boolean_lattice(2);
  CHECK(b2.element_count() == 4);
  CHECK(b2.leq(0, 3));
  const Graph inc2 = incomparability_graph(b2);
  CHECK(inc2.edge_count() == 1);
  CHECK(inc2.adjacent(1, 2));  // {1} and {2}

  // inc(B_3): brute-force count of incomparable subset pairs
  unsigned incomparable = 0;
  for (unsigned a = 0; a < 8; ++a)
    for (unsigned b = a + 1; b < 8; ++b)
      if ((a & b) != a && (a & b) != b) ++incomparable;
  CHECK(incomparable == 9);
  const Graph inc3 = incomparability_graph(gen_boolean_lattice(3));
  CHECK(inc3.vertex_count() == 8);
  CHECK(inc3.edge_count() == incomparable);
  CHECK(gen_boolean_lattice(0).element_count() == 1);
  CHECK(incomparability_graph(gen_boolean_lattice(4)).vertex_count() == 16);
  CHECK_THROWS_AS(gen_boolean_lattice(7), Error);
}

TEST_CASE("invalid posets and graphs are rejected") {
  CHECK_THROWS_AS(Poset(2, {0b11, 0b11}), Error);                // not antisymmetric
  CHECK_THROWS_AS(Poset(3, {0b011, 0b110, 0b100}), Error);       // not transitive
  CHECK_THROWS_AS(Poset(2, {0b00, 0b10}), Error);                // not reflexive
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(Graph(65, std::span<const Edge>{}), Error);
}
