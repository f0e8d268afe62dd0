#include "crn/egraph.hpp"

#include "support/generators.hpp"
#include "doctest.h"

using namespace crn;
using namespace crn::testing;

TEST_CASE("vertices deduplicate by coordinates and keep the first label") {
  EGraph g(2);
  int a = g.add_vertex({0, 0}, "origin");
  int b = g.add_vertex({1, 0});
  int a2 = g.add_vertex({0, 0}, "ignored");
  CHECK(a == a2);
  CHECK(g.vertex_count() == 2);
  CHECK(g.label(a) == "origin");
  int b2 = g.add_vertex({1, 0}, "late");
  CHECK(b == b2);
  CHECK(g.label(b) == "late");  // empty label filled in on revisit
  CHECK(g.find_vertex({1, 0}) == b);
  CHECK(g.find_vertex({5, 5}) == -1);
}

TEST_CASE("edge constraints") {
  EGraph g(1);
  int a = g.add_vertex({0});
  int b = g.add_vertex({2});
  g.add_edge(a, b);
  CHECK_THROWS_AS(g.add_edge(a, b), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(g.add_edge(a, a), std::invalid_argument);  // zero vector
  CHECK_THROWS_AS(g.add_edge(0, 9), std::invalid_argument);  // out of range
  CHECK(g.edge_vector(0) == RatVec{2});
  g.add_edge(b, a);
  CHECK(g.edge_vector(1) == RatVec{-2});
}

TEST_CASE("source vertices are distinct and sorted") {
  EGraph g(2);
  int o = g.add_vertex({0, 0});
  int p = g.add_vertex({1, 1});
  int q = g.add_vertex({0, 1});
  g.add_edge(p, o);
  g.add_edge(p, q);
  g.add_edge(o, q);
  auto s = g.source_vertices();
  REQUIRE(s.size() == 2);
  CHECK(s[0] == RatVec{0, 0});
  CHECK(s[1] == RatVec{1, 1});
}

TEST_CASE("reversibility hierarchy on hand graphs") {
  EGraph pair(1);
  int a = pair.add_vertex({0});
  int b = pair.add_vertex({2});
  pair.add_edge(a, b);
  CHECK(!pair.is_reversible());
  CHECK(!pair.is_weakly_reversible());
  pair.add_edge(b, a);
  CHECK(pair.is_reversible());
  CHECK(pair.is_weakly_reversible());

  EGraph cyc(2);
  int u = cyc.add_vertex({0, 0});
  int v = cyc.add_vertex({1, 0});
  int w = cyc.add_vertex({0, 1});
  cyc.add_edge(u, v);
  cyc.add_edge(v, w);
  cyc.add_edge(w, u);
  CHECK(!cyc.is_reversible());
  CHECK(cyc.is_weakly_reversible());

  // A chord leaving the cycle breaks weak reversibility.
  int x = cyc.add_vertex({1, 1});
  cyc.add_edge(u, x);
  CHECK(!cyc.is_weakly_reversible());
}

TEST_CASE("generated families land in their reversibility class") {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    int dim = 1 + static_cast<int>(rng.below(3));
    EGraph r = random_reversible_graph(rng, dim, 3);
    if (r.edge_count() > 0) CHECK(r.is_reversible());
    EGraph w = random_weakly_reversible_graph(rng, dim, 2, 3);
    if (w.edge_count() > 0) CHECK(w.is_weakly_reversible());
  }
}

TEST_CASE("stoichiometric subspace spans the edge vectors") {
  EGraph g(3);
  int o = g.add_vertex({0, 0, 0});
  int a = g.add_vertex({1, 0, 0});
  int b = g.add_vertex({2, 0, 0});
  g.add_edge(o, a);
  g.add_edge(a, b);
  CHECK(g.stoichiometric_subspace().dim() == 1);
  int c = g.add_vertex({0, 1, 0});
  g.add_edge(o, c);
  CHECK(g.stoichiometric_subspace().dim() == 2);
  CHECK(g.stoichiometric_subspace().contains(RatVec{5, -3, 0}));
  CHECK(!g.stoichiometric_subspace().contains(RatVec{0, 0, 1}));
}

TEST_CASE("same_network ignores vertex insertion order") {
  EGraph g1(2);
  int a1 = g1.add_vertex({0, 0});
  int b1 = g1.add_vertex({1, 2});
  g1.add_edge(a1, b1);

  EGraph g2(2);
  int b2 = g2.add_vertex({1, 2});
  int a2 = g2.add_vertex({0, 0});
  g2.add_edge(a2, b2);

  CHECK(EGraph::same_network(g1, g2));

  g2.add_edge(b2, a2);
  CHECK(!EGraph::same_network(g1, g2));
}
