#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "singlink/oka.hpp"
#include "singlink/resgraph.hpp"

using namespace singlink;

namespace {

ResolutionGraph make(std::vector<int> bs,
                     std::vector<std::pair<int, int>> es) {
  ResolutionGraph g;
  for (int b : bs) g.b.push_back(Int(b));
  g.edges = std::move(es);
  return g;
}

ResolutionGraph string_graph(std::vector<int> bs) {
  ResolutionGraph g;
  for (int b : bs) g.b.push_back(Int(b));
  for (int i = 0; i + 1 < g.size(); ++i) g.edges.push_back({i, i + 1});
  return g;
}

// center is vertex 0, legs walk outward
ResolutionGraph star(int center, const std::vector<std::vector<int>>& legs) {
  ResolutionGraph g;
  g.b.push_back(Int(center));
  for (const auto& leg : legs) {
    int prev = 0;
    for (int b : leg) {
      g.b.push_back(Int(b));
      g.edges.push_back({prev, g.size() - 1});
      prev = g.size() - 1;
    }
  }
  return g;
}

ResolutionGraph e8() { return star(-2, {{-2, -2, -2, -2}, {-2, -2}, {-2}}); }

// the non-realizable six-vertex example: a path -3,-7,-1,-2 with one -3
// hanging off each of the two middle vertices
ResolutionGraph hung_path() {
  return make({-3, -7, -1, -2, -3, -3},
              {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}});
}

ResolutionGraph relabel(const ResolutionGraph& g, const std::vector<int>& p) {
  ResolutionGraph out;
  out.b.assign(g.size(), Int(0));
  for (int v = 0; v < g.size(); ++v) out.b[p[v]] = g.b[v];
  for (const auto& [a, b] : g.edges) {
    int x = p[a], y = p[b];
    out.edges.push_back({std::min(x, y), std::max(x, y)});
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

// subdivide edge k: new (-1)-vertex between the ends, both decremented
ResolutionGraph blowup_edge(ResolutionGraph g, int k) {
  auto [a, b] = g.edges[k];
  g.b[a] -= 1;
  g.b[b] -= 1;
  g.b.push_back(Int(-1));
  g.edges[k] = {a, g.size() - 1};
  g.edges.push_back({b, g.size() - 1});
  return g;
}

// hang a fresh (-1) off vertex v
ResolutionGraph blowup_vertex(ResolutionGraph g, int v) {
  g.b[v] -= 1;
  g.b.push_back(Int(-1));
  g.edges.push_back({v, g.size() - 1});
  return g;
}

Rat string_product(const OrbifoldDiagram& o) {
  Rat p(1);
  for (const OrbEdge& e : o.edges) p *= Rat(e.det);
  for (const OrbLeg& l : o.legs) p *= Rat(l.det);
  return p;
}

}  // namespace

TEST_CASE("determinants and definiteness") {
  for (int k = 1; k <= 6; ++k) {
    ResolutionGraph s = string_graph(std::vector<int>(k, -2));
    CHECK(is_negative_definite(s));
    CHECK(graph_det(s) == k + 1);
  }
  CHECK(graph_det(string_graph({-5})) == 5);
  CHECK(graph_det(e8()) == 1);
  CHECK(is_negative_definite(hung_path()));
  CHECK(graph_det(hung_path()) == 3);

  CHECK_FALSE(is_negative_definite(string_graph({0})));
  CHECK_FALSE(is_negative_definite(string_graph({-2, -1, -2})));
  CHECK_FALSE(is_negative_definite(string_graph({2})));
  CHECK_THROWS_AS(graph_det(string_graph({-2, -1, -2})), input_error);
}

TEST_CASE("blow-downs reach the good minimal model") {
  CHECK(graph_iso(minimize(e8()), e8()));
  CHECK(graph_iso(minimize(hung_path()), hung_path()));

  std::mt19937_64 rng(20240818);
  ResolutionGraph g = e8();
  for (int step = 0; step < 4; ++step) {
    if (step % 2 == 0)
      g = blowup_edge(g, static_cast<int>(rng() % g.edges.size()));
    else
      g = blowup_vertex(g, static_cast<int>(rng() % g.size()));
    CHECK(is_negative_definite(g));
    CHECK(graph_det(g) == 1);
  }
  CHECK(graph_iso(minimize(g), e8()));

  // the order of blow-downs does not matter
  std::vector<int> p(g.size());
  for (int i = 0; i < g.size(); ++i) p[i] = i;
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(graph_iso(minimize(relabel(g, p)), e8()));
  }

  CHECK_THROWS_AS(minimize(string_graph({-1})), construction_error);
  CHECK_THROWS_AS(minimize(string_graph({-2, -1})), construction_error);
  CHECK_THROWS_AS(minimize(make({-2, -2}, {})), input_error);
  CHECK_THROWS_AS(minimize(string_graph({0})), input_error);
}

TEST_CASE("decompose splits the tree") {
  Decomposition e = decompose(e8());
  CHECK(e.has_node);
  CHECK(e.nodes == std::vector<int>{0});
  CHECK(e.chains.empty());
  REQUIRE(e.legs.size() == 3);

  // two nodes joined by a one-vertex chain, two legs each
  ResolutionGraph dumb = make({-3, -2, -2, -2, -3, -2, -2},
                              {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}});
  Decomposition dd = decompose(dumb);
  CHECK(dd.nodes == std::vector<int>{0, 4});
  REQUIRE(dd.chains.size() == 1);
  CHECK(dd.chains[0].from == 0);
  CHECK(dd.chains[0].to == 4);
  CHECK(dd.chains[0].interior == std::vector<int>{3});
  CHECK(dd.legs.size() == 4);

  Decomposition s = decompose(string_graph({-2, -3, -2}));
  CHECK_FALSE(s.has_node);
  CHECK(s.nodes.empty());
  CHECK(s.chains.empty());
  CHECK(s.legs.empty());
}

TEST_CASE("orbifold decorations") {
  OrbifoldDiagram oe = orbifold(e8());
  REQUIRE(oe.nodes() == 1);
  CHECK(oe.e[0] == Rat(-1) / 30);
  CHECK_FALSE(oe.free_edge.has_value());
  REQUIRE(oe.legs.size() == 3);
  CHECK(oe.legs[0].det == 2);
  CHECK(oe.legs[1].det == 3);
  CHECK(oe.legs[2].det == 5);
  CHECK(orbifold_det(oe) == Rat(1) / 30);
  CHECK(orbifold_det(oe) * string_product(oe) == Rat(graph_det(e8())));

  // non-palindromic leg pins the direction the strings are read: the leg
  // [-3,-2] gives 2/5, not 3/5
  ResolutionGraph st = star(-2, {{-3, -2}, {-2}, {-2}});
  OrbifoldDiagram os = orbifold(st);
  REQUIRE(os.nodes() == 1);
  CHECK(os.e[0] == Rat(-3) / 5);
  CHECK(graph_det(st) == 12);
  CHECK(orbifold_det(os) * string_product(os) == Rat(12));

  OrbifoldDiagram oh = orbifold(hung_path());
  REQUIRE(oh.nodes() == 2);
  CHECK(oh.e[0] == Rat(-19) / 3);
  CHECK(oh.e[1] == Rat(-1) / 6);
  REQUIRE(oh.edges.size() == 1);
  CHECK(oh.edges[0].det == 1);
  REQUIRE(oh.legs.size() == 4);
  CHECK(orbifold_det(oh) == Rat(1) / 18);
  CHECK(orbifold_det(oh) * string_product(oh) == Rat(3));

  OrbifoldDiagram of = orbifold(string_graph({-2, -2, -2}));
  REQUIRE(of.free_edge.has_value());
  CHECK(*of.free_edge == 4);
  CHECK(of.nodes() == 0);
  CHECK(orbifold_det(of) == 1);

  // blowing up inside a leg leaves the orbifold alone
  ResolutionGraph blown = blowup_edge(e8(), 0);
  CHECK(orb_iso(orbifold(blown), oe));
}

TEST_CASE("graph and orbifold isomorphism") {
  std::vector<int> p = {3, 1, 4, 0, 5, 7, 2, 6};
  CHECK(graph_iso(e8(), relabel(e8(), p)));
  CHECK(graph_iso(string_graph({-2, -3, -4}), string_graph({-4, -3, -2})));
  CHECK_FALSE(graph_iso(string_graph({-2, -2, -2}),
                        string_graph({-2, -2, -2, -2})));
  CHECK_FALSE(graph_iso(e8(), star(-2, {{-2, -2, -2}, {-2, -2}, {-2}})));
  CHECK_FALSE(graph_iso(e8(), star(-3, {{-2, -2, -2, -2}, {-2, -2}, {-2}})));

  OrbifoldDiagram o1 = orbifold(e8());
  OrbifoldDiagram o2 = orbifold(star(-2, {{-2}, {-2, -2}, {-2, -2, -2, -2}}));
  CHECK(orb_iso(o1, o2));
  CHECK_FALSE(orb_iso(o1, orbifold(star(-2, {{-2, -2, -2}, {-2, -2}, {-2}}))));
  CHECK_FALSE(orb_iso(o1, orbifold(string_graph({-2, -2}))));
  CHECK_FALSE(orb_iso(orbifold(string_graph({-2, -2, -2})),
                      orbifold(string_graph({-2, -2, -2, -2}))));
  CHECK(orb_iso(orbifold(string_graph({-2, -3})),
                orbifold(string_graph({-3, -2}))));

  ResolutionGraph dumb = make({-3, -2, -2, -2, -3, -2, -2},
                              {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}});
  std::vector<int> q = {6, 0, 1, 2, 5, 3, 4};
  CHECK(orb_iso(orbifold(dumb), orbifold(relabel(dumb, q))));
}

TEST_CASE("determinant product identity along the pipeline") {
  const std::vector<std::vector<IVec3>> supports = {
      {{5, 0, 0}, {0, 3, 0}, {0, 0, 2}},
      {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}},
      {{2, 0, 0}, {0, 3, 0}, {0, 0, 2}},
      {{0, 0, 3}, {0, 2, 1}, {3, 1, 0}},
      {{0, 0, 5}, {0, 2, 1}, {2, 1, 0}},
      {{0, 0, 7}, {0, 1, 3}, {1, 2, 0}, {2, 1, 0}},
      {{0, 0, 2}, {0, 2, 1}, {1, 7, 0}, {3, 0, 1}},
      {{1, 0, 2}, {0, 2, 2}, {0, 5, 0}, {2, 1, 0}},
  };
  for (const auto& s : supports) {
    ResolutionGraph g = oka_graph(newton_boundary(s));
    ResolutionGraph m = minimize(g);
    CHECK(graph_det(m) == graph_det(g));
    OrbifoldDiagram o = orbifold(m);
    if (o.free_edge) {
      CHECK(*o.free_edge == graph_det(m));
    } else {
      CHECK(orbifold_det(o) * string_product(o) == Rat(graph_det(m)));
    }
  }

  // the symmetric two-node example: legs p=2 and q=3 on both nodes
  ResolutionGraph sg =
      oka_graph(newton_boundary({{0, 0, 2}, {0, 2, 1}, {1, 7, 0}, {3, 0, 1}}));
  OrbifoldDiagram so = orbifold(minimize(sg));
  REQUIRE(so.nodes() == 2);
  REQUIRE(so.legs.size() == 4);
  CHECK(so.legs[0].det == 2);
  CHECK(so.legs[1].det == 3);
  CHECK(so.legs[2].det == 2);
  CHECK(so.legs[3].det == 3);
  CHECK(so.e[0] == so.e[1]);
  REQUIRE(so.edges.size() == 1);
}
