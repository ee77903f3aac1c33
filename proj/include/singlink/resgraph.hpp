#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "singlink/base.hpp"

namespace singlink {

// plumbing tree with vanishing genera; vertex v carries the
// self-intersection b_v of the corresponding exceptional curve
struct ResolutionGraph {
  std::vector<Int> b;
  std::vector<std::pair<int, int>> edges;  // unordered, stored first < second

  int size() const { return static_cast<int>(b.size()); }
};

std::vector<int> degrees(const ResolutionGraph& g);

// connected, acyclic, no parallel edges; the empty graph is not a tree
bool is_tree(const ResolutionGraph& g);

// all leading principal minors of -I positive, exact arithmetic
bool is_negative_definite(const ResolutionGraph& g);

// det(-I); requires a negative definite graph
Int graph_det(const ResolutionGraph& g);

// good minimal model: blow down (-1)-vertices of degree < 3 until none is
// left; the result does not depend on the order. A graph that blows down
// to nothing resolves a smooth point and is rejected.
ResolutionGraph minimize(const ResolutionGraph& g);

// maximal string between two nodes; interior lists the vertices strictly
// between them, walking from 'from' to 'to'
struct GraphChain {
  int from = -1, to = -1;
  std::vector<int> interior;
};

// string hanging off a node, walking outward, tip included
struct GraphLeg {
  int node = -1;
  std::vector<int> interior;
};

// nodes are the vertices of degree >= 3; a graph without one is a single
// string and carries neither chains nor legs
struct Decomposition {
  std::vector<int> nodes;
  std::vector<GraphChain> chains;
  std::vector<GraphLeg> legs;
  bool has_node = false;
};

Decomposition decompose(const ResolutionGraph& g);

struct OrbEdge {
  int a = 0, b = 0;  // node indices
  Int det;           // determinant of the chain
};

struct OrbLeg {
  int node = 0;
  Int det;
};

// vertices are the nodes of the source graph, decorated by the orbifold
// Euler numbers of their maximal star subgraphs; edges and legs keep the
// determinants of the chains and legs they replace. A graph without a
// node collapses to a single free edge decorated by the graph determinant.
struct OrbifoldDiagram {
  std::vector<Rat> e;
  std::vector<OrbEdge> edges;
  std::vector<OrbLeg> legs;
  std::optional<Int> free_edge;

  int nodes() const { return static_cast<int>(e.size()); }
};

OrbifoldDiagram orbifold(const ResolutionGraph& g);

// det(-I^o) where I^o has e_r on the diagonal and 1/n_rs off it; the
// free-edge diagram has an empty matrix, determinant 1
Rat orbifold_det(const OrbifoldDiagram& o);

// decorated-tree isomorphism
bool graph_iso(const ResolutionGraph& g1, const ResolutionGraph& g2);
bool orb_iso(const OrbifoldDiagram& o1, const OrbifoldDiagram& o2);

}  // namespace singlink
