#include "singlink/oka.hpp"

#include <string>
#include <utility>

namespace singlink {

namespace {

Int mod_pos(const Int& a, const Int& n) {
  Int r = a % n;
  if (r < 0) r += n;
  return r;
}

// c = (to + lambda*from)/det, integral by the choice of lambda
IVec3 chain_c(const IVec3& from, const IVec3& to, const ChainSpec& cs) {
  IVec3 c;
  for (int i = 0; i < 3; ++i) c[i] = (to[i] + cs.lambda * from[i]) / cs.det;
  return c;
}

}  // namespace

ChainSpec chain_between(const IVec3& from, const IVec3& to, Int mult) {
  if (content(from) != 1 || content(to) != 1)
    throw input_error("chain normals must be primitive");
  ChainSpec cs;
  cs.det = face_det(from, to);
  cs.lambda = 0;
  cs.mult = std::move(mult);
  if (cs.det == 1) return cs;
  for (Int s = 1; s < cs.det; ++s) {
    bool integral = true;
    for (int i = 0; i < 3 && integral; ++i)
      integral = mod_pos(to[i] + s * from[i], cs.det) == 0;
    if (integral) {
      cs.lambda = s;
      break;
    }
  }
  if (cs.lambda == 0)
    throw construction_error("no chain between " + str(from) + " and " +
                             str(to));
  cs.weights = neg_cont_frac(cs.det, cs.lambda);
  return cs;
}

Int self_intersection(const Diagram& d, int face) {
  if (face < 0 || face >= d.n_compact)
    throw input_error("face index does not name a compact face");
  const IVec3& n = d.faces[face].n;
  IVec3 acc(0, 0, 0);
  for (const DEdge& e : d.edges) {
    if (e.f1 != face && e.f2 != face) continue;
    int other = e.f1 == face ? e.f2 : e.f1;
    ChainSpec cs = chain_between(n, d.faces[other].n, e.mult);
    IVec3 c = chain_c(n, d.faces[other].n, cs);
    for (int i = 0; i < 3; ++i) acc[i] += e.mult * c[i];
  }
  Int b = 0;
  for (int i = 0; i < 3; ++i) {
    if (n[i] == 0 || acc[i] % n[i] != 0)
      throw construction_error("face equation has no integral solution at " +
                               str(n));
    Int bi = -acc[i] / n[i];
    if (i > 0 && bi != b)
      throw construction_error("face equation coordinates disagree at " +
                               str(n));
    b = bi;
  }
  if (b > -1)
    throw construction_error("face decoration " + str(b) + " at " + str(n) +
                             " is not negative");
  return b;
}

ResolutionGraph oka_graph(const Diagram& d) {
  require_valid(d);
  if (auto w = qhs_witness(d))
    throw construction_error("boundary has the strictly positive point " +
                             str(*w));
  ResolutionGraph g;
  if (d.n_compact == 0) {
    // segment: one edge between its two supporting planes, endpoints gone
    if (d.edges.size() != 1 || d.edges[0].mult != 1)
      throw construction_error("degenerate boundary is not a segment");
    const DEdge& e = d.edges[0];
    ChainSpec cs = chain_between(d.faces[e.f1].n, d.faces[e.f2].n, e.mult);
    for (const Int& w : cs.weights) g.b.push_back(-w);
    for (int i = 0; i + 1 < g.size(); ++i) g.edges.push_back({i, i + 1});
    return g;
  }
  for (int f = 0; f < d.n_compact; ++f)
    g.b.push_back(self_intersection(d, f));
  for (const DEdge& e : d.edges) {
    int from = e.f1, to = e.f2;
    if (from >= d.n_compact) std::swap(from, to);
    if (from >= d.n_compact)
      throw construction_error("edge off the compact part of the boundary");
    ChainSpec cs = chain_between(d.faces[from].n, d.faces[to].n, e.mult);
    bool keep_far = to < d.n_compact;
    for (Int copy = 0; copy < e.mult; ++copy) {
      int prev = from;
      for (const Int& w : cs.weights) {
        g.b.push_back(-w);
        g.edges.push_back({prev, g.size() - 1});
        prev = g.size() - 1;
      }
      if (keep_far) g.edges.push_back({prev, to});
    }
  }
  for (auto& e : g.edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  return g;
}

}  // namespace singlink
