#include "singlink/hull.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace singlink {

namespace {

// integer coordinates of on-plane points in the basis of pl
std::pair<Int, Int> plane_coords(const PlaneLattice& pl, const IVec3& n,
                                 const IVec3& x) {
  IVec3 d = x - pl.p0;
  Int den = dot(cross(pl.u, pl.v), n);
  Int s_num = dot(cross(d, pl.v), n);
  Int t_num = dot(cross(pl.u, d), n);
  if (den == 0 || s_num % den != 0 || t_num % den != 0)
    throw construction_error("convex_hull_facets: point off the facet lattice");
  return {s_num / den, t_num / den};
}

Int cross2(const std::pair<Int, Int>& o, const std::pair<Int, Int>& a,
           const std::pair<Int, Int>& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

// corners of the 2D convex hull in cyclic order; collinear points dropped
std::vector<int> chain_hull(const std::vector<std::pair<Int, Int>>& q) {
  std::vector<int> idx(q.size());
  for (size_t i = 0; i < q.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return q[a] < q[b]; });

  auto build = [&](auto begin, auto end) {
    std::vector<int> h;
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= 2 &&
             cross2(q[h[h.size() - 2]], q[h.back()], q[*it]) <= 0)
        h.pop_back();
      h.push_back(*it);
    }
    return h;
  };
  std::vector<int> lower = build(idx.begin(), idx.end());
  std::vector<int> upper = build(idx.rbegin(), idx.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

// all points must lie on <n,x> = m or strictly above
HullFacet make_facet(const IVec3& n, const Int& m,
                     const std::vector<IVec3>& pts) {
  std::vector<IVec3> on;
  for (const IVec3& x : pts) {
    Int v = dot(n, x);
    if (v < m) throw construction_error("convex_hull_facets: support check failed");
    if (v == m) on.push_back(x);
  }
  PlaneLattice pl = plane_lattice(n, m);
  std::vector<std::pair<Int, Int>> q;
  q.reserve(on.size());
  for (const IVec3& x : on) q.push_back(plane_coords(pl, n, x));
  std::vector<int> corners = chain_hull(q);
  if (corners.size() < 3)
    throw construction_error("convex_hull_facets: degenerate facet");

  HullFacet f;
  f.n = n;
  f.m = m;
  for (int i : corners) f.verts.push_back(on[i]);
  // rotate the cycle so it starts at the lexicographically least corner
  size_t lo = 0;
  for (size_t i = 1; i < f.verts.size(); ++i)
    if (f.verts[i] < f.verts[lo]) lo = i;
  std::rotate(f.verts.begin(), f.verts.begin() + lo, f.verts.end());
  return f;
}

HullFacet first_facet(const std::vector<IVec3>& pts) {
  const IVec3& v0 = pts[0];  // lexicographically least
  for (size_t i = 1; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      IVec3 n0 = cross(pts[i] - v0, pts[j] - v0);
      if (is_zero(n0)) continue;
      bool pos = false, neg = false;
      for (const IVec3& x : pts) {
        Int s = dot(n0, x - v0);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
        if (pos && neg) break;
      }
      if (pos && neg) continue;
      if (neg) n0 = -n0;
      IVec3 n = primitive(n0);
      return make_facet(n, dot(n, v0), pts);
    }
  }
  throw construction_error("convex_hull_facets: no supporting plane found");
}

}  // namespace

std::vector<HullFacet> convex_hull_facets(const std::vector<IVec3>& pts_in) {
  std::vector<IVec3> pts = pts_in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 4)
    throw construction_error("convex_hull_facets: need a full-dimensional set");

  {
    // full-dimensionality check
    bool full = false;
    for (size_t i = 1; i < pts.size() && !full; ++i)
      for (size_t j = i + 1; j < pts.size() && !full; ++j) {
        IVec3 n0 = cross(pts[i] - pts[0], pts[j] - pts[0]);
        if (is_zero(n0)) continue;
        for (size_t k = 1; k < pts.size(); ++k)
          if (dot(n0, pts[k] - pts[0]) != 0) {
            full = true;
            break;
          }
        break;  // one independent pair settles it either way
      }
    if (!full)
      throw construction_error("convex_hull_facets: need a full-dimensional set");
  }

  std::vector<HullFacet> facets;
  std::set<std::pair<IVec3, Int>> seen_planes;
  std::map<std::pair<IVec3, IVec3>, std::vector<int>> edge_facets;
  std::deque<std::pair<IVec3, IVec3>> open;

  auto add_facet = [&](HullFacet f) {
    auto key = std::make_pair(f.n, f.m);
    if (!seen_planes.insert(key).second)
      throw construction_error("convex_hull_facets: facet found twice");
    int id = static_cast<int>(facets.size());
    facets.push_back(std::move(f));
    const auto& vs = facets[id].verts;
    for (size_t i = 0; i < vs.size(); ++i) {
      const IVec3& a = vs[i];
      const IVec3& b = vs[(i + 1) % vs.size()];
      auto ek = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      auto& owners = edge_facets[ek];
      owners.push_back(id);
      if (owners.size() == 1) open.push_back(ek);
      if (owners.size() > 2)
        throw construction_error("convex_hull_facets: edge on three facets");
    }
  };

  add_facet(first_facet(pts));

  while (!open.empty()) {
    auto ek = open.front();
    open.pop_front();
    const auto& owners = edge_facets[ek];
    if (owners.size() == 2) continue;
    const HullFacet& f = facets[owners[0]];
    const IVec3& a = ek.first;
    const IVec3& b = ek.second;
    IVec3 dir = b - a;

    // reference corner of the known facet, off the edge line
    IVec3 fstar;
    bool found_ref = false;
    for (const IVec3& v : f.verts)
      if (!is_zero(cross(dir, v - a))) {
        fstar = v;
        found_ref = true;
        break;
      }
    if (!found_ref)
      throw construction_error("convex_hull_facets: facet has no interior corner");

    // pivot to the facet on the other side of the edge
    auto orient = [&](IVec3 nc) {
      if (dot(nc, fstar - a) < 0) nc = -nc;
      return nc;
    };
    bool have = false;
    IVec3 nc;
    for (const IVec3& q : pts) {
      if (is_zero(cross(dir, q - a))) continue;
      if (dot(f.n, q) == f.m) continue;  // on the known facet
      if (!have) {
        nc = orient(cross(dir, q - a));
        have = true;
      } else if (dot(nc, q - a) < 0) {
        nc = orient(cross(dir, q - a));
      }
    }
    if (!have)
      throw construction_error("convex_hull_facets: open edge has no second facet");
    IVec3 n = primitive(nc);
    add_facet(make_facet(n, dot(n, a), pts));
  }

  for (const auto& [ek, owners] : edge_facets)
    if (owners.size() != 2)
      throw construction_error("convex_hull_facets: edge graph did not close");

  std::sort(facets.begin(), facets.end(), [](const HullFacet& x, const HullFacet& y) {
    return std::tie(x.n.c, x.m) < std::tie(y.n.c, y.m);
  });
  return facets;
}

}  // namespace singlink
