#include "singlink/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "singlink/hull.hpp"

namespace singlink {

namespace {

IVec3 unit_vec(int i) {
  IVec3 e;
  e[i] = 1;
  return e;
}

EdgeKind edge_kind(const IVec3& a, const IVec3& b) {
  for (int i = 0; i < 3; ++i)
    if (a[i] == 0 && b[i] == 0) return EdgeKind::CoordinatePlane;
  for (int k = 0; k < 3; ++k)
    if (crossing_for_axis(a, b, k)) return EdgeKind::Crossing;
  return EdgeKind::Other;
}

Int edge_mult(const IVec3& a, const IVec3& b) {
  // components of the segment after deleting non-positive lattice points;
  // removing an endpoint does not disconnect, an interior point does
  std::vector<IVec3> pts = segment_lattice_points(a, b);
  Int cut = 0;
  for (size_t i = 1; i + 1 < pts.size(); ++i)
    if (!strictly_positive(pts[i])) ++cut;
  return cut + 1;
}

bool on_segment(const IVec3& a, const IVec3& b, const IVec3& p) {
  if (!is_zero(cross(b - a, p - a))) return false;
  Int t = dot(p - a, b - a);
  return t >= 0 && t <= dot(b - a, b - a);
}

}  // namespace

Diagram newton_boundary(const std::vector<IVec3>& support_in) {
  if (support_in.empty()) throw input_error("newton_boundary: empty support");
  std::vector<IVec3> support = support_in;
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  Int maxc = 0;
  for (const IVec3& s : support)
    for (int i = 0; i < 3; ++i) {
      if (s[i] < 0) throw input_error("newton_boundary: negative coordinate");
      maxc = std::max(maxc, s[i]);
    }

  // bound the positive hull: beyond M the artificial faces cannot interfere
  // with genuine ones
  Int M = 3 * maxc + 3;
  std::vector<IVec3> bounded = support;
  for (const IVec3& s : support)
    for (int i = 0; i < 3; ++i) bounded.push_back(s + M * unit_vec(i));
  std::vector<HullFacet> hull = convex_hull_facets(bounded);

  std::set<IVec3> sset(support.begin(), support.end());
  auto original = [&](const IVec3& p) { return sset.count(p) > 0; };

  // keep facets with nonnegative normals; compact ones are strictly positive
  std::vector<DFace> compact, noncompact;
  std::vector<const HullFacet*> kept_src;
  for (const HullFacet& hf : hull) {
    if (!nonnegative(hf.n)) {
      for (const IVec3& v : hf.verts)
        if (original(v))
          throw construction_error("newton_boundary: support point on an artificial facet");
      continue;
    }
    DFace f;
    f.n = hf.n;
    f.m = hf.m;
    f.compact = strictly_positive(hf.n);
    if (f.compact) {
      for (const IVec3& v : hf.verts)
        if (!original(v))
          throw construction_error("newton_boundary: artificial point on a compact facet");
      f.verts = hf.verts;
      compact.push_back(std::move(f));
    } else {
      for (const IVec3& v : hf.verts)
        if (original(v)) f.verts.push_back(v);
      noncompact.push_back(std::move(f));
    }
    (void)kept_src;
  }
  auto face_less = [](const DFace& x, const DFace& y) {
    return std::tie(x.n.c, x.m) < std::tie(y.n.c, y.m);
  };
  std::sort(compact.begin(), compact.end(), face_less);
  std::sort(noncompact.begin(), noncompact.end(), face_less);

  Diagram d;
  d.support = support;
  d.n_compact = static_cast<int>(compact.size());
  d.faces = std::move(compact);
  d.faces.insert(d.faces.end(), noncompact.begin(), noncompact.end());

  auto face_index = [&](const IVec3& n, const Int& m) {
    for (size_t i = 0; i < d.faces.size(); ++i)
      if (d.faces[i].n == n && d.faces[i].m == m) return static_cast<int>(i);
    return -1;
  };

  // edges of the boundary: hull edges between two support points
  std::map<std::pair<IVec3, IVec3>, std::vector<int>> owners;
  for (const HullFacet& hf : hull) {
    int fi = face_index(hf.n, hf.m);
    for (size_t i = 0; i < hf.verts.size(); ++i) {
      const IVec3& a = hf.verts[i];
      const IVec3& b = hf.verts[(i + 1) % hf.verts.size()];
      if (!original(a) || !original(b)) continue;
      auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      owners[key].push_back(fi);
    }
  }
  for (const auto& [key, fs] : owners) {
    if (fs.size() != 2 || fs[0] < 0 || fs[1] < 0)
      throw construction_error("newton_boundary: boundary edge without two faces");
    DEdge e;
    e.a = key.first;
    e.b = key.second;
    e.f1 = std::min(fs[0], fs[1]);
    e.f2 = std::max(fs[0], fs[1]);
    e.det = face_det(d.faces[e.f1].n, d.faces[e.f2].n);
    e.mult = edge_mult(e.a, e.b);
    e.boundary = !(d.faces[e.f1].compact && d.faces[e.f2].compact);
    e.kind = edge_kind(e.a, e.b);
    d.edges.push_back(std::move(e));
  }
  std::sort(d.edges.begin(), d.edges.end(), [](const DEdge& x, const DEdge& y) {
    return std::tie(x.a.c, x.b.c) < std::tie(y.a.c, y.b.c);
  });

  std::set<IVec3> vs;
  for (const DFace& f : d.faces)
    for (const IVec3& v : f.verts)
      if (original(v)) vs.insert(v);
  d.verts.assign(vs.begin(), vs.end());
  return d;
}

Diagram permute(const Diagram& d, const Perm& p) {
  std::vector<IVec3> s;
  s.reserve(d.support.size());
  for (const IVec3& v : d.support) s.push_back(apply_perm(p, v));
  return newton_boundary(s);
}

bool same_boundary(const Diagram& d1, const Diagram& d2) {
  if (d1.verts != d2.verts) return false;
  if (d1.n_compact != d2.n_compact) return false;
  for (int i = 0; i < d1.n_compact; ++i) {
    const DFace& f = d1.faces[i];
    const DFace& g = d2.faces[i];
    if (f.n != g.n || f.m != g.m || f.verts != g.verts) return false;
  }
  if (d1.edges.size() != d2.edges.size()) return false;
  for (size_t i = 0; i < d1.edges.size(); ++i)
    if (d1.edges[i].a != d2.edges[i].a || d1.edges[i].b != d2.edges[i].b)
      return false;
  return true;
}

bool contains(const Diagram& d, const IVec3& p) {
  for (int i = 0; i < d.n_compact; ++i) {
    const DFace& f = d.faces[i];
    if (dot(f.n, p) != f.m) continue;
    if (polygon_contains(f.verts, Plane{f.n, f.m}, p, 1)) return true;
  }
  for (const DEdge& e : d.edges)
    if (on_segment(e.a, e.b, p)) return true;
  return std::binary_search(d.verts.begin(), d.verts.end(), p);
}

std::vector<IVec3> diagram_lattice_points(const Diagram& d) {
  std::set<IVec3> pts(d.verts.begin(), d.verts.end());
  for (const DEdge& e : d.edges)
    for (const IVec3& p : segment_lattice_points(e.a, e.b)) pts.insert(p);
  for (int i = 0; i < d.n_compact; ++i) {
    const DFace& f = d.faces[i];
    for (const IVec3& p : polygon_lattice_points(f.verts, Plane{f.n, f.m}))
      pts.insert(p);
  }
  return {pts.begin(), pts.end()};
}

IsolatedReport check_isolated(const Diagram& d) {
  IsolatedReport r;
  const IVec3 low[4] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  for (const IVec3& p : low)
    if (contains(d, p)) {
      r.ok = false;
      r.violations.push_back("point " + str(p) + " lies on the boundary");
    }
  for (int i = 0; i < 3; ++i) {
    bool on_plane = false, near_axis = false;
    for (const IVec3& v : d.verts) {
      if (v[i] == 0) on_plane = true;
      if (coord_sum(v) - v[i] <= 1) near_axis = true;
    }
    if (!on_plane) {
      r.ok = false;
      r.violations.push_back("no vertex on the coordinate plane z" +
                             std::to_string(i + 1) + " = 0");
    }
    if (!near_axis) {
      r.ok = false;
      r.violations.push_back("no vertex within distance 1 of the z" +
                             std::to_string(i + 1) + " axis");
    }
  }
  return r;
}

std::optional<IVec3> qhs_witness(const Diagram& d) {
  for (const IVec3& p : diagram_lattice_points(d))
    if (strictly_positive(p)) return p;
  return std::nullopt;
}

bool check_qhs(const Diagram& d) { return !qhs_witness(d).has_value(); }

void require_valid(const Diagram& d) {
  IsolatedReport r = check_isolated(d);
  std::vector<std::string> v = r.violations;
  if (auto w = qhs_witness(d))
    v.push_back("boundary point " + str(*w) +
                " has all coordinates positive (link is not a rational homology sphere)");
  if (v.empty()) return;
  std::ostringstream os;
  os << "invalid diagram:";
  for (const std::string& s : v) os << "\n  " << s;
  throw construction_error(os.str());
}

std::vector<TrapezoidParams> trapezoid_fits(const DFace& f) {
  if (!f.compact)
    throw construction_error("classify_face: non-compact face");
  if (f.verts.size() != 4) return {};

  const auto& c = f.verts;
  auto dir = [&](int i) { return c[(i + 1) % 4] - c[i]; };
  auto parallel_to_opposite = [&](int i) {
    return is_zero(cross(dir(i), dir((i + 2) % 4)));
  };
  auto side_plane = [&](int i) {
    for (int k = 0; k < 3; ++k)
      if (c[i][k] == 0 && c[(i + 1) % 4][k] == 0) return k;
    return -1;
  };

  // the bottom lies on a coordinate plane and is parallel to the top;
  // prefer a side with interior lattice points, then the least plane
  std::vector<TrapezoidParams> fits;
  auto better = [&](const TrapezoidParams& a, const TrapezoidParams& b) {
    Int athick = content(a.D - a.C) > 1 ? 0 : 1;
    Int bthick = content(b.D - b.C) > 1 ? 0 : 1;
    return std::tie(athick, a.perm[2], a.p, a.q, a.r1, a.r2) <
           std::tie(bthick, b.perm[2], b.p, b.q, b.r1, b.r2);
  };
  for (int base = 0; base < 4; ++base) {
    if (!parallel_to_opposite(base)) continue;
    int pl = side_plane(base);
    if (pl < 0) continue;
    const IVec3& bc0 = c[base];
    const IVec3& bc1 = c[(base + 1) % 4];
    const IVec3& t0 = c[(base + 2) % 4];  // adjacent to bc1
    const IVec3& t1 = c[(base + 3) % 4];  // adjacent to bc0
    Int t = content(dir(base));

    for (int ord = 0; ord < 2; ++ord) {
      Perm sigma{};
      sigma[2] = pl;
      int rest[2], ri = 0;
      for (int k = 0; k < 3; ++k)
        if (k != pl) rest[ri++] = k;
      sigma[0] = ord == 0 ? rest[0] : rest[1];
      sigma[1] = ord == 0 ? rest[1] : rest[0];

      IVec3 ib0 = apply_perm(sigma, bc0), ib1 = apply_perm(sigma, bc1);
      if (ib0[0] == ib1[0]) continue;
      // D is the base corner with the larger first coordinate, A its neighbor
      bool d_is_b1 = ib1[0] > ib0[0];
      IVec3 iD = d_is_b1 ? ib1 : ib0;
      IVec3 iC = d_is_b1 ? ib0 : ib1;
      IVec3 iA = apply_perm(sigma, d_is_b1 ? t0 : t1);
      IVec3 iB = apply_perm(sigma, d_is_b1 ? t1 : t0);

      if (iA[1] != 0 || iB[0] != 0) continue;
      Int p = iA[0], q = iB[1], n = iA[2];
      if (p <= 0 || q <= 0 || n <= 0 || iB[2] != n) continue;
      if (igcd(p, q) != 1) continue;
      Int r1 = iC[0], r2 = iD[1];
      if (r1 < 0 || r2 < 0) continue;
      if (iD[0] != r1 + t * p || iC[1] != r2 + t * q) continue;

      TrapezoidParams tp;
      tp.perm = sigma;
      tp.p = p;
      tp.q = q;
      tp.n = n;
      tp.t = t;
      tp.r1 = r1;
      tp.r2 = r2;
      tp.A = d_is_b1 ? t0 : t1;
      tp.B = d_is_b1 ? t1 : t0;
      tp.C = d_is_b1 ? bc0 : bc1;
      tp.D = d_is_b1 ? bc1 : bc0;
      fits.push_back(tp);
    }
  }
  std::stable_sort(fits.begin(), fits.end(), better);
  return fits;
}

std::optional<TrapezoidParams> classify_face(const DFace& f) {
  std::vector<TrapezoidParams> fits = trapezoid_fits(f);
  if (f.verts.size() == 3) return std::nullopt;
  if (f.verts.size() != 4)
    throw construction_error(
        "classify_face: face is neither a triangle nor a trapezoid");
  if (fits.empty())
    throw construction_error("classify_face: face does not fit a trapezoid");
  return fits.front();
}

bool crossing_for_axis(const IVec3& a, const IVec3& b, int axis) {
  int i = (axis + 1) % 3, j = (axis + 2) % 3;
  const IVec3* u = &a;
  const IVec3* v = &b;
  for (int role = 0; role < 2; ++role) {
    if ((*u)[i] > 0 && (*u)[j] == 0 && (*v)[i] == 0 && (*v)[j] > 0 &&
        (*u)[axis] + (*v)[axis] > 0)
      return true;
    std::swap(u, v);
  }
  return false;
}

bool is_central_edge(const IVec3& a, const IVec3& b) {
  for (int k = 0; k < 3; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    if (a[i] == 0 && a[j] == 0 && a[k] > 0 && b[k] == 0) return true;
    if (b[i] == 0 && b[j] == 0 && b[k] > 0 && a[k] == 0) return true;
  }
  return false;
}

bool is_central_face(const DFace& f) {
  if (!f.compact) return false;
  if (f.verts.size() == 4) return true;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      bool covered = true;
      for (const IVec3& v : f.verts)
        if (v[i] != 0 && v[j] != 0) {
          covered = false;
          break;
        }
      if (covered) return false;
    }
  return true;
}

std::vector<int> central_edges(const Diagram& d) {
  std::vector<int> out;
  for (size_t i = 0; i < d.edges.size(); ++i)
    if (is_central_edge(d.edges[i].a, d.edges[i].b))
      out.push_back(static_cast<int>(i));
  return out;
}

std::optional<int> central_face(const Diagram& d) {
  std::optional<int> found;
  for (int i = 0; i < d.n_compact; ++i)
    if (is_central_face(d.faces[i])) {
      if (found)
        throw construction_error("central_face: two central faces");
      found = i;
    }
  return found;
}

std::vector<Arm> arms(const Diagram& d) {
  std::vector<Arm> out;
  if (d.n_compact == 0) return out;
  for (int k = 0; k < 3; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;

    Arm arm;
    arm.axis = k;
    std::vector<int> cedges;
    for (size_t e = 0; e < d.edges.size(); ++e)
      if (crossing_for_axis(d.edges[e].a, d.edges[e].b, k))
        cedges.push_back(static_cast<int>(e));
    if (cedges.empty()) continue;

    // each crossing edge spans a plane through the origin; nearer to the
    // axis means weakly on the axis side of the other edge's plane
    std::vector<IVec3> nrm(cedges.size());
    std::vector<int> sgn(cedges.size());
    for (size_t e = 0; e < cedges.size(); ++e) {
      nrm[e] = cross(d.edges[cedges[e]].a, d.edges[cedges[e]].b);
      if (nrm[e][k] == 0)
        throw construction_error("arms: crossing edge plane through the axis");
      sgn[e] = nrm[e][k] > 0 ? 1 : -1;
    }
    auto inside = [&](size_t e, const IVec3& x) {
      return sgn[e] * dot(nrm[e], x) >= 0;
    };
    auto edge_inside = [&](size_t x, size_t y) {
      return inside(y, d.edges[cedges[x]].a) && inside(y, d.edges[cedges[x]].b);
    };
    std::vector<std::pair<int, int>> level(cedges.size());
    for (size_t x = 0; x < cedges.size(); ++x) {
      level[x] = {0, static_cast<int>(x)};
      for (size_t y = 0; y < cedges.size(); ++y)
        if (x != y && edge_inside(x, y) && !edge_inside(y, x)) ++level[x].first;
    }
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (size_t e = 0; e < level.size(); ++e) {
      if (e > 0 && level[e - 1].first == level[e].first)
        throw construction_error("arms: crossing edges are not nested");
      arm.cross_edges.push_back(cedges[level[e].second]);
    }

    // triangles of the arm: corners on the two planes adjacent to the axis,
    // carrying a crossing edge; ordered from the axis outward
    std::vector<std::pair<int, int>> cands;  // (#edges it sits inside, face)
    for (int fi = 0; fi < d.n_compact; ++fi) {
      const DFace& f = d.faces[fi];
      if (!f.triangle()) continue;
      bool on_planes = true;
      for (const IVec3& v : f.verts)
        if (v[i] != 0 && v[j] != 0) {
          on_planes = false;
          break;
        }
      if (!on_planes) continue;
      bool has_cross = false;
      for (size_t s = 0; s < 3 && !has_cross; ++s)
        if (crossing_for_axis(f.verts[s], f.verts[(s + 1) % 3], k))
          has_cross = true;
      if (!has_cross) continue;
      int depth = 0;
      for (size_t e = 0; e < cedges.size(); ++e) {
        bool in = true;
        for (const IVec3& v : f.verts)
          if (!inside(e, v)) {
            in = false;
            break;
          }
        if (in) ++depth;
      }
      cands.push_back({depth, fi});
    }
    std::sort(cands.begin(), cands.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (size_t t = 0; t < cands.size(); ++t) {
      if (t > 0 && cands[t - 1].first == cands[t].first)
        throw construction_error("arms: triangles do not form a chain");
      arm.tris.push_back(cands[t].second);
    }
    // consecutive triangles meet along a crossing edge
    for (size_t t = 0; t + 1 < arm.tris.size(); ++t) {
      std::vector<IVec3> common;
      for (const IVec3& u : d.faces[arm.tris[t]].verts)
        for (const IVec3& v : d.faces[arm.tris[t + 1]].verts)
          if (u == v) common.push_back(u);
      if (common.size() != 2 || !crossing_for_axis(common[0], common[1], k))
        throw construction_error("arms: triangles do not form a chain");
    }

    if (arm.tris.empty() && arm.cross_edges.size() != 1)
      throw construction_error("arms: degenerate arm with several crossing edges");
    out.push_back(std::move(arm));
  }
  return out;
}

std::string str(const StructureClass& sc) {
  switch (sc.family) {
    case Family::Segment:
      return "segment";
    case Family::Square:
      return "square_" + std::to_string(sc.hands);
    case Family::Triangle:
      return "triangle_" + std::to_string(sc.hands);
    case Family::CentralEdge:
      return "central-edge_" + std::to_string(sc.hands);
  }
  return "unknown";
}

StructureClass structure_class(const Diagram& d) {
  if (d.n_compact == 0) return {Family::Segment, 0};
  int hands = 0;
  for (const Arm& a : arms(d))
    if (!a.degenerate()) ++hands;
  if (!central_edges(d).empty()) {
    if (d.n_compact == 1 && d.faces[0].triangle()) {
      bool on_axes = true;
      for (const IVec3& v : d.faces[0].verts) {
        int zeros = 0;
        for (int k = 0; k < 3; ++k)
          if (v[k] == 0) ++zeros;
        if (zeros < 2) on_axes = false;
      }
      if (on_axes) return {Family::Triangle, 0};
    }
    return {Family::CentralEdge, hands};
  }
  auto cf = central_face(d);
  if (!cf)
    throw construction_error("structure_class: no central face and no central edge");
  if (d.faces[*cf].verts.size() == 4) return {Family::Square, hands};
  return {Family::Triangle, hands};
}

}  // namespace singlink
