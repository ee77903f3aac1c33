#include "singlink/lattice.hpp"

#include <algorithm>
#include <utility>

namespace singlink {

Int gcd3(const Int& a, const Int& b, const Int& c) {
  return igcd(igcd(a, b), c);
}

Int content(const IVec3& v) { return gcd3(v[0], v[1], v[2]); }

IVec3 primitive(const IVec3& v) {
  Int g = content(v);
  if (g == 0) throw construction_error("primitive: zero vector");
  return {v[0] / g, v[1] / g, v[2] / g};
}

bool strictly_positive(const IVec3& v) {
  return v[0] > 0 && v[1] > 0 && v[2] > 0;
}

bool nonnegative(const IVec3& v) {
  return v[0] >= 0 && v[1] >= 0 && v[2] >= 0;
}

ExtGcd ext_gcd(Int a, Int b) {
  // invariant: r0 = x0*a + y0*b, r1 = x1*a + y1*b
  Int r0 = a, r1 = b;
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;  // truncated division keeps the invariant
    r0 -= q * r1;
    x0 -= q * x1;
    y0 -= q * y1;
    std::swap(r0, r1);
    std::swap(x0, x1);
    std::swap(y0, y1);
  }
  if (r0 < 0) {
    r0 = -r0;
    x0 = -x0;
    y0 = -y0;
  }
  return {r0, x0, y0};
}

Plane plane_through(const IVec3& a, const IVec3& b, const IVec3& c) {
  IVec3 n0 = cross(b - a, c - a);
  if (is_zero(n0)) throw construction_error("plane_through: collinear points");
  IVec3 n = primitive(n0);
  Int m = dot(n, a);
  if (m == 0) throw construction_error("plane_through: plane passes through the origin");
  if (m < 0) {
    n = -n;
    m = -m;
  }
  return {n, m};
}

Int face_det(const IVec3& f1, const IVec3& f2) {
  IVec3 x = cross(f1, f2);
  if (is_zero(x)) throw construction_error("face_det: parallel normals");
  return content(x);
}

IVec3 empty_triangle_normal(const IVec3& a, const IVec3& b, const IVec3& c) {
  if (content(cross(b - a, c - a)) != 1)
    throw construction_error("empty_triangle_normal: triangle not empty");
  return plane_through(a, b, c).n;
}

IVec3 edge_vector(const IVec3& f1, const IVec3& f2, const Int& m) {
  IVec3 x = cross(f1, f2);
  if (is_zero(x)) throw construction_error("edge_vector: parallel normals");
  return m * primitive(x);
}

Int det_via_vertex(const IVec3& a, const IVec3& f_adj, const Int& m,
                   const Int& g) {
  if (m <= 0 || g <= 0) throw construction_error("det_via_vertex: m, g must be positive");
  Int num = m * dot(a, f_adj);
  if (num <= 0) throw construction_error("det_via_vertex: non-positive product");
  if (num % g != 0) throw construction_error("det_via_vertex: product not divisible by the area");
  return num / g;
}

Int crossing_edge_det(const IVec3& f_compact) {
  if (f_compact[2] <= 0)
    throw construction_error("crossing_edge_det: third normal coordinate not positive");
  return f_compact[2];
}

PlaneSide plane_side_test(const Int& leg1, const Int& leg2, const Int& t) {
  if (leg1 <= 0 || leg2 <= 0 || t <= 0)
    throw construction_error("plane_side_test: inputs must be positive");
  bool same = leg1 == leg2 && t % leg1 == 0;
  bool other = gcd3(leg1, leg2, t) == 1;
  if (same == other) throw construction_error("plane_side_test: conditions not mutually exclusive");
  return same ? PlaneSide::SamePlane : PlaneSide::OtherPlane;
}

std::vector<Int> neg_cont_frac(Int t, Int s) {
  if (!(s > 0 && s < t)) throw construction_error("neg_cont_frac: need 0 < s < t");
  std::vector<Int> out;
  while (s > 0) {
    Int b = (t + s - 1) / s;  // ceil, both positive
    out.push_back(b);
    Int next = b * s - t;
    t = s;
    s = next;
  }
  return out;
}

Rat eval_neg_cont_frac(const std::vector<Int>& b) {
  if (b.empty()) throw construction_error("eval_neg_cont_frac: empty");
  Rat val = b.back();
  for (auto it = b.rbegin() + 1; it != b.rend(); ++it) {
    if (val == 0) throw construction_error("eval_neg_cont_frac: zero sub-expression");
    val = Rat(*it) - 1 / val;
  }
  return val;
}

PlaneLattice plane_lattice(const IVec3& n, const Int& m) {
  if (content(n) != 1) throw construction_error("plane_lattice: normal not primitive");
  if (n[0] == 0 && n[1] == 0) {
    // n = (0,0,+-1)
    return {{0, 0, m * n[2]}, {1, 0, 0}, {0, 1, 0}};
  }
  ExtGcd e12 = ext_gcd(n[0], n[1]);       // g = gcd(n0,n1) > 0
  ExtGcd e3 = ext_gcd(e12.g, n[2]);       // e3.g == 1 since n primitive
  IVec3 p0 = m * IVec3{e3.x * e12.x, e3.x * e12.y, e3.y};
  IVec3 u{-n[1] / e12.g, n[0] / e12.g, 0};
  IVec3 v{e12.x * n[2], e12.y * n[2], -e12.g};
  return {p0, u, v};
}

namespace {

// orientation sign shared by all edges of a convex polygon in cyclic order;
// validates convexity and the cyclic ordering as a side effect
int cycle_orientation(const std::vector<IVec3>& poly, const IVec3& n) {
  std::size_t k = poly.size();
  if (k < 3) throw construction_error("polygon: fewer than 3 vertices");
  int sign = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const IVec3& a = poly[i];
    const IVec3& b = poly[(i + 1) % k];
    const IVec3& c = poly[(i + 2) % k];
    Int d = dot(cross(b - a, c - b), n);
    if (d == 0) continue;  // collinear run is allowed
    int s = d > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    else if (sign != s) throw construction_error("polygon: not convex in cyclic order");
  }
  if (sign == 0) throw construction_error("polygon: degenerate");
  return sign;
}

}  // namespace

Int comb_area(const std::vector<IVec3>& poly) {
  Plane pl = plane_through(poly[0], poly[1], poly[2]);
  cycle_orientation(poly, pl.n);
  Int total = 0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i)
    total += content(cross(poly[i] - poly[0], poly[i + 1] - poly[0]));
  return total;
}

bool polygon_contains(const std::vector<IVec3>& poly, const Plane& pl,
                      const IVec3& num, const Int& den) {
  if (den <= 0) throw construction_error("polygon_contains: need den > 0");
  if (dot(pl.n, num) != den * pl.m)
    throw construction_error("polygon_contains: point off the plane");
  int sign = cycle_orientation(poly, pl.n);
  std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    const IVec3& a = poly[i];
    const IVec3& b = poly[(i + 1) % k];
    Int d = dot(cross(b - a, num - den * a), pl.n);
    if (sign * d < 0) return false;
  }
  return true;
}

std::vector<IVec3> polygon_lattice_points(const std::vector<IVec3>& poly,
                                          const Plane& pl) {
  if (poly.size() < 3)
    throw construction_error("polygon_lattice_points: fewer than 3 vertices");
  PlaneLattice pb = plane_lattice(pl.n, pl.m);
  Int den = dot(cross(pb.u, pb.v), pl.n);  // +-<n,n>, nonzero
  // plane coordinates of the vertices
  Int slo, shi, tlo, thi;
  bool first = true;
  for (const IVec3& p : poly) {
    IVec3 d = p - pb.p0;
    Int s = dot(cross(d, pb.v), pl.n) / den;
    Int t = dot(cross(pb.u, d), pl.n) / den;
    if (first) {
      slo = shi = s;
      tlo = thi = t;
      first = false;
    } else {
      slo = std::min(slo, s);
      shi = std::max(shi, s);
      tlo = std::min(tlo, t);
      thi = std::max(thi, t);
    }
  }
  if ((shi - slo + 1) * (thi - tlo + 1) > 4000000)
    throw construction_error("polygon_lattice_points: polygon too large");
  std::vector<IVec3> out;
  for (Int s = slo; s <= shi; ++s)
    for (Int t = tlo; t <= thi; ++t) {
      IVec3 p = pb.p0 + s * pb.u + t * pb.v;
      if (polygon_contains(poly, pl, p, 1)) out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IVec3> segment_lattice_points(const IVec3& a, const IVec3& b) {
  if (a == b) return {a};
  IVec3 d = b - a;
  Int g = content(d);
  IVec3 step = primitive(d);
  std::vector<IVec3> out;
  for (Int k = 0; k <= g; ++k) out.push_back(a + k * step);
  return out;
}

}  // namespace singlink
