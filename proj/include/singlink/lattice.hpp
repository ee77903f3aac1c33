#pragma once

#include <vector>

#include "singlink/base.hpp"

namespace singlink {

Int gcd3(const Int& a, const Int& b, const Int& c);

// gcd of the entries; 0 for the zero vector
Int content(const IVec3& v);

// v / content(v); error on the zero vector
IVec3 primitive(const IVec3& v);

bool strictly_positive(const IVec3& v);
bool nonnegative(const IVec3& v);

// g = gcd(a,b) together with x,y such that a*x + b*y = g, g >= 0
struct ExtGcd {
  Int g, x, y;
};
ExtGcd ext_gcd(Int a, Int b);

// { x : <n,x> = m } with n primitive and m > 0
struct Plane {
  IVec3 n;
  Int m;

  bool operator==(const Plane&) const = default;
};

// plane spanned by three non-collinear points, oriented so <n,a> = m > 0;
// error if the points are collinear or the plane passes through the origin
Plane plane_through(const IVec3& a, const IVec3& b, const IVec3& c);

// content of the cross product of two primitive normals; error if parallel
Int face_det(const IVec3& f1, const IVec3& f2);

// primitive normal of an empty lattice triangle, oriented so the scalar
// product with each vertex is positive; error if the triangle is degenerate,
// not empty, or its plane passes through the origin
IVec3 empty_triangle_normal(const IVec3& a, const IVec3& b, const IVec3& c);

// direction of the common edge of two faces with multiplicity m:
// (m / face_det(f1,f2)) * cross(f1,f2); the caller picks the orientation
IVec3 edge_vector(const IVec3& f1, const IVec3& f2, const Int& m);

// determinant of a triangle against an adjacent face: (m * <a,f_adj>) / g,
// where a points from the common edge to the third vertex and g is the
// triangle's combinatorial area; error unless the result is a positive integer
Int det_via_vertex(const IVec3& a, const IVec3& f_adj, const Int& m,
                   const Int& g);

// determinant of a crossing edge [(a,0,c),(0,1,b)] against its non-compact
// neighbor: the third coordinate of the compact face's normal; error if it
// is not positive
Int crossing_edge_det(const IVec3& f_compact);

// which coordinate plane the leg edges of two adjacent triangles lie on
enum class PlaneSide { SamePlane, OtherPlane };

// SamePlane iff the leg determinants agree and divide t; OtherPlane iff
// gcd(leg1, leg2, t) = 1; error when neither or both conditions hold
PlaneSide plane_side_test(const Int& leg1, const Int& leg2, const Int& t);

// t/s = b1 - 1/(b2 - 1/(... - 1/bk)), all bi >= 2; requires 0 < s < t
std::vector<Int> neg_cont_frac(Int t, Int s);

// evaluates the expansion above; error on a zero sub-expression
Rat eval_neg_cont_frac(const std::vector<Int>& b);

// point p0 on the plane plus a basis u,v of its direction lattice,
// cross(u,v) = +-n; requires n primitive
struct PlaneLattice {
  IVec3 p0, u, v;
};
PlaneLattice plane_lattice(const IVec3& n, const Int& m);

// 2*interior + boundary - 2 for a convex lattice polygon in cyclic order
Int comb_area(const std::vector<IVec3>& poly);

// closed membership test of the rational point num/den (den > 0, on the
// plane) in a convex polygon given in cyclic order
bool polygon_contains(const std::vector<IVec3>& poly, const Plane& pl,
                      const IVec3& num, const Int& den);

// all lattice points of the closed polygon, sorted
std::vector<IVec3> polygon_lattice_points(const std::vector<IVec3>& poly,
                                          const Plane& pl);

// lattice points of the closed segment [a,b], from a to b
std::vector<IVec3> segment_lattice_points(const IVec3& a, const IVec3& b);

}  // namespace singlink
