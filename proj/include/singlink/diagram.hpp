#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singlink/lattice.hpp"

namespace singlink {

// face of the boundary; non-compact faces keep their supporting plane and
// the corners they share with the compact part
struct DFace {
  std::vector<IVec3> verts;  // corners in convex cyclic order
  IVec3 n;                   // primitive inner normal, <n,x> >= m on the support
  Int m;
  bool compact = false;

  bool triangle() const { return verts.size() == 3; }
};

// coordinate-plane: contained in some z_i = 0; crossing: permutes to
// [(p,0,a),(0,q,b)] with p,q > 0, a+b > 0; other: anything else (only
// possible when the boundary has strictly positive lattice points)
enum class EdgeKind { CoordinatePlane, Crossing, Other };

struct DEdge {
  IVec3 a, b;      // endpoints, a < b
  int f1, f2;      // adjacent faces, f1 < f2
  Int det;         // determinant of the adjacent normals
  Int mult;        // components of the edge after deleting non-positive points
  bool boundary;   // on at most one compact face
  EdgeKind kind;
};

struct Diagram {
  std::vector<IVec3> support;  // defining points, sorted, deduplicated
  std::vector<IVec3> verts;    // boundary vertices, sorted
  std::vector<DFace> faces;    // compact faces first, each group sorted
  std::vector<DEdge> edges;    // sorted by endpoints
  int n_compact = 0;
};

// the union of compact faces of the positive hull of the support;
// degenerates gracefully to an edge-only or vertex-only diagram
Diagram newton_boundary(const std::vector<IVec3>& support);

// rebuild in permuted coordinates
Diagram permute(const Diagram& d, const Perm& p);

// equality of the boundaries as sets (vertices, edges, compact faces);
// supports may differ
bool same_boundary(const Diagram& d1, const Diagram& d2);

bool contains(const Diagram& d, const IVec3& p);

// lattice points of the boundary: faces, edges and vertices; sorted
std::vector<IVec3> diagram_lattice_points(const Diagram& d);

struct IsolatedReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// the three conditions for an isolated singularity: no unit points on the
// boundary, a vertex on every coordinate plane, a vertex near every axis
IsolatedReport check_isolated(const Diagram& d);

// no lattice point of the boundary has all coordinates positive
bool check_qhs(const Diagram& d);
std::optional<IVec3> qhs_witness(const Diagram& d);

// throws construction_error listing every violated condition
void require_valid(const Diagram& d);

// trapezoid data in a recorded coordinate permutation sigma:
// sigma maps the face to A=(p,0,n), B=(0,q,n), C=(r1,r2+t*q,0),
// D=(r1+t*p,r2,0) with gcd(p,q)=1, t>=1, r1,r2>=0, n>=1; the base CD is
// the only side with interior lattice points (t-1 of them); corner fields
// hold the original coordinates
struct TrapezoidParams {
  Perm perm;
  Int p, q, n, t, r1, r2;
  IVec3 A, B, C, D;
};

// every way the face matches the trapezoid parameterization, best first
// (sides with interior lattice points preferred, then least base plane);
// empty when the face is not a quadrilateral
std::vector<TrapezoidParams> trapezoid_fits(const DFace& f);

// nullopt for a triangle; throws construction_error when the face fits
// neither shape (the support cannot belong to a valid diagram)
std::optional<TrapezoidParams> classify_face(const DFace& f);

// edge matches [(p,0,a),(0,q,b)] with the zero pattern on the two
// coordinates other than axis, p,q > 0, a+b > 0
bool crossing_for_axis(const IVec3& a, const IVec3& b, int axis);

// one endpoint on a coordinate axis, the other on the opposite plane
bool is_central_edge(const IVec3& a, const IVec3& b);

// trapezoids always; triangles iff no two coordinate planes cover the corners
bool is_central_face(const DFace& f);

// indices of central edges / the central face of a valid diagram
std::vector<int> central_edges(const Diagram& d);
std::optional<int> central_face(const Diagram& d);

// arm in one axis direction: the chain of triangles between the axis and
// the central object, plus the crossing edges of that axis. A degenerate
// arm has no triangles and exactly one crossing edge.
struct Arm {
  int axis = 0;
  std::vector<int> tris;        // face indices, hand (nearest axis) first
  std::vector<int> cross_edges; // edge indices, nearest axis first
  bool degenerate() const { return tris.empty(); }
  int shoulder() const { return cross_edges.back(); }
};

// arms present on the diagram, at most one per axis, ordered by axis
std::vector<Arm> arms(const Diagram& d);

enum class Family { Square, Triangle, CentralEdge, Segment };

struct StructureClass {
  Family family = Family::Segment;
  int hands = 0;  // arms with at least one triangle

  bool operator==(const StructureClass&) const = default;
};

std::string str(const StructureClass& sc);

// structure of a minimal representative (any valid diagram for Segment)
StructureClass structure_class(const Diagram& d);

}  // namespace singlink
