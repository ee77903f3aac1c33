#pragma once

#include <vector>

#include "singlink/diagram.hpp"
#include "singlink/resgraph.hpp"

namespace singlink {

// string of exceptional curves between two adjacent face vertices; the
// weight list reads from the 'from' side and is empty for determinant one
struct ChainSpec {
  int from_face = -1, to_face = -1;
  Int det;                   // determinant of the two normals
  Int lambda;                // unique in (0,det) with (to + lambda*from)/det integral
  Int mult;                  // replication count
  std::vector<Int> weights;  // all >= 2
};

// requires primitive, non-parallel normals
ChainSpec chain_between(const IVec3& from, const IVec3& to, Int mult);

// decoration of a compact face vertex: the integer b with b*n plus the
// multiplicity-weighted sum of the chain vectors c equal to zero; the
// three coordinates must agree and b <= -1
Int self_intersection(const Diagram& d, int face);

// dual resolution graph: a vertex for every compact face, joined by the
// chain interiors; chains to non-compact faces lose their far end and
// become legs. A segment diagram yields the bare string between its two
// supporting planes. The first n_compact vertices are the face vertices,
// in face order.
ResolutionGraph oka_graph(const Diagram& d);

}  // namespace singlink
