#pragma once

#include <vector>

#include "singlink/lattice.hpp"

namespace singlink {

// facet of a full-dimensional integral polytope, described by its inward
// supporting plane: <n, x> >= m holds for every polytope point, with
// equality exactly on the facet; n is primitive
struct HullFacet {
  IVec3 n;
  Int m;
  std::vector<IVec3> verts;  // corner vertices in convex cyclic order
};

// all facets of conv(pts); requires a full-dimensional point set.
// Every facet is re-checked against the whole input before it is accepted,
// and the edge graph is verified to close up (each edge on exactly two
// facets), so a returned hull is correct by construction.
std::vector<HullFacet> convex_hull_facets(const std::vector<IVec3>& pts);

}  // namespace singlink
