#pragma once

#include "singlink/diagram.hpp"

namespace singlink {

// all three are constant along legal move sequences
struct InvariantReport {
  Int milnor;
  Int geometric_genus;
  Int multiplicity;
};

// Milnor number: alternating sum of under-boundary volumes,
// 6*V3 - 2*V2 + V1 - 1, computed on the convenient completion (missed axes
// closed off by a distant point; the added simplices contribute zero)
Int milnor(const Diagram& d);

// number of strictly positive lattice points on or below the boundary of
// the convenient completion
Int geom_genus(const Diagram& d);

// smallest coordinate sum over the boundary
Int multiplicity(const Diagram& d);

InvariantReport invariants(const Diagram& d);

}  // namespace singlink
