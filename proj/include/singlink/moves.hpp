#pragma once

#include <optional>
#include <vector>

#include "singlink/diagram.hpp"

namespace singlink {

// Moves transform a valid diagram into a valid diagram with the same link.
// M1 adds or removes a triangular face hanging off an axis edge; M2 grows
// or cuts a single face across an axis edge.  A move is stored with enough
// data to apply it by rebuilding the boundary from the adjusted support.
enum class MoveKind { M1Plus, M1Minus, M2Plus, M2Minus };

const char* str(MoveKind k);

struct Move {
  MoveKind kind;
  // the axis edge of the diagram the move acts across, endpoints sorted
  IVec3 axis_a, axis_b;
  // lattice points joining the support (M1+/M2+) or leaving it (M1-/M2-)
  std::vector<IVec3> added, removed;

  bool operator==(const Move& o) const {
    return kind == o.kind && axis_a == o.axis_a && axis_b == o.axis_b &&
           added == o.added && removed == o.removed;
  }
  bool operator<(const Move& o) const;
};

// All applicable moves of the requested kinds whose result is again a valid
// diagram.  M2+ entries add one point at a time; larger extensions compose
// from them.  The input must satisfy the isolated-singularity conditions.
std::vector<Move> enumerate_moves(const Diagram& d,
                                  const std::vector<MoveKind>& kinds);
std::vector<Move> enumerate_moves(const Diagram& d);

// Applies mv and returns the resulting diagram; throws input_error when mv
// does not describe a legal move on d or the result leaves the class of
// valid diagrams with rational homology sphere link.
Diagram apply_move(const Diagram& d, const Move& mv);

// The move carrying `after` back to `before`, given after == apply_move(before, mv).
Move inverse_move(const Diagram& before, const Move& mv, const Diagram& after);

// Applies M1- moves until none remain; the face count is then minimal in
// the equivalence class.
Diagram m1_exhaust(const Diagram& d);

// Diagrams whose class contains a segment diagram are recognized by a
// criterion point on the boundary; their minimal representative is the
// segment [(0,1,1),(n,0,0)] itself.
bool segment_class(const Diagram& d);
Int segment_class_n(const Diagram& d);

// The maximal representative: M1- exhausted, then every face extended
// across its axes as far as validity allows.  Unique in the class; not
// defined for segment classes (throws input_error).
Diagram canonical(const Diagram& d);

// The distinguished minimal representative of the equivalence class, with
// coordinates permuted to the lexicographically least vertex set over all
// six permutations.  norm_perm, when given, receives the permutation used.
Diagram d_minimal(const Diagram& d, Perm* norm_perm = nullptr);

// Same link up to orientation-preserving diffeomorphism, decided through
// the minimal representatives.
bool equivalent(const Diagram& d1, const Diagram& d2);

// Every boundary edge has determinant > 1; holds exactly for the minimal
// representatives among valid diagrams.
bool det_criterion_check(const Diagram& d);

}  // namespace singlink
