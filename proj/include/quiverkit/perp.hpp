#pragma once

// Perpendicular categories of real Schur roots and of perpendicular root
// sequences.  The right perpendicular category of W collects the V with
// Hom(W,V) = Ext(W,V) = 0; it is again a module category of an acyclic
// quiver with one vertex fewer, and these routines compute the dimension
// vectors of its simple objects.  Left-perpendicular versions are the exact
// duals (injectives instead of projectives, Euler arguments transposed).

#include <vector>

#include "quiverkit/homext.hpp"
#include "quiverkit/quiver.hpp"

namespace quiverkit {

struct RootSequence {
  std::vector<DimVector> roots;
  std::vector<Int> mults;  // empty means "all 1"; otherwise aligned, positive
};

struct LocalQuiver {
  Quiver quiver;         // arrow count i->j is delta_ij - <r_i, r_j>; loops allowed
  RootSequence source;   // the roots the vertices stand for (mults normalized)
  DimVector gamma;       // the multiplicities read as a dimension vector
};

// Requires pairwise generic hom to vanish (Err::HomNotTrivial otherwise)
// and every arrow count to be nonnegative (Err::NegativeArrowCount).
LocalQuiver local_quiver(const Quiver& q, const RootSequence& seq);

enum class Side { Right, Left };

// Dimension vectors of the n-1 simple objects of the perpendicular category
// of a real Schur root g, in perpendicular order.
std::vector<DimVector> perp_schur(const Quiver& q, const DimVector& g, Side side);

inline std::vector<DimVector> right_perp_schur(const Quiver& q, const DimVector& g) {
  return perp_schur(q, g, Side::Right);
}
inline std::vector<DimVector> left_perp_schur(const Quiver& q, const DimVector& g) {
  return perp_schur(q, g, Side::Left);
}

// Simples of the perpendicular category of a perpendicular sequence of real
// Schur roots, peeled one member at a time through local quivers.  The empty
// sequence yields the unit vectors in reverse topological order.
std::vector<DimVector> perp_sequence(const Quiver& q, const std::vector<DimVector>& seq,
                                     Side side);

inline std::vector<DimVector> right_perp_sequence(const Quiver& q,
                                                  const std::vector<DimVector>& seq) {
  return perp_sequence(q, seq, Side::Right);
}
inline std::vector<DimVector> left_perp_sequence(const Quiver& q,
                                                 const std::vector<DimVector>& seq) {
  return perp_sequence(q, seq, Side::Left);
}

struct QuiverSchurReport {
  bool perpendicular = false;   // all Schur, hom and ext vanish from earlier to later
  bool euler_nonpos = false;    // <r_j, r_i> <= 0 for i < j
  bool circ_checked = false;    // false when a pair of distinct imaginary roots
                                // left the compatibility pairing unverified
};

QuiverSchurReport is_quiver_schur_sequence(const Quiver& q, const RootSequence& seq);

// Stable reordering so that later members never map nontrivially to earlier
// ones (the loop-stripped local quiver is traversed sink-first).  Throws
// Err::NonLoopCycle when no such order exists.
RootSequence canonical_order(const Quiver& q, const RootSequence& seq);

}  // namespace quiverkit
