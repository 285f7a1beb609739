#pragma once

// Generic hom/ext calculus and the generic decomposition.
//
// generic_hom(a, b) and generic_ext(a, b) are the dimensions of Hom(A, B)
// and Ext(A, B) for an INDEPENDENT generic pair of representations A, B.
// In particular generic_hom(a, a) is not an endomorphism count: on the
// double-arrow Kronecker quiver generic_hom((1,1),(1,1)) = 0, because two
// independently chosen points of the projective line admit no nonzero
// intertwiner, while End of a single such representation is 1-dimensional.
// The single-object measurement lives in the oracle (oracle_end_dim).
//
// generic_ext is computed from the subrepresentation characterization:
//   ext(a, b) = max { -<a', b> : a' a generic subrepresentation of a }
//             = max { -<a, b''> : b'' a generic quotient of b },
// where a' is a generic subrepresentation dimension iff ext(a', a - a') = 0.
// The recursion terminates because |a| + |b| strictly drops.  Whichever of
// the two boxes is smaller is enumerated, in lexicographic order with an
// upper-bound early exit; results are memoized per quiver for the session.

#include <vector>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

Int generic_hom(const Quiver& q, const DimVector& a, const DimVector& b);
Int generic_ext(const Quiver& q, const DimVector& a, const DimVector& b);

// sub is a dimension of a generic subrepresentation of whole?
bool is_generic_subrep(const Quiver& q, const DimVector& sub, const DimVector& whole);

// a is Schur iff it admits no splitting a = b + (a-b), 0 < b < a, with
// generic_ext vanishing in both directions.
bool is_schur_root(const Quiver& q, const DimVector& a);

struct DecompTerm {
  DimVector root;
  Int mult = 0;
  RootClass cls = RootClass::Real;
};

struct Decomposition {
  std::vector<DecompTerm> terms;  // distinct roots, perpendicularly ordered
  DimVector total;
};

// Direction of the splitting search; both must give the same multiset of
// terms (the decomposition is unique), which the tests exploit.
enum class SplitOrder { Lex, RevLex };

// Decomposition of the generic representation into Schur roots with
// multiplicities, ordered so that generic hom and ext from earlier terms to
// later ones vanish.
Decomposition generic_decomposition(const Quiver& q, const DimVector& a,
                                    SplitOrder order = SplitOrder::Lex);

}  // namespace quiverkit
