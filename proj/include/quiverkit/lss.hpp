#pragma once

// Locally semi-simple machinery: pushing surgery on adjacent members of a
// perpendicular sequence, the generic locally semi-simple decomposition,
// the prehomogeneous shortcut through double perpendicular categories, Luna
// strata, and the weights of the generating semi-invariants.
//
// Multiplicity conventions differ from the generic decomposition: a real
// member (r, m) stands for m isomorphic simple summands, an isotropic member
// (r, m) for m pairwise non-isomorphic ones, and a strictly imaginary member
// always has multiplicity 1 and occurs once ("almost loopless" outputs).

#include <utility>
#include <vector>

#include "quiverkit/homext.hpp"
#include "quiverkit/perp.hpp"
#include "quiverkit/quiver.hpp"

namespace quiverkit {

struct WeightedRoot {
  DimVector root;
  Int mult = 1;
};

// Replace the adjacent pair (a, b) by (b, a - p*b) resp. (b - p*a, a) with
// p = <b, a> = hom(b, a), recalculating multiplicities so the weighted sum
// is untouched.  Requires Schur roots with hom(a,b) = ext(a,b) = ext(b,a)
// = 0; p = 0 degenerates to a plain transposition.  For p > 0, push_right
// needs a imaginary and b real, push_left the mirror image.  The corrected
// root keeps the Tits value of the root it came from, and the output pair is
// again hom/ext-trivial in the required directions (asserted internally).
std::pair<WeightedRoot, WeightedRoot> push_right(const Quiver& q, const WeightedRoot& a,
                                                 const WeightedRoot& b);
std::pair<WeightedRoot, WeightedRoot> push_left(const Quiver& q, const WeightedRoot& a,
                                                const WeightedRoot& b);

struct LssDecomposition {
  std::vector<DecompTerm> terms;  // distinct roots, quiver Schur sequence order
  DimVector total;
  bool almost_loopless = false;
};

// Generic locally semi-simple decomposition, by three-stage surgery on the
// generic decomposition: (1) bubble imaginary members left across real ones,
// (2) replace the real tail by the double perpendicular basis of itself with
// recomputed multiplicities, (3) while some pair has <later, earlier> > 0,
// transfer the later member next to the earlier one and push the earlier
// one right.  The output has as many terms as the generic decomposition,
// pairwise trivial generic hom, and <root_j, root_i> <= 0 for i < j; these
// facts are re-validated before returning.  Stage failures raise errors
// naming the stage and preserving the underlying error code.
LssDecomposition generic_lss_decomposition(const Quiver& q, const DimVector& a);

// True when every summand of the generic decomposition is a real Schur root
// (equivalently, the base-change group has a dense orbit).
bool is_prehomogeneous(const Quiver& q, const DimVector& a);

// Shortcut for prehomogeneous vectors: the decomposition over the left perp
// of the right perp of the generic summands.  Independent of the staged
// surgery above, which it must agree with (the tests cross-check this).
LssDecomposition preh_lss(const Quiver& q, const DimVector& b);

// Weight of the determinantal semi-invariant attached to a root g:
// component at vertex v is -<e_v, g>.
Weight semi_invariant_weight(const Quiver& q, const DimVector& g);

struct SemiInvariantGenerator {
  DimVector root;
  Weight weight;
};

// Algebraically independent generators of the semi-invariant ring of a
// prehomogeneous vector: one per member of the right perpendicular basis of
// the generic summands.  Every returned weight vanishes on b (asserted).
std::vector<SemiInvariantGenerator> semi_invariant_generators(const Quiver& q,
                                                              const DimVector& b);

struct Stratum {
  std::vector<int> members;            // indices into perp_basis, ascending
  std::vector<DimVector> subsequence;  // the chosen perp_basis roots, in order
  std::vector<DimVector> basis;        // simples of the left perp of the subsequence
  std::vector<Int> coeffs;             // expansion of the total over basis; zeros allowed
  LssDecomposition decomposition;      // zero-coefficient members dropped
  std::vector<Weight> nonvanishing;    // weights of the semi-invariants nonzero here
};

struct LunaStrata {
  DimVector total;
  std::vector<DimVector> perp_basis;  // right perp basis of the generic summands
  std::vector<Stratum> strata;        // by subset size, smallest first
};

// All 2^(n-t) strata of the invariant-theory quotient of a prehomogeneous
// vector, one per subsequence of the right perpendicular basis.  The empty
// subsequence decomposes b over the vertex simples; the full one reproduces
// preh_lss.
LunaStrata luna_strata(const Quiver& q, const DimVector& b);

// s1 lies in the closure of s2 (subset inclusion of the chosen members).
bool stratum_below(const Stratum& s1, const Stratum& s2);

}  // namespace quiverkit
