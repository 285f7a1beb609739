#pragma once

// Randomized finite-field oracle.  It samples representations with uniform
// matrix entries over F_p and measures hom/ext/end dimensions by exact rank
// computations mod p, giving a check on the symbolic calculus that shares no
// code path with it.  Hom dimensions are upper semicontinuous, so a sampled
// value can only overshoot the generic one; taking the minimum over
// independent trials drives the failure probability down rapidly.
//
// Determinism: every draw comes from std::mt19937_64 seeded with
// cfg.seed ^ trial_index, so results are reproducible across runs and
// platforms for a fixed (seed, trials, prime).

#include <string>
#include <vector>

#include "quiverkit/homext.hpp"
#include "quiverkit/quiver.hpp"

namespace quiverkit {

struct OracleConfig {
  Int prime = 2147483647;  // fits 64-bit products with a single reduction
  Int trials = 5;
  std::uint64_t seed = 0;
};

void validate_config(const OracleConfig& cfg);

struct FieldMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major, entries in [0, p)

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  Int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

struct FieldRep {
  Quiver quiver;
  Int prime = 0;
  DimVector dims;
  std::vector<FieldMatrix> matrices;  // one per arrow, in arrow order
};

// Sample a representation of the given dimension vector; `trial` selects the
// derived seed.  Any quiver is accepted (loops and cycles included).
FieldRep sample_rep(const Quiver& q, const DimVector& dims, const OracleConfig& cfg,
                    Int trial = 0);

// dim Hom(U, V) over F_p, by the rank of the intertwiner system.
Int hom_dim(const FieldRep& u, const FieldRep& v);

// min over independent trials of hom_dim between fresh samples of a and b.
Int oracle_hom(const Quiver& q, const DimVector& a, const DimVector& b,
               const OracleConfig& cfg);

// oracle_hom minus the Euler form; nonnegative for actual representations.
Int oracle_ext(const Quiver& q, const DimVector& a, const DimVector& b,
               const OracleConfig& cfg);

// min over trials of dim End(V) for a single sample V of dims a.
Int oracle_end_dim(const Quiver& q, const DimVector& a, const OracleConfig& cfg);

inline bool oracle_is_schur(const Quiver& q, const DimVector& a, const OracleConfig& cfg) {
  return oracle_end_dim(q, a, cfg) == 1;
}

enum class DecompKind { Generic, LocallySemiSimple };

struct OracleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  bool pass = false;
  std::vector<OracleCheck> checks;
};

// Check a claimed decomposition against the oracle: conservation of the
// total, Schur-ness of every root, and the hom/ext vanishing pattern the
// claimed kind requires.  Failures are reported, never suppressed.
VerifyReport verify_decomposition(const Quiver& q, const std::vector<DecompTerm>& terms,
                                  const DimVector& total, DecompKind kind,
                                  const OracleConfig& cfg);

}  // namespace quiverkit
