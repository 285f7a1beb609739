#pragma once

// Quiver data model and the exact combinatorial forms attached to it:
// parsing, Euler bilinear form, Tits quadratic form, topological order and
// the path-count dimension vectors of the indecomposable projectives and
// injectives.  All integer arithmetic in the library is 64-bit and
// overflow-checked; an overflow throws QuiverError(Err::Overflow) rather
// than wrapping.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quiverkit {

using Int = std::int64_t;

// Dimension vector: one nonnegative entry per vertex.
using DimVector = std::vector<Int>;
// Character of the base-change group: one signed entry per vertex.
using Weight = std::vector<Int>;

enum class Err {
  Syntax,
  VertexOutOfRange,
  VertexCountMismatch,
  LoopArrow,
  OrientedCycle,
  Overflow,
  Precondition,
  HomNotTrivial,
  NegativeArrowCount,
  NotRealSchurRoot,
  SummandCountMismatch,
  NoWhiteSink,
  NonIntegerExpansion,
  NegativeExpansion,
  NonLoopCycle,
  OrderingFailure,
  NotPrehomogeneous,
  StageFailure,
  NegativeExt,
  Internal,
};

class QuiverError : public std::runtime_error {
 public:
  QuiverError(Err code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Err code() const noexcept { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw QuiverError(code, msg);
}

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// Arrow endpoints are 0-based internally; all I/O is 1-based.
struct Arrow {
  int tail = 0;
  int head = 0;
};

namespace detail {
struct ComputeCache;
}

// Immutable after construction and safe to share between threads.  Loops and
// oriented cycles are representable (local quivers carry loops and the
// sampling oracle accepts arbitrary quivers); the symbolic algorithms reject
// them via require_acyclic and parse-time validation.
class Quiver {
 public:
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  Int arrow_count(int tail, int head) const {
    return counts_[static_cast<std::size_t>(tail) * n_ + head];
  }
  bool has_loop() const noexcept;
  bool same_content(const Quiver& other) const;

  detail::ComputeCache& compute_cache() const { return *cache_; }

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<Int> counts_;  // n x n arrow multiplicities
  std::shared_ptr<detail::ComputeCache> cache_;
};

enum class RootClass { Real, Isotropic, StrictlyImaginary, NotARootCandidate };

const char* root_class_name(RootClass cls);
RootClass classify_tits_value(Int q);

// Quiver file grammar (UTF-8, line oriented, '#' starts a comment):
//   vertices <n>
//   arrow <tail> <head>       (repeatable; parallel arrows by repetition)
// Vertex labels are 1-based in files.  Loops are rejected here because the
// symbolic algorithms assume a loop-free quiver.
Quiver parse_quiver(const std::string& text);

Int euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
std::pair<Int, RootClass> tits_form(const Quiver& q, const DimVector& a);

// Vertices ordered so that every arrow goes from an earlier to a later
// vertex; deterministic (smallest label first among the eligible vertices).
// Throws Err::OrientedCycle with one explicit cycle otherwise.
std::vector<int> topological_order(const Quiver& q);

// (dim P_a)_v = number of oriented paths a -> v, including the trivial one;
// (dim I_a)_v = number of oriented paths v -> a.
std::vector<DimVector> projective_dims(const Quiver& q);
std::vector<DimVector> injective_dims(const Quiver& q);

bool is_zero(const DimVector& v);
DimVector unit_vector(int n, int at);
DimVector add(const DimVector& a, const DimVector& b);
DimVector sub(const DimVector& a, const DimVector& b);
DimVector scale(Int k, const DimVector& a);
void require_dim(const Quiver& q, const DimVector& a, const char* what);
void require_acyclic(const Quiver& q);
std::string format_vector(const std::vector<Int>& v);  // "(3,2)"

}  // namespace quiverkit
