#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "quiverkit/quiver.hpp"

namespace quiverkit::detail {

struct VecHash {
  std::size_t operator()(const std::vector<Int>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Int x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Session cache for the generic hom/ext calculus.  All quivers with the
// same vertex count and arrow multiset share one instance (handed out by a
// content-keyed registry at construction), so rebuilding an equal local
// quiver reuses earlier work; values never depend on arrow order.  Guarded
// by a mutex; the cached values are deterministic, so duplicated work
// between threads is harmless.
struct ComputeCache {
  std::mutex mu;
  std::unordered_map<std::vector<Int>, Int, VecHash> ext;     // key: a ++ b
  std::unordered_map<std::vector<Int>, char, VecHash> schur;  // key: a
};

}  // namespace quiverkit::detail
