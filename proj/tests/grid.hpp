#pragma once

// Shared test fixtures: the four small named quivers, an exhaustive
// generator for every acyclic quiver on at most three labeled vertices with
// at most two parallel arrows per ordered vertex pair, and the matching
// dimension-vector grids.

#include <utility>
#include <vector>

#include "quiverkit/quiver.hpp"

namespace quiverkit::testing {

inline Quiver a2() { return parse_quiver("vertices 2\narrow 1 2\n"); }
inline Quiver a3() { return parse_quiver("vertices 3\narrow 1 2\narrow 2 3\n"); }
inline Quiver k2() { return parse_quiver("vertices 2\narrow 1 2\narrow 1 2\n"); }
inline Quiver k3() {
  return parse_quiver("vertices 2\narrow 1 2\narrow 1 2\narrow 1 2\n");
}

inline bool support_is_acyclic(int n, const std::vector<std::pair<int, int>>& pairs,
                               const std::vector<int>& counts) {
  std::vector<int> indeg(n, 0);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (counts[k] > 0) ++indeg[pairs[k].second];
  std::vector<char> done(n, 0);
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v)
      if (!done[v] && indeg[v] == 0) pick = v;
    if (pick < 0) return false;
    done[pick] = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (counts[k] > 0 && pairs[k].first == pick) --indeg[pairs[k].second];
  }
  return true;
}

// Every acyclic quiver with n_max or fewer vertices and at most max_par
// parallel arrows per ordered pair.  115 quivers for (3, 2).
inline std::vector<Quiver> grid_quivers(int n_max = 3, int max_par = 2) {
  std::vector<Quiver> out;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        if (u != w) pairs.emplace_back(u, w);
    std::vector<int> counts(pairs.size(), 0);
    while (true) {
      if (support_is_acyclic(n, pairs, counts)) {
        std::vector<Arrow> arrows;
        for (std::size_t k = 0; k < pairs.size(); ++k)
          for (int c = 0; c < counts[k]; ++c)
            arrows.push_back({pairs[k].first, pairs[k].second});
        out.emplace_back(n, std::move(arrows));
      }
      std::size_t k = 0;
      while (k < counts.size() && counts[k] == max_par) counts[k++] = 0;
      if (k == counts.size()) break;
      ++counts[k];
    }
  }
  return out;
}

// Every nonzero vector in {0..cap}^n.
inline std::vector<DimVector> grid_dims(int n, Int cap) {
  std::vector<DimVector> out;
  DimVector v(n, 0);
  while (true) {
    int k = 0;
    while (k < n && v[k] == cap) v[k++] = 0;
    if (k == n) break;
    ++v[k];
    out.push_back(v);
  }
  return out;
}

}  // namespace quiverkit::testing

// Checks that `expr` throws QuiverError with the given code.
#define CHECK_FAILS(expr, err_code)                                    \
  do {                                                                 \
    bool caught_ = false;                                              \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const quiverkit::QuiverError& e_) {                       \
      caught_ = true;                                                  \
      CHECK_MESSAGE(static_cast<int>(e_.code()) ==                     \
                        static_cast<int>(err_code),                    \
                    #expr, " threw the wrong code: ", e_.what());      \
    }                                                                  \
    CHECK_MESSAGE(caught_, #expr " did not throw");                    \
  } while (0)
