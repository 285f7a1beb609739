#include "quiverkit/perp.hpp"

#include <algorithm>

#include "quiverkit/linalg.hpp"

namespace quiverkit {

namespace {

std::vector<Int> normalized_mults(const RootSequence& seq) {
  if (seq.mults.empty()) return std::vector<Int>(seq.roots.size(), 1);
  if (seq.mults.size() != seq.roots.size())
    fail(Err::Precondition, "root sequence: multiplicities not aligned with roots");
  for (Int m : seq.mults)
    if (m < 1) fail(Err::Precondition, "root sequence: multiplicity < 1");
  return seq.mults;
}

void require_sequence_dims(const Quiver& q, const RootSequence& seq) {
  for (const auto& r : seq.roots) require_dim(q, r, "root sequence");
}

bool is_real_schur(const Quiver& q, const DimVector& g) {
  return !is_zero(g) && tits_form(q, g).first == 1 && is_schur_root(q, g);
}

// new_root = sum_k coeffs_k * basis_k, with checked arithmetic.
DimVector combine(const std::vector<DimVector>& basis, const DimVector& coeffs) {
  DimVector r(basis.empty() ? 0 : basis[0].size(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coeffs[k] != 0) r = add(r, scale(coeffs[k], basis[k]));
  return r;
}

}  // namespace

LocalQuiver local_quiver(const Quiver& q, const RootSequence& seq) {
  require_sequence_dims(q, seq);
  auto mults = normalized_mults(seq);
  const int t = static_cast<int>(seq.roots.size());
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j) continue;
      Int h = generic_hom(q, seq.roots[i], seq.roots[j]);
      if (h != 0)
        fail(Err::HomNotTrivial, "local quiver: generic hom(root " + std::to_string(i + 1) +
                                     ", root " + std::to_string(j + 1) + ") = " +
                                     std::to_string(h));
    }
  std::vector<Arrow> arrows;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      Int c = checked_sub(i == j ? 1 : 0, euler_form(q, seq.roots[i], seq.roots[j]));
      if (c < 0)
        fail(Err::NegativeArrowCount, "local quiver: negative arrow count " +
                                          std::to_string(c) + " from root " +
                                          std::to_string(i + 1) + " to root " +
                                          std::to_string(j + 1));
      for (Int k = 0; k < c; ++k) arrows.push_back({i, j});
    }
  RootSequence source{seq.roots, mults};
  return {Quiver(t, std::move(arrows)), std::move(source), std::move(mults)};
}

RootSequence canonical_order(const Quiver& q, const RootSequence& seq) {
  require_sequence_dims(q, seq);
  auto mults = normalized_mults(seq);
  const int t = static_cast<int>(seq.roots.size());
  // Non-loop arrow counts of the local quiver; validates pairwise hom = 0.
  std::vector<std::vector<Int>> ext_to(t, std::vector<Int>(t, 0));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j) continue;
      Int h = generic_hom(q, seq.roots[i], seq.roots[j]);
      if (h != 0)
        fail(Err::HomNotTrivial, "canonical order: generic hom(root " + std::to_string(i + 1) +
                                     ", root " + std::to_string(j + 1) + ") = " +
                                     std::to_string(h));
      ext_to[i][j] = generic_ext(q, seq.roots[i], seq.roots[j]);
    }
  std::vector<char> used(t, 0);
  RootSequence out;
  for (int round = 0; round < t; ++round) {
    int pick = -1;
    for (int i = 0; i < t && pick < 0; ++i) {
      if (used[i]) continue;
      bool sink = true;
      for (int j = 0; j < t; ++j)
        if (!used[j] && j != i && ext_to[i][j] != 0) {
          sink = false;
          break;
        }
      if (sink) pick = i;
    }
    if (pick < 0)
      fail(Err::NonLoopCycle, "canonical order: local quiver has an oriented non-loop cycle");
    used[pick] = 1;
    out.roots.push_back(seq.roots[pick]);
    out.mults.push_back(mults[pick]);
  }
  return out;
}

std::vector<DimVector> perp_schur(const Quiver& q, const DimVector& g, Side side) {
  require_dim(q, g, "perp_schur");
  require_acyclic(q);
  if (is_zero(g) || tits_form(q, g).first != 1 || !is_schur_root(q, g))
    fail(Err::NotRealSchurRoot,
         "perpendicular category: " + format_vector(g) + " is not a real Schur root");
  const int n = q.vertex_count();
  const bool right = (side == Side::Right);
  auto pins = right ? projective_dims(q) : injective_dims(q);

  auto finish = [&](std::vector<DimVector> roots) {
    RootSequence ordered = canonical_order(q, RootSequence{std::move(roots), {}});
    return ordered.roots;
  };

  // When g is itself projective (right case) / injective (left case), the
  // perpendicular category is spanned by the remaining vertex simples.
  for (int j = 0; j < n; ++j)
    if (g == pins[j]) {
      std::vector<DimVector> units;
      for (int v = 0; v < n; ++v)
        if (v != j) units.push_back(unit_vector(n, v));
      return finish(std::move(units));
    }

  // Otherwise correct each projective/injective by g and collect the
  // distinct summands of the generic decompositions: these are the
  // projectives (resp. injectives) of the perpendicular category.
  std::vector<DimVector> collected;
  for (int a = 0; a < n; ++a) {
    Int s = right ? checked_sub(0, euler_form(q, g, pins[a]))
                  : checked_sub(0, euler_form(q, pins[a], g));
    if (s < 0)
      fail(Err::Internal, "perpendicular category: negative correction multiple for " +
                              format_vector(g));
    DimVector cand = add(pins[a], scale(s, g));
    for (const auto& term : generic_decomposition(q, cand).terms)
      if (std::find(collected.begin(), collected.end(), term.root) == collected.end())
        collected.push_back(term.root);
  }
  if (static_cast<int>(collected.size()) != n - 1)
    fail(Err::SummandCountMismatch,
         "perpendicular category of " + format_vector(g) + ": expected " +
             std::to_string(n - 1) + " distinct summands, found " +
             std::to_string(collected.size()));

  // Peel the projectives down to the simples: repeatedly take a member that
  // no other unprocessed member maps into, and subtract the already
  // recovered simples with path-count coefficients.
  const int m = n - 1;
  auto pairing = [&](int k, int j) {
    return right ? euler_form(q, collected[k], collected[j])
                 : euler_form(q, collected[j], collected[k]);
  };
  std::vector<char> black(m, 0);
  std::vector<DimVector> simple(m);
  for (int round = 0; round < m; ++round) {
    int pick = -1;
    for (int j = 0; j < m && pick < 0; ++j) {
      if (black[j]) continue;
      bool ok = true;
      for (int k = 0; k < m; ++k)
        if (k != j && !black[k] && pairing(k, j) != 0) {
          ok = false;
          break;
        }
      if (ok) pick = j;
    }
    if (pick < 0)
      fail(Err::NoWhiteSink,
           "perpendicular category: no remaining member free of incoming maps");
    DimVector alpha = collected[pick];
    for (int k = 0; k < m; ++k)
      if (black[k]) alpha = sub(alpha, scale(pairing(k, pick), simple[k]));
    for (Int x : alpha)
      if (x < 0)
        fail(Err::Internal, "perpendicular category: recovered simple has a negative entry");
    simple[pick] = std::move(alpha);
    black[pick] = 1;
  }
  return finish(std::move(simple));
}

std::vector<DimVector> perp_sequence(const Quiver& q, const std::vector<DimVector>& seq,
                                     Side side) {
  require_acyclic(q);
  const int n = q.vertex_count();
  const int t = static_cast<int>(seq.size());
  if (t > n)
    fail(Err::Precondition, "perpendicular sequence: more roots than vertices");
  for (const auto& r : seq) {
    require_dim(q, r, "perp_sequence");
    if (!is_real_schur(q, r))
      fail(Err::NotRealSchurRoot,
           "perpendicular sequence: " + format_vector(r) + " is not a real Schur root");
  }
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (generic_hom(q, seq[i], seq[j]) != 0 || generic_ext(q, seq[i], seq[j]) != 0)
        fail(Err::Precondition, "perpendicular sequence: members " + std::to_string(i + 1) +
                                    " and " + std::to_string(j + 1) +
                                    " are not perpendicular");

  auto topo = topological_order(q);
  std::vector<DimVector> simples;
  simples.reserve(n);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    simples.push_back(unit_vector(n, *it));

  for (int step = 0; step < t; ++step) {
    const DimVector& root = seq[side == Side::Right ? step : t - 1 - step];
    LocalQuiver lq = local_quiver(q, RootSequence{simples, {}});
    DimVector gamma = solve_nonneg_integer(simples, root, "perpendicular sequence member");
    auto inner = perp_schur(lq.quiver, gamma, side);
    std::vector<DimVector> next;
    next.reserve(inner.size());
    for (const auto& coeffs : inner) next.push_back(combine(simples, coeffs));
    simples = std::move(next);
  }
  return simples;
}

QuiverSchurReport is_quiver_schur_sequence(const Quiver& q, const RootSequence& seq) {
  require_sequence_dims(q, seq);
  (void)normalized_mults(seq);
  require_acyclic(q);
  const int t = static_cast<int>(seq.roots.size());
  QuiverSchurReport report;
  report.perpendicular = true;
  report.euler_nonpos = true;
  report.circ_checked = true;
  for (int i = 0; i < t; ++i)
    if (is_zero(seq.roots[i]) || !is_schur_root(q, seq.roots[i]))
      report.perpendicular = false;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      if (generic_hom(q, seq.roots[i], seq.roots[j]) != 0 ||
          generic_ext(q, seq.roots[i], seq.roots[j]) != 0)
        report.perpendicular = false;
      if (euler_form(q, seq.roots[j], seq.roots[i]) > 0) report.euler_nonpos = false;
      // The compatibility pairing for two distinct imaginary roots is not
      // computed symbolically; flag it as unchecked rather than guessed.
      if (seq.roots[i] != seq.roots[j] && tits_form(q, seq.roots[i]).first <= 0 &&
          tits_form(q, seq.roots[j]).first <= 0)
        report.circ_checked = false;
    }
  return report;
}

}  // namespace quiverkit
