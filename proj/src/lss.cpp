#include "quiverkit/lss.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "quiverkit/linalg.hpp"

namespace quiverkit {

namespace {

Int tits_of(const Quiver& q, const DimVector& r) { return tits_form(q, r).first; }

bool is_imaginary(const Quiver& q, const DimVector& r) { return tits_of(q, r) <= 0; }

// Shared pushing preconditions; returns p = <b, a>, which equals hom(b, a)
// because ext(b, a) has been checked to vanish.
Int push_precheck(const Quiver& q, const WeightedRoot& a, const WeightedRoot& b,
                  const char* what) {
  require_dim(q, a.root, what);
  require_dim(q, b.root, what);
  require_acyclic(q);
  if (a.mult < 1 || b.mult < 1)
    fail(Err::Precondition, std::string(what) + ": multiplicity < 1");
  if (is_zero(a.root) || is_zero(b.root))
    fail(Err::Precondition, std::string(what) + ": zero member");
  for (const DimVector* r : {&a.root, &b.root})
    if (!is_schur_root(q, *r))
      fail(Err::Precondition,
           std::string(what) + ": " + format_vector(*r) + " is not a Schur root");
  if (generic_hom(q, a.root, b.root) != 0)
    fail(Err::Precondition, std::string(what) + ": generic hom(" + format_vector(a.root) +
                                ", " + format_vector(b.root) + ") != 0");
  if (generic_ext(q, a.root, b.root) != 0)
    fail(Err::Precondition, std::string(what) + ": generic ext(" + format_vector(a.root) +
                                ", " + format_vector(b.root) + ") != 0");
  if (generic_ext(q, b.root, a.root) != 0)
    fail(Err::Precondition, std::string(what) + ": generic ext(" + format_vector(b.root) +
                                ", " + format_vector(a.root) + ") != 0");
  Int p = euler_form(q, b.root, a.root);
  if (p < 0)
    fail(Err::Precondition, std::string(what) + ": <" + format_vector(b.root) + ", " +
                                format_vector(a.root) + "> = " + std::to_string(p) +
                                " negative although ext vanishes");
  return p;
}

DimVector corrected_root(const DimVector& big, Int p, const DimVector& small,
                         const char* what) {
  DimVector c = sub(big, scale(p, small));
  for (Int x : c)
    if (x < 0)
      fail(Err::Precondition,
           std::string(what) + ": corrected root " + format_vector(c) +
               " has a negative entry");
  return c;
}

void check_conserved(const WeightedRoot& a, const WeightedRoot& b, const WeightedRoot& u,
                     const WeightedRoot& v, const char* what) {
  DimVector before = add(scale(a.mult, a.root), scale(b.mult, b.root));
  DimVector after = add(scale(u.mult, u.root), scale(v.mult, v.root));
  if (before != after)
    fail(Err::Internal, std::string(what) + ": weighted sum not preserved");
}

template <typename F>
void run_stage(int stage, F&& body) {
  try {
    body();
  } catch (const QuiverError& e) {
    fail(e.code(),
         "locally semi-simple stage " + std::to_string(stage) + ": " + e.what());
  }
}

std::vector<DimVector> real_summand_sequence(const Decomposition& gd,
                                             const DimVector& b) {
  std::vector<DimVector> roots;
  roots.reserve(gd.terms.size());
  for (const auto& term : gd.terms) {
    if (term.cls != RootClass::Real)
      fail(Err::NotPrehomogeneous,
           format_vector(b) + " is not prehomogeneous: generic summand " +
               format_vector(term.root) + " is imaginary");
    roots.push_back(term.root);
  }
  return roots;
}

}  // namespace

std::pair<WeightedRoot, WeightedRoot> push_right(const Quiver& q, const WeightedRoot& a,
                                                 const WeightedRoot& b) {
  Int p = push_precheck(q, a, b, "push_right");
  if (p == 0) return {b, a};  // plain transposition of a fully perpendicular pair
  if (!is_imaginary(q, a.root))
    fail(Err::Precondition, "push_right: first member " + format_vector(a.root) +
                                " must be imaginary when hom(b, a) > 0");
  if (tits_of(q, b.root) != 1)
    fail(Err::Precondition, "push_right: second member " + format_vector(b.root) +
                                " must be real when hom(b, a) > 0");
  WeightedRoot first{b.root, checked_add(b.mult, checked_mul(p, a.mult))};
  WeightedRoot second{corrected_root(a.root, p, b.root, "push_right"), a.mult};
  check_conserved(a, b, first, second, "push_right");
  // The exact sequence 0 -> pB -> A -> C -> 0 forces all of the following.
  if (tits_of(q, second.root) != tits_of(q, a.root))
    fail(Err::Internal, "push_right: Tits value not preserved");
  if (!is_schur_root(q, second.root))
    fail(Err::Internal, "push_right: corrected root is not Schur");
  if (generic_hom(q, first.root, second.root) != 0 ||
      generic_ext(q, first.root, second.root) != 0 ||
      generic_hom(q, second.root, first.root) != 0)
    fail(Err::Internal, "push_right: output pair not hom/ext-trivial");
  return {first, second};
}

std::pair<WeightedRoot, WeightedRoot> push_left(const Quiver& q, const WeightedRoot& a,
                                                const WeightedRoot& b) {
  Int p = push_precheck(q, a, b, "push_left");
  if (p == 0) return {b, a};
  if (!is_imaginary(q, b.root))
    fail(Err::Precondition, "push_left: second member " + format_vector(b.root) +
                                " must be imaginary when hom(b, a) > 0");
  if (tits_of(q, a.root) != 1)
    fail(Err::Precondition, "push_left: first member " + format_vector(a.root) +
                                " must be real when hom(b, a) > 0");
  WeightedRoot first{corrected_root(b.root, p, a.root, "push_left"), b.mult};
  WeightedRoot second{a.root, checked_add(a.mult, checked_mul(p, b.mult))};
  check_conserved(a, b, first, second, "push_left");
  if (tits_of(q, first.root) != tits_of(q, b.root))
    fail(Err::Internal, "push_left: Tits value not preserved");
  if (!is_schur_root(q, first.root))
    fail(Err::Internal, "push_left: corrected root is not Schur");
  if (generic_hom(q, second.root, first.root) != 0 ||
      generic_hom(q, first.root, second.root) != 0 ||
      generic_ext(q, first.root, second.root) != 0)
    fail(Err::Internal, "push_left: output pair not hom/ext-trivial");
  return {first, second};
}

LssDecomposition generic_lss_decomposition(const Quiver& q, const DimVector& a) {
  Decomposition gd = generic_decomposition(q, a);
  const int t = static_cast<int>(gd.terms.size());
  std::vector<WeightedRoot> seq;
  seq.reserve(t);
  for (const auto& term : gd.terms) seq.push_back({term.root, term.mult});

  // Stage 1: bubble every imaginary member left across the real ones.
  run_stage(1, [&] {
    for (int i = 1; i < t; ++i) {
      int j = i;
      while (j >= 1 && is_imaginary(q, seq[j].root) && !is_imaginary(q, seq[j - 1].root)) {
        auto pushed = push_left(q, seq[j - 1], seq[j]);
        seq[j - 1] = pushed.first;
        seq[j] = pushed.second;
        --j;
      }
    }
  });
  int s = 0;
  while (s < t && is_imaginary(q, seq[s].root)) ++s;
  for (int k = s; k < t; ++k)
    if (is_imaginary(q, seq[k].root))
      fail(Err::StageFailure,
           "locally semi-simple stage 1: imaginary member left inside the real block");

  // Stage 2: the real tail is replaced by the double perpendicular basis of
  // itself, with multiplicities recomputed by an exact expansion.
  if (s < t) run_stage(2, [&] {
      std::vector<DimVector> tail;
      DimVector tail_total(q.vertex_count(), 0);
      for (int k = s; k < t; ++k) {
        tail.push_back(seq[k].root);
        tail_total = add(tail_total, scale(seq[k].mult, seq[k].root));
      }
      auto basis = left_perp_sequence(q, right_perp_sequence(q, tail));
      if (basis.size() != tail.size())
        fail(Err::StageFailure, "double perpendicular basis has the wrong size");
      auto coeffs = solve_nonneg_integer(basis, tail_total, "real tail of the decomposition");
      seq.resize(s);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (coeffs[k] < 1)
          fail(Err::StageFailure, "double perpendicular member unused in the expansion");
        seq.push_back({basis[k], coeffs[k]});
      }
    });

  // Stage 3: eliminate pairs with hom from a later member to an earlier one.
  // Each round strictly shrinks an imaginary member, so this terminates.
  run_stage(3, [&] {
    for (;;) {
      int fi = -1, fj = -1;
      for (int d = 1; d < t && fi < 0; ++d)
        for (int i = 0; i + d < t; ++i)
          if (euler_form(q, seq[i + d].root, seq[i].root) > 0) {
            fi = i;
            fj = i + d;
            break;
          }
      if (fi < 0) break;
      if (!is_imaginary(q, seq[fi].root))
        fail(Err::StageFailure, "violating pair starts at a real member");
      if (tits_of(q, seq[fj].root) != 1)
        fail(Err::StageFailure, "violating pair ends at an imaginary member");
      for (int k = fi + 1; k < fj; ++k)
        if (euler_form(q, seq[fj].root, seq[k].root) != 0)
          fail(Err::StageFailure, "transfer across a non-perpendicular member");
      std::rotate(seq.begin() + fi + 1, seq.begin() + fj, seq.begin() + fj + 1);
      auto pushed = push_right(q, seq[fi], seq[fi + 1]);
      seq[fi] = pushed.first;
      seq[fi + 1] = pushed.second;
    }
  });

  // Collapse repeated isotropic members into one term with multiplicity, at
  // the earliest position (legal: equal roots pair identically with others).
  std::vector<DecompTerm> terms;
  for (const auto& member : seq) {
    RootClass cls = tits_form(q, member.root).second;
    bool merged = false;
    if (cls == RootClass::Isotropic)
      for (auto& term : terms)
        if (term.root == member.root) {
          term.mult = checked_add(term.mult, member.mult);
          merged = true;
          break;
        }
    if (!merged) terms.push_back({member.root, member.mult, cls});
  }

  auto check = [](bool ok, const std::string& msg) {
    if (!ok) fail(Err::Internal, "locally semi-simple validation: " + msg);
  };
  check(static_cast<int>(terms.size()) == t,
        "term count differs from the generic decomposition");
  DimVector total(static_cast<std::size_t>(q.vertex_count()), 0);
  for (const auto& term : terms) {
    check(term.mult >= 1, "nonpositive multiplicity");
    check(term.cls != RootClass::NotARootCandidate,
          format_vector(term.root) + " is not a root");
    total = add(total, scale(term.mult, term.root));
    check(is_schur_root(q, term.root), format_vector(term.root) + " is not Schur");
    if (term.cls == RootClass::StrictlyImaginary)
      check(term.mult == 1, "strictly imaginary member with multiplicity > 1");
    if (term.cls == RootClass::Isotropic && term.mult >= 2)
      check(generic_hom(q, term.root, term.root) == 0,
            "repeated isotropic member with nonzero generic hom");
  }
  check(total == a, "weighted sum differs from the input");
  const int m = static_cast<int>(terms.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      check(terms[i].root != terms[j].root, "repeated member");
      check(generic_hom(q, terms[i].root, terms[j].root) == 0,
            "nonzero generic hom between members");
      if (i < j) {
        check(generic_ext(q, terms[i].root, terms[j].root) == 0,
              "nonzero generic ext from an earlier to a later member");
        check(euler_form(q, terms[j].root, terms[i].root) <= 0,
              "positive Euler pairing against the order");
      }
    }
  // With hom and earlier-to-later ext trivial, non-loop local-quiver arrows
  // only run from later members to earlier ones, so the loop-stripped local
  // quiver is acyclic; almost-looplessness is what the checks above said.
  return {std::move(terms), a, true};
}

bool is_prehomogeneous(const Quiver& q, const DimVector& a) {
  Decomposition gd = generic_decomposition(q, a);
  for (const auto& term : gd.terms)
    if (term.cls != RootClass::Real) return false;
  return true;
}

LssDecomposition preh_lss(const Quiver& q, const DimVector& b) {
  auto roots = real_summand_sequence(generic_decomposition(q, b), b);
  auto basis = left_perp_sequence(q, right_perp_sequence(q, roots));
  if (basis.size() != roots.size())
    fail(Err::Internal, "prehomogeneous expansion: double perpendicular basis size mismatch");
  auto coeffs = solve_nonneg_integer(basis, b, "prehomogeneous vector");
  LssDecomposition out;
  out.total = b;
  out.almost_loopless = true;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] < 1)
      fail(Err::Internal, "prehomogeneous expansion dropped a basis member");
    RootClass cls = tits_form(q, basis[k]).second;
    if (cls != RootClass::Real)
      fail(Err::Internal, "prehomogeneous expansion produced a non-real member");
    out.terms.push_back({basis[k], coeffs[k], cls});
  }
  return out;
}

Weight semi_invariant_weight(const Quiver& q, const DimVector& g) {
  require_dim(q, g, "semi_invariant_weight");
  const int n = q.vertex_count();
  Weight w(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    Int x = checked_sub(0, g[v]);
    for (int u = 0; u < n; ++u)
      x = checked_add(x, checked_mul(q.arrow_count(v, u), g[u]));
    w[v] = x;
  }
  return w;
}

std::vector<SemiInvariantGenerator> semi_invariant_generators(const Quiver& q,
                                                              const DimVector& b) {
  auto roots = real_summand_sequence(generic_decomposition(q, b), b);
  auto perp = right_perp_sequence(q, roots);
  std::vector<SemiInvariantGenerator> out;
  out.reserve(perp.size());
  for (const auto& g : perp) {
    Weight w = semi_invariant_weight(q, g);
    Int on_b = 0;
    for (std::size_t v = 0; v < w.size(); ++v)
      on_b = checked_add(on_b, checked_mul(w[v], b[v]));
    if (on_b != 0)
      fail(Err::Internal, "generator weight does not vanish on " + format_vector(b));
    out.push_back({g, std::move(w)});
  }
  return out;
}

LunaStrata luna_strata(const Quiver& q, const DimVector& b) {
  auto roots = real_summand_sequence(generic_decomposition(q, b), b);
  auto perp = right_perp_sequence(q, roots);
  const int m = static_cast<int>(perp.size());
  if (m > 20)
    fail(Err::Precondition, "perpendicular basis has " + std::to_string(m) +
                                " members; stratum enumeration would be too large");
  LunaStrata out;
  out.total = b;
  out.perp_basis = perp;
  out.strata.reserve(std::size_t{1} << m);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    Stratum st;
    for (int k = 0; k < m; ++k)
      if (mask & (std::uint32_t{1} << k)) {
        st.members.push_back(k);
        st.subsequence.push_back(perp[static_cast<std::size_t>(k)]);
        st.nonvanishing.push_back(semi_invariant_weight(q, perp[static_cast<std::size_t>(k)]));
      }
    st.basis = left_perp_sequence(q, st.subsequence);
    st.coeffs = solve_nonneg_integer(st.basis, b, "stratum decomposition");
    st.decomposition.total = b;
    st.decomposition.almost_loopless = true;
    for (std::size_t k = 0; k < st.basis.size(); ++k) {
      if (st.coeffs[k] == 0) continue;
      RootClass cls = tits_form(q, st.basis[k]).second;
      if (cls != RootClass::Real)
        fail(Err::Internal, "stratum basis member " + format_vector(st.basis[k]) +
                                " is not real");
      st.decomposition.terms.push_back({st.basis[k], st.coeffs[k], cls});
    }
    out.strata.push_back(std::move(st));
  }
  std::stable_sort(out.strata.begin(), out.strata.end(),
                   [](const Stratum& x, const Stratum& y) {
                     return x.members.size() < y.members.size();
                   });
  return out;
}

bool stratum_below(const Stratum& s1, const Stratum& s2) {
  return std::includes(s2.members.begin(), s2.members.end(), s1.members.begin(),
                       s1.members.end());
}

}  // namespace quiverkit
