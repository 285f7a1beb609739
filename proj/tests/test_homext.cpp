#include <algorithm>

#include "doctest.h"
#include "grid.hpp"
#include "quiverkit/homext.hpp"

using namespace quiverkit;
using namespace quiverkit::testing;

TEST_CASE("generic hom and ext golden values on the Kronecker quiver") {
  Quiver q = k2();
  CHECK(generic_ext(q, {1, 0}, {0, 1}) == 2);
  CHECK(generic_ext(q, {1, 1}, {0, 1}) == 1);
  CHECK(generic_ext(q, {1, 0}, {1, 1}) == 1);
  CHECK(generic_hom(q, {1, 1}, {1, 0}) == 1);
  CHECK(generic_hom(q, {1, 0}, {1, 1}) == 0);
  // An independent generic pair of isotropic representations: two distinct
  // points of the projective line, no intertwiner.
  CHECK(generic_hom(q, {1, 1}, {1, 1}) == 0);
  CHECK(generic_ext(q, {1, 1}, {1, 1}) == 0);
  CHECK(generic_hom(q, {2, 1}, {1, 0}) == 2);
  CHECK(generic_ext(q, {2, 1}, {1, 0}) == 0);
}

TEST_CASE("generic hom and ext golden values on three arrows") {
  Quiver q = k3();
  CHECK(generic_hom(q, {3, 1}, {1, 0}) == 3);
  CHECK(generic_ext(q, {3, 1}, {1, 0}) == 0);
  CHECK(generic_hom(q, {1, 0}, {3, 1}) == 0);
  CHECK(generic_ext(q, {1, 0}, {3, 1}) == 0);
}

TEST_CASE("hom minus ext equals the euler form") {
  for (const Quiver& q : grid_quivers()) {
    const int n = q.vertex_count();
    for (const DimVector& a : grid_dims(n, 2))
      for (const DimVector& b : grid_dims(n, 2))
        CHECK(generic_hom(q, a, b) - generic_ext(q, a, b) == euler_form(q, a, b));
  }
}

TEST_CASE("projectives are hom-exact: hom(dim P_a, b) = b_a, ext = 0") {
  for (const Quiver& q : grid_quivers()) {
    const int n = q.vertex_count();
    auto proj = projective_dims(q);
    auto inj = injective_dims(q);
    for (const DimVector& b : grid_dims(n, 2))
      for (int a = 0; a < n; ++a) {
        CHECK(generic_hom(q, proj[a], b) == b[a]);
        CHECK(generic_ext(q, proj[a], b) == 0);
        CHECK(generic_hom(q, b, inj[a]) == b[a]);
        CHECK(generic_ext(q, b, inj[a]) == 0);
      }
  }
}

TEST_CASE("generic subrepresentation test") {
  Quiver q = a2();
  CHECK(is_generic_subrep(q, {0, 1}, {1, 1}));
  CHECK_FALSE(is_generic_subrep(q, {1, 0}, {1, 1}));
  CHECK(is_generic_subrep(q, {0, 0}, {1, 1}));
  CHECK(is_generic_subrep(q, {1, 1}, {1, 1}));
}

TEST_CASE("schur root detection") {
  CHECK(is_schur_root(a2(), {1, 1}));
  CHECK(is_schur_root(a2(), {1, 0}));
  CHECK_FALSE(is_schur_root(a2(), {2, 1}));
  CHECK_FALSE(is_schur_root(a2(), {2, 2}));
  CHECK(is_schur_root(k2(), {1, 1}));
  CHECK(is_schur_root(k2(), {2, 1}));
  CHECK(is_schur_root(k2(), {3, 2}));
  CHECK_FALSE(is_schur_root(k2(), {2, 2}));
  CHECK(is_schur_root(k3(), {1, 1}));
  CHECK(is_schur_root(k3(), {2, 2}));  // strictly imaginary roots repeat
}

TEST_CASE("generic decomposition golden values") {
  Decomposition d = generic_decomposition(a2(), {2, 1});
  REQUIRE(d.terms.size() == 2);
  CHECK(d.terms[0].root == DimVector{1, 0});
  CHECK(d.terms[0].mult == 1);
  CHECK(d.terms[0].cls == RootClass::Real);
  CHECK(d.terms[1].root == DimVector{1, 1});
  CHECK(d.terms[1].mult == 1);

  d = generic_decomposition(k3(), {4, 1});
  REQUIRE(d.terms.size() == 2);
  CHECK(d.terms[0].root == DimVector{1, 0});
  CHECK(d.terms[0].mult == 1);
  CHECK(d.terms[1].root == DimVector{3, 1});
  CHECK(d.terms[1].mult == 1);

  d = generic_decomposition(k2(), {3, 3});
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms[0].root == DimVector{1, 1});
  CHECK(d.terms[0].mult == 3);
  CHECK(d.terms[0].cls == RootClass::Isotropic);

  d = generic_decomposition(k2(), {2, 1});
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms[0].root == DimVector{2, 1});
  CHECK(d.terms[0].mult == 1);

  CHECK_FAILS(generic_decomposition(a2(), {0, 0}), Err::Precondition);
}

TEST_CASE("generic decomposition output contract on the grid") {
  for (const Quiver& q : grid_quivers()) {
    const int n = q.vertex_count();
    for (const DimVector& a : grid_dims(n, 2)) {
      Decomposition d = generic_decomposition(q, a);
      DimVector sum(n, 0);
      for (const auto& term : d.terms) {
        CHECK(term.mult >= 1);
        CHECK(is_schur_root(q, term.root));
        CHECK(term.cls == tits_form(q, term.root).second);
        if (term.mult >= 2) CHECK(generic_ext(q, term.root, term.root) == 0);
        sum = add(sum, scale(term.mult, term.root));
      }
      CHECK(sum == a);
      CHECK(d.total == a);
      for (std::size_t i = 0; i < d.terms.size(); ++i)
        for (std::size_t j = i + 1; j < d.terms.size(); ++j) {
          CHECK(d.terms[i].root != d.terms[j].root);
          CHECK(generic_ext(q, d.terms[i].root, d.terms[j].root) == 0);
          CHECK(generic_ext(q, d.terms[j].root, d.terms[i].root) == 0);
          CHECK(generic_hom(q, d.terms[i].root, d.terms[j].root) == 0);
        }
      // Both split enumeration orders must land on the same decomposition.
      Decomposition r = generic_decomposition(q, a, SplitOrder::RevLex);
      REQUIRE(r.terms.size() == d.terms.size());
      auto same = [](const DecompTerm& s, const DecompTerm& t) {
        return s.root == t.root && s.mult == t.mult && s.cls == t.cls;
      };
      for (std::size_t i = 0; i < d.terms.size(); ++i)
        CHECK(same(d.terms[i], r.terms[i]));
    }
  }
}

TEST_CASE("generic decomposition input validation") {
  CHECK_FAILS(generic_decomposition(a2(), {1, -1}), Err::Precondition);
  CHECK_FAILS(generic_decomposition(a2(), {1}), Err::Precondition);
  Quiver cyclic(2, {{0, 1}, {1, 0}});
  CHECK_FAILS(generic_decomposition(cyclic, {1, 1}), Err::OrientedCycle);
}
