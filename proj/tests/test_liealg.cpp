#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "nilbreadth/lie_algebra.hpp"

using namespace nilbreadth;
using fixtures::build;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

BasisChange random_change(FieldSpec f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(f, static_cast<long>(rng() % 5) - 2);
    if (rank(m) == n) return BasisChange(m);
  }
}
}  // namespace

TEST_SUITE("lie_algebra") {
  TEST_CASE("Heisenberg validates") { CHECK(fixtures::heisenberg(Q).validated()); }

  TEST_CASE("Jacobi violation reports triple and residual") {
    LieAlgebra l(Q, 3);
    l.set_bracket(0, 1, make_vector(Q, {0, 0, 1}));
    l.set_bracket(0, 2, make_vector(Q, {1, 0, 0}));
    try {
      validate_algebra(l);
      FAIL("expected a violation");
    } catch (const JacobiViolation& v) {
      CHECK(v.i == 0);
      CHECK(v.j == 1);
      CHECK(v.k == 2);
      CHECK(v.residual == make_vector(Q, {0, 0, 1}));
    }
  }

  TEST_CASE("abelian algebras validate") {
    for (std::size_t d = 0; d < 6; ++d) CHECK(validate_algebra(abelian_algebra(F3, d)).validated());
  }

  TEST_CASE("ad is a derivation representation") {
    std::mt19937_64 rng(3);
    for (const auto& l : {fixtures::n4(F5), fixtures::m5(F5), fixtures::m6(F5), fixtures::hh(F5)}) {
      for (int t = 0; t < 20; ++t) {
        Vector x, y;
        for (std::size_t i = 0; i < l.dim(); ++i) {
          x.emplace_back(F5, static_cast<long>(rng() % 5));
          y.emplace_back(F5, static_cast<long>(rng() % 5));
        }
        Matrix lhs = l.ad_matrix(l.bracket(x, y));
        Matrix ax = l.ad_matrix(x), ay = l.ad_matrix(y);
        Matrix rhs = ax * ay;
        Matrix yx = ay * ax;
        for (std::size_t r = 0; r < l.dim(); ++r)
          for (std::size_t c = 0; c < l.dim(); ++c) rhs(r, c) -= yx(r, c);
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("structural invariants of the 4-dim filiform algebra") {
    auto p = invariant_profile(fixtures::n4(Q));
    CHECK(p.dim_derived == 2);
    CHECK(p.dim_center == 1);
    CHECK(p.lcs_dims == std::vector<std::size_t>{4, 2, 1, 0});
    CHECK(p.nilpotent);
    CHECK(p.is_pure);
    CHECK(p.nilpotency_class() == 3);
  }

  TEST_CASE("free 2-step on three generators") {
    auto p = invariant_profile(fixtures::m6(Q));
    CHECK(p.dim_derived == 3);
    CHECK(p.dim_center == 3);
  }

  TEST_CASE("abelian profile") {
    auto p = invariant_profile(abelian_algebra(Q, 4));
    CHECK(p.dim_derived == 0);
    CHECK_FALSE(p.is_pure);
  }

  TEST_CASE("non-nilpotent algebra is detected") {
    // [e1, e2] = e2
    auto l = build(Q, 2, {{1, 2, 2, 1}});
    CHECK_FALSE(invariant_profile(l).nilpotent);
    CHECK_THROWS_AS(require_nilpotent(l), Error);
  }

  TEST_CASE("change of basis") {
    auto h = fixtures::heisenberg(Q);
    CHECK(change_basis(h, BasisChange::identity(Q, 3)) == h);
    auto swap = BasisChange(Matrix::from_rows(Q, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    auto s = change_basis(h, swap);
    CHECK(s.structure(0, 1) == make_vector(Q, {0, 0, -1}));
  }

  TEST_CASE("profile is preserved by random basis changes") {
    std::mt19937_64 rng(17);
    for (const auto& l : {fixtures::n4(F5), fixtures::m5(F5), fixtures::m6(F5), fixtures::hh(F5)}) {
      auto p = invariant_profile(l);
      for (int t = 0; t < 100; ++t) CHECK(invariant_profile(change_basis(l, random_change(F5, l.dim(), rng))) == p);
    }
  }

  TEST_CASE("composition of basis changes") {
    std::mt19937_64 rng(23);
    auto l = fixtures::m5(Q);
    for (int t = 0; t < 10; ++t) {
      auto a = random_change(Q, 5, rng), b = random_change(Q, 5, rng);
      CHECK(change_basis(change_basis(l, a), b) == change_basis(l, a.compose(b)));
    }
  }

  TEST_CASE("direct sum of two Heisenberg algebras") {
    auto s = direct_sum(fixtures::heisenberg(Q), fixtures::heisenberg(Q));
    CHECK(s.dim() == 6);
    CHECK(s.structure(0, 1) == unit_vector(Q, 6, 2));
    CHECK(s.structure(3, 4) == unit_vector(Q, 6, 5));
    CHECK(invariant_profile(s).dim_derived == 2);
  }

  TEST_CASE("quotient by the center") {
    auto l = fixtures::n4(Q);
    auto q = quotient(l, center(l));
    CHECK(q.algebra == fixtures::heisenberg(Q));
    CHECK(quotient(l, Subspace::full(Q, 4)).algebra.dim() == 0);
    CHECK_THROWS_AS(quotient(l, Subspace::span(Q, 4, {unit_vector(Q, 4, 0)})), Error);
  }

  TEST_CASE("quotient by the center drops the class by one") {
    for (const auto& l : {fixtures::n4(F3), fixtures::m5(F3), fixtures::m6(F3), fixtures::hh(F3)}) {
      auto q = quotient(l, center(l));
      CHECK(invariant_profile(q.algebra).nilpotency_class() + 1 == invariant_profile(l).nilpotency_class());
    }
  }

  TEST_CASE("maximal abelian ideals") {
    auto a = abelian_algebra(Q, 3);
    CHECK(maximal_abelian_ideal(a) == Subspace::full(Q, 3));
    auto n4 = fixtures::n4(Q);
    auto m = maximal_abelian_ideal(n4);
    CHECK(m == Subspace::span(Q, 4, {unit_vector(Q, 4, 1), unit_vector(Q, 4, 2), unit_vector(Q, 4, 3)}));
    auto h = fixtures::heisenberg(F3);
    auto mh = maximal_abelian_ideal(h);
    CHECK(mh.dim() == 2);
    CHECK(centralizer(h, mh) == mh);
  }

  TEST_CASE("maximal abelian ideal contract on catalog algebras") {
    for (const auto& l : {fixtures::n4(Q), fixtures::m5(Q), fixtures::m6(Q), fixtures::hh(Q)}) {
      auto a = maximal_abelian_ideal(l);
      CHECK(is_abelian_subspace(l, a));
      CHECK(is_ideal(l, a));
      CHECK(centralizer(l, a) == a);
      CHECK(a.contains(center(l)));
    }
  }

  TEST_CASE("purify") {
    auto h = fixtures::heisenberg(Q);
    auto r = purify(direct_sum(h, abelian_algebra(Q, 2)));
    CHECK(r.abelian_dim == 2);
    CHECK(r.pure == h);
    auto n4 = purify(fixtures::n4(Q));
    CHECK(n4.abelian_dim == 0);
    CHECK(n4.pure.dim() == 4);
    auto ab = purify(abelian_algebra(Q, 3));
    CHECK(ab.pure.dim() == 0);
    CHECK(ab.abelian_dim == 3);
  }

  TEST_CASE("purify witness reproduces the input") {
    std::mt19937_64 rng(31);
    auto base = direct_sum(fixtures::n4(F5), abelian_algebra(F5, 2));
    for (int t = 0; t < 20; ++t) {
      auto l = change_basis(base, random_change(F5, 6, rng));
      auto r = purify(l);
      CHECK(r.abelian_dim == 2);
      auto split = direct_sum(r.pure, abelian_algebra(F5, r.abelian_dim));
      CHECK(change_basis(l, r.witness) == split);
      CHECK(purify(r.pure).abelian_dim == 0);
      CHECK(invariant_profile(r.pure).is_pure);
    }
  }
}
