#include <random>

#include "doctest.h"
#include "nilbreadth/breadth.hpp"
#include "nilbreadth/classify.hpp"

using namespace nilbreadth;
using K = CanonicalLabel::Kind;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec F7 = FieldSpec::prime(7);

BasisChange scramble(FieldSpec f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(f, static_cast<long>(rng() % 5) - 2);
    if (rank(m) == n) return BasisChange(m);
  }
}

CanonicalLabel label(const char* text, FieldSpec f) { return CanonicalLabel::parse(text, f); }

void round_trip(const CanonicalLabel& l, FieldSpec f, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LieAlgebra base = catalog_make(l, f);
  const CanonicalLabel expected = expected_classification(l);
  for (int t = 0; t < trials; ++t) {
    LieAlgebra input = t == 0 ? base : change_basis(base, scramble(f, base.dim(), rng));
    auto rep = classify(input);
    CAPTURE(l.to_string());
    CAPTURE(f.to_string());
    CAPTURE(t);
    CHECK(rep.label.to_string() == expected.to_string());
    CHECK(verify_witness(input, rep));
  }
}
}  // namespace

TEST_SUITE("symplectic") {
  TEST_CASE("standard block is already normal") {
    auto r = symplectic_normalize(Matrix::from_rows(Q, {{0, 1}, {-1, 0}}));
    CHECK(r.k == 1);
    CHECK(r.basis.forward() == Matrix::identity(Q, 2));
  }

  TEST_CASE("zero form") { CHECK(symplectic_normalize(Matrix(Q, 3, 3)).k == 0); }

  TEST_CASE("scaled block") {
    Matrix m = Matrix::from_rows(Q, {{0, 2, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    auto r = symplectic_normalize(m);
    CHECK(r.k == 1);
    Matrix p = Matrix::identity(Q, 4);
    p(1, 1) = Scalar::parse(Q, "1/2");
    CHECK(r.basis.forward() == p);
  }

  TEST_CASE("non-alternating input") {
    CHECK_THROWS_AS(symplectic_normalize(Matrix::from_rows(Q, {{1, 0}, {0, 0}})), Error);
    CHECK_THROWS_AS(symplectic_normalize(Matrix::from_rows(Q, {{0, 1}, {1, 0}})), Error);
  }

  TEST_CASE("random forms reach the canonical block matrix") {
    std::mt19937_64 rng(2);
    for (auto f : {Q, F3, F7}) {
      for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + rng() % 6;
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = Scalar(f, static_cast<long>(rng() % 5) - 2);
            m(j, i) = -m(i, j);
          }
        auto r = symplectic_normalize(m);
        Matrix can = r.basis.forward().transpose() * m * r.basis.forward();
        Matrix expect(f, n, n);
        for (std::size_t i = 0; i < r.k; ++i) {
          expect(2 * i, 2 * i + 1) = Scalar::one(f);
          expect(2 * i + 1, 2 * i) = -Scalar::one(f);
        }
        CHECK(can == expect);
        CHECK(2 * r.k == rank(m));
      }
    }
  }
}

TEST_SUITE("labels") {
  TEST_CASE("round trip through text") {
    for (const char* s : {"A(3)", "B1(k=2,m=1)", "N4+A(0)", "M5+A(2)", "M6+A(0)", "Q(n=3)+A(0)", "P5+A(1)", "HH+A(0)",
                          "L(alpha=2)+A(1)", "UNCLASSIFIED(dim>=7 stratum)"})
      CHECK(label(s, F5).to_string() == s);
    CHECK(label("N4", F5).to_string() == "N4+A(0)");
    CHECK(label("L(alpha=-2)", Q).alpha->to_string() == "-2");
    CHECK_THROWS_AS(label("X9", F5), Error);
    CHECK_THROWS_AS(label("B1(k=2)", F5), Error);
  }

  TEST_CASE("catalog constants") {
    auto h = catalog_make(CanonicalLabel::breadth1(1), Q);
    CHECK(h.dim() == 3);
    CHECK(h.structure(0, 1) == unit_vector(Q, 3, 2));
    auto m6 = catalog_make(label("M6", Q), Q);
    CHECK(m6.structure(0, 1) == unit_vector(Q, 6, 3));
    CHECK(m6.structure(0, 2) == unit_vector(Q, 6, 4));
    CHECK(m6.structure(1, 2) == unit_vector(Q, 6, 5));
    auto l0 = catalog_make(CanonicalLabel::lalpha(Scalar::zero(Q)), Q);
    CHECK(l0.structure(0, 1) == unit_vector(Q, 6, 4));
    CHECK(l0.structure(1, 2) == unit_vector(Q, 6, 5));
    CHECK(l0.structure(2, 3) == unit_vector(Q, 6, 4));
    CHECK(is_zero(l0.structure(0, 3)));
    CHECK_THROWS_AS(catalog_make(CanonicalLabel::breadth1(0), Q), Error);
    CHECK_THROWS_AS(catalog_make(CanonicalLabel::qfamily(0), Q), Error);
  }

  TEST_CASE("label invariants match catalog profiles") {
    for (const char* s : {"N4", "M5", "M6", "Q(n=1)", "Q(n=2)", "Q(n=3)", "P5", "HH", "L(alpha=0)", "L(alpha=3)"}) {
      auto l = catalog_make(label(s, F7), F7);
      auto p = invariant_profile(l);
      CAPTURE(s);
      CHECK(p.nilpotent);
      CHECK(p.is_pure);
      CHECK(algebra_breadth(l).value == 2);
    }
  }

  TEST_CASE("square class representatives") {
    CHECK(square_class_representative(Scalar(F7, 2)).residue() == 1);
    CHECK(square_class_representative(Scalar(F7, 5)).residue() == 3);
    CHECK(square_class_representative(Scalar(F5, 3)).residue() == 2);
    CHECK(square_class_representative(Scalar::parse(Q, "8/9")).to_string() == "2");
    CHECK(square_class_representative(Scalar::parse(Q, "-12")).to_string() == "-3");
    CHECK(square_class_representative(Scalar::parse(Q, "1/2")).to_string() == "2");
  }
}

TEST_SUITE("classify") {
  TEST_CASE("breadth one") {
    std::mt19937_64 rng(9);
    auto h2 = catalog_make(CanonicalLabel::breadth1(2), F5);
    auto scrambled = change_basis(h2, scramble(F5, 5, rng));
    auto rep = classify_breadth1(scrambled);
    CHECK(rep.label.to_string() == "B1(k=2,m=0)");
    CHECK(verify_witness(scrambled, rep));
    auto h1a1 = catalog_make(CanonicalLabel::breadth1(1, 1), Q);
    CHECK(classify_breadth1(h1a1).label.to_string() == "B1(k=1,m=1)");
    CHECK_THROWS_AS(classify_breadth1(catalog_make(label("N4", Q), Q)), Error);
  }

  TEST_CASE("breadth two examples") {
    std::mt19937_64 rng(4);
    auto n4 = change_basis(catalog_make(label("N4", F7), F7), scramble(F7, 4, rng));
    auto r = classify_breadth2(n4);
    CHECK(r.label.to_string() == "N4+A(0)");
    CHECK(verify_witness(n4, r));
    auto q2 = change_basis(catalog_make(label("Q(n=2)", F7), F7), scramble(F7, 6, rng));
    CHECK(classify_breadth2(q2).label.to_string() == "Q(n=2)+A(0)");
    auto hh = direct_sum(catalog_make(CanonicalLabel::breadth1(1), Q), catalog_make(CanonicalLabel::breadth1(1), Q));
    CHECK(classify_breadth2(hh).label.to_string() == "HH+A(0)");
    CHECK_THROWS_AS(classify_breadth2(catalog_make(CanonicalLabel::breadth1(1), Q)), Error);
  }

  TEST_CASE("abelian and unclassified") {
    CHECK(classify(abelian_algebra(Q, 3)).label.to_string() == "A(3)");
    // Free 2-step nilpotent on 4 generators has breadth 3.
    LieAlgebra l(F3, 10);
    std::size_t z = 4;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) l.set_bracket(i, j, unit_vector(F3, 10, z++));
    auto rep = classify(validate_algebra(l));
    CHECK(rep.label.kind == K::Unclassified);
    CHECK_FALSE(verify_witness(l, rep));
  }

  TEST_CASE("seven-dimensional stratum is left unclassified") {
    // P5-like generators with an extra pair feeding the same center.
    LieAlgebra l(F3, 7);
    l.set_bracket(0, 1, unit_vector(F3, 7, 5));
    l.set_bracket(2, 3, unit_vector(F3, 7, 6));
    l.set_bracket(0, 4, unit_vector(F3, 7, 6));
    auto v = validate_algebra(l);
    REQUIRE(algebra_breadth(v).value == 2);
    CHECK(classify(v).label.to_string() == "UNCLASSIFIED(dim>=7 stratum)");
  }

  TEST_CASE("tampered witness fails verification") {
    auto l = catalog_make(label("M5", F5), F5);
    auto rep = classify(l);
    CHECK(verify_witness(l, rep));
    Matrix w = rep.witness.forward();
    w(0, 0) += Scalar::one(F5);
    if (rank(w) == 5) {
      ClassificationReport bad{rep.label, BasisChange(w), rep.profile, {}, std::nullopt};
      CHECK_FALSE(verify_witness(l, bad));
    }
  }

  TEST_CASE("identity witness on a catalog algebra") {
    auto l = catalog_make(label("P5", F3), F3);
    ClassificationReport rep{label("P5", F3), BasisChange::identity(F3, 5), invariant_profile(l), {}, std::nullopt};
    CHECK(verify_witness(l, rep));
  }

  TEST_CASE("round trips over every field") {
    std::uint64_t seed = 100;
    for (auto f : {F3, F5, F7, Q}) {
      std::vector<CanonicalLabel> labels{CanonicalLabel::breadth1(1), CanonicalLabel::breadth1(2, 1),
                                         label("N4", f),          label("M5", f),
                                         label("M6", f),          label("Q(n=1)", f),
                                         label("Q(n=2)", f),      label("Q(n=3)", f),
                                         label("Q(n=4)", f),      label("P5", f),
                                         label("HH", f),          label("N4+A(1)", f),
                                         label("L(alpha=0)", f),  label("L(alpha=1)", f),
                                         label("L(alpha=2)", f),  label("L(alpha=-1)", f)};
      for (const auto& l : labels) round_trip(l, f, 8, seed++);
    }
  }
}

TEST_SUITE("pencil") {
  TEST_CASE("root counts") {
    CHECK(pencil_invariant(catalog_make(label("HH", F7), F7)).roots == PencilInvariant::Roots::Two);
    CHECK(pencil_invariant(catalog_make(label("L(alpha=0)", F7), F7)).roots == PencilInvariant::Roots::One);
    // -1 is a nonsquare mod 7.
    CHECK(pencil_invariant(catalog_make(label("L(alpha=1)", F7), F7)).roots == PencilInvariant::Roots::Zero);
    CHECK_THROWS_AS(pencil_invariant(catalog_make(label("M6", F7), F7)), Error);
  }

  TEST_CASE("root count is a basis-change invariant") {
    std::mt19937_64 rng(8);
    for (const char* s : {"HH", "L(alpha=0)", "L(alpha=1)", "L(alpha=3)"}) {
      auto l = catalog_make(label(s, F7), F7);
      auto roots = pencil_invariant(l).roots;
      for (int t = 0; t < 100; ++t) CHECK(pencil_invariant(change_basis(l, scramble(F7, 6, rng))).roots == roots);
    }
  }
}

TEST_SUITE("lalpha") {
  TEST_CASE("square criterion") {
    auto e = lalpha_equivalence(Scalar(F5, 4), Scalar(F5, 1));
    CHECK(e.outcome == LAlphaEquivalence::Outcome::Equivalent);
    CHECK(e.gamma->residue() == 2);
    auto n = lalpha_equivalence(Scalar(F7, 1), Scalar(F7, 3));
    CHECK(n.outcome == LAlphaEquivalence::Outcome::NotBySquareCriterion);
    CHECK_THROWS_AS(lalpha_equivalence(Scalar(F7, 1), Scalar(F5, 1)), Error);
  }

  TEST_CASE("sqrt reduction certificate") {
    auto e = lalpha_equivalence(Scalar(F5, 4), Scalar(F5, 1));
    REQUIRE(e.sqrt_neg_alpha);
    CHECK(e.sqrt_neg_alpha->residue() == 1);
    auto l = catalog_make(CanonicalLabel::lalpha(Scalar(F5, 4)), F5);
    CHECK(element_breadth(l, *e.breadth_one_element) == 1);
  }

  TEST_CASE("certificates satisfy alpha = gamma^2 beta") {
    for (long a = 0; a < 7; ++a)
      for (long b = 0; b < 7; ++b) {
        auto e = lalpha_equivalence(Scalar(F7, a), Scalar(F7, b));
        if (e.outcome == LAlphaEquivalence::Outcome::Equivalent) {
          CHECK_FALSE(e.gamma->is_zero());
          CHECK(*e.gamma * *e.gamma * Scalar(F7, b) == Scalar(F7, a));
        }
      }
  }

  TEST_CASE("zero beta") {
    CHECK(lalpha_equivalence(Scalar(F7, 0), Scalar(F7, 0)).outcome == LAlphaEquivalence::Outcome::Equivalent);
    CHECK(lalpha_equivalence(Scalar(F7, 2), Scalar(F7, 0)).outcome ==
          LAlphaEquivalence::Outcome::NotBySquareCriterion);
  }
}
