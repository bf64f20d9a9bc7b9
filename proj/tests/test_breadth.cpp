#include "doctest.h"
#include "fixtures.hpp"
#include "nilbreadth/breadth.hpp"

using namespace nilbreadth;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);
}  // namespace

TEST_SUITE("breadth") {
  TEST_CASE("element breadth") {
    auto n4 = fixtures::n4(Q);
    CHECK(element_breadth(n4, unit_vector(Q, 4, 3)) == 0);
    CHECK(element_breadth(n4, unit_vector(Q, 4, 0)) == 2);
    CHECK(element_breadth(fixtures::heisenberg(Q), unit_vector(Q, 3, 0)) == 1);
  }

  TEST_CASE("relative breadth") {
    auto n4 = fixtures::n4(Q);
    auto a = maximal_abelian_ideal(n4);
    CHECK(relative_breadth(n4, a, unit_vector(Q, 4, 0)) == 2);
    CHECK(relative_breadth(n4, a, unit_vector(Q, 4, 1)) == 0);
    CHECK_THROWS_AS(relative_breadth(n4, Subspace::span(Q, 4, {unit_vector(Q, 4, 0)}), unit_vector(Q, 4, 1)),
                    Error);
  }

  TEST_CASE("algebra breadth over both field kinds") {
    for (auto f : {Q, F3, F5}) {
      CAPTURE(f.to_string());
      CHECK(algebra_breadth(abelian_algebra(f, 4)).value == 0);
      CHECK(algebra_breadth(fixtures::heisenberg(f)).value == 1);
      CHECK(algebra_breadth(fixtures::n4(f)).value == 2);
      CHECK(algebra_breadth(fixtures::hh(f)).value == 2);
      CHECK(algebra_breadth(fixtures::m5(f)).value == 2);
      CHECK(algebra_breadth(fixtures::m6(f)).value == 2);
    }
  }

  TEST_CASE("witness attains the reported value") {
    for (auto f : {Q, F3, F5}) {
      for (const auto& l : {fixtures::n4(f), fixtures::m6(f), fixtures::hh(f)}) {
        auto r = algebra_breadth(l);
        CHECK(element_breadth(l, r.witness) == r.value);
      }
    }
  }

  TEST_CASE("witness is the lexicographically first maximizer") {
    auto l = fixtures::n4(F3);
    auto r = algebra_breadth(l);
    CHECK(r.method == BreadthMethod::Exhaustive);
    CHECK(r.witness == make_vector(F3, {1, 0, 0, 0}));
    auto h = fixtures::hh(F3);
    // Needs both x1 and x3 components; the first such vector in order.
    CHECK(algebra_breadth(h).witness == make_vector(F3, {0, 1, 0, 1, 0, 0}));
  }

  TEST_CASE("enumeration cap") {
    BreadthOptions tight;
    tight.enumeration_cap = 5;
    CHECK_THROWS_AS(algebra_breadth(fixtures::m6(F5), tight), Error);
  }

  TEST_CASE("generic rank of symbolic ad") {
    CHECK(generic_rank(symbolic_ad(fixtures::n4(Q))) == 2);
    CHECK(generic_rank(symbolic_ad(abelian_algebra(Q, 3))) == 0);
    CHECK(generic_rank(symbolic_ad(fixtures::heisenberg(Q))) == 1);
  }

  TEST_CASE("relative algebra breadth") {
    auto n4 = fixtures::n4(F3);
    auto a = maximal_abelian_ideal(n4);
    auto r = relative_algebra_breadth(n4, a);
    CHECK(r.value == 2);
    CHECK(relative_breadth(n4, a, r.witness) == 2);
    auto rq = relative_algebra_breadth(fixtures::n4(Q), maximal_abelian_ideal(fixtures::n4(Q)));
    CHECK(rq.value == 2);
  }

  TEST_CASE("characterization") {
    auto m5 = characterize_breadth(fixtures::m5(Q));
    CHECK(m5.predicted == PredictedBreadth::Two);
    CHECK(characterize_breadth(fixtures::heisenberg(Q)).predicted == PredictedBreadth::One);
    CHECK(characterize_breadth(abelian_algebra(Q, 2)).predicted == PredictedBreadth::Zero);
    auto with = characterize_breadth(fixtures::hh(F3), 2);
    CHECK(with.consistent());
    REQUIRE(with.bounds);
    CHECK(with.bounds->all());
    CHECK_THROWS_AS(characterize_breadth(fixtures::build(Q, 2, {{1, 2, 2, 1}})), Error);
  }

  TEST_CASE("trial sequence order") {
    std::vector<Vector> seen;
    for_each_trial_point(Q, 2, [&](const Vector& v) {
      seen.push_back(v);
      return false;
    });
    REQUIRE(seen.size() == 2 + 1 + 9);
    CHECK(seen[0] == make_vector(Q, {1, 0}));
    CHECK(seen[2] == make_vector(Q, {1, 1}));
    CHECK(seen[3] == make_vector(Q, {-1, -1}));
  }
}
