#include <random>

#include "doctest.h"
#include "nilbreadth/matrix.hpp"
#include "nilbreadth/polynomial.hpp"

using namespace nilbreadth;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec F7 = FieldSpec::prime(7);

// Naive rank by trying every subset of rows is too slow; instead compare
// against determinant-free elimination written out directly on residues.
std::size_t residue_rank(std::vector<std::vector<long>> a, long p) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && ((a[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    long inv = 1;
    while ((((a[r][c] % p) + p) % p) * inv % p != 1) ++inv;
    for (std::size_t i = r + 1; i < rows; ++i) {
      long f = ((a[i][c] % p) + p) % p * inv % p;
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = ((a[i][k] - f * a[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}
}  // namespace

TEST_SUITE("field") {
  TEST_CASE("prime field construction rejects 2 and composites") {
    CHECK_THROWS_AS(FieldSpec::prime(2), Error);
    CHECK_THROWS_AS(FieldSpec::prime(9), Error);
    CHECK(FieldSpec::parse("gf:7") == F7);
    CHECK(FieldSpec::parse("q") == Q);
    CHECK(FieldSpec::parse("GF(5)") == F5);
    CHECK(F7.to_string() == "gf:7");
  }

  TEST_CASE("residue arithmetic") {
    Scalar a(F7, 3), b(F7, 5);
    CHECK((a + b).residue() == 1);
    CHECK((a - b).residue() == 5);
    CHECK((a * b).residue() == 1);
    CHECK((a / b).residue() == 2);
    CHECK(Scalar(F7, -1).residue() == 6);
    CHECK_THROWS_AS(Scalar::zero(F7).inverse(), Error);
    CHECK_THROWS_AS(a + Scalar(F5, 1), Error);
  }

  TEST_CASE("rational arithmetic and parsing") {
    Scalar h = Scalar::parse(Q, "4/8");
    CHECK(h.to_string() == "1/2");
    CHECK(Scalar::parse(Q, "-3").to_string() == "-3");
    CHECK(Scalar::parse(F5, "-1").to_string() == "4");
    CHECK((h * Scalar(Q, 4)).to_string() == "2");
    CHECK_THROWS_AS(Scalar::parse(Q, "x"), Error);
  }

  TEST_CASE("square roots") {
    auto r = sqrt_in_field(Scalar(F7, 2));
    REQUIRE(r);
    CHECK(r->residue() == 3);
    CHECK_FALSE(sqrt_in_field(Scalar(F7, 3)));
    auto q = sqrt_in_field(Scalar::parse(Q, "9/4"));
    REQUIRE(q);
    CHECK(q->to_string() == "3/2");
    CHECK_FALSE(sqrt_in_field(Scalar(Q, 2)));
    CHECK_FALSE(sqrt_in_field(Scalar(Q, -4)));
    CHECK(sqrt_in_field(Scalar::zero(F7))->is_zero());
  }

  TEST_CASE("sqrt agrees with exhaustive residue search") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
      FieldSpec f = FieldSpec::prime(p);
      for (std::uint32_t a = 0; a < p; ++a) {
        std::optional<std::uint32_t> least;
        for (std::uint32_t s = 0; s < p && !least; ++s)
          if (s * s % p == a) least = s;
        auto r = sqrt_in_field(Scalar(f, static_cast<long>(a)));
        CHECK(r.has_value() == least.has_value());
        if (r) CHECK(r->residue() == *least);
        CHECK(is_nonzero_square(Scalar(f, static_cast<long>(a))) == (least.has_value() && a != 0));
      }
    }
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("identity has full rank and trivial kernel") {
    auto r = rref(Matrix::identity(Q, 3));
    CHECK(r.rank == 3);
    CHECK(r.kernel().dim() == 0);
  }

  TEST_CASE("proportional rows") {
    auto r = rref(Matrix::from_rows(Q, {{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    REQUIRE(r.kernel_basis.size() == 1);
    CHECK(r.kernel().contains(make_vector(Q, {-2, 1})));
  }

  TEST_CASE("singular over GF(5)") {
    CHECK(rank(Matrix::from_rows(F5, {{2, 1}, {3, 4}})) == 1);
    CHECK(rank(Matrix::from_rows(F7, {{2, 1}, {3, 4}})) == 2);
  }

  TEST_CASE("mixed fields are rejected") {
    Matrix m(Q, 2, 2);
    m(0, 1) = Scalar(F5, 1);
    CHECK_THROWS_AS(rref(m), Error);
  }

  TEST_CASE("rank agrees with an independent residue elimination") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
      std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
      std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
      for (auto& row : a)
        for (auto& x : row) x = static_cast<long>(rng() % 3);
      CHECK(rank(Matrix::from_rows(F3, a)) == residue_rank(a, 3));
    }
  }

  TEST_CASE("inverse") {
    Matrix m = Matrix::from_rows(Q, {{2, 1}, {1, 1}});
    CHECK(m * inverse(m) == Matrix::identity(Q, 2));
    CHECK_THROWS_AS(inverse(Matrix::from_rows(Q, {{1, 2}, {2, 4}})), Error);
  }

  TEST_CASE("solve") {
    Matrix m = Matrix::from_rows(F7, {{1, 2}, {2, 4}});
    auto x = solve(m, make_vector(F7, {3, 6}));
    REQUIRE(x);
    CHECK(m * *x == make_vector(F7, {3, 6}));
    CHECK_FALSE(solve(m, make_vector(F7, {1, 0})));
  }
}

TEST_SUITE("subspace") {
  TEST_CASE("sum, intersection, containment") {
    auto e1 = Subspace::span(Q, 3, {make_vector(Q, {1, 0, 0})});
    auto e2 = Subspace::span(Q, 3, {make_vector(Q, {0, 1, 0})});
    auto s = std::get<Subspace>(subspace_algebra(e1, e2, SubspaceOp::Sum));
    CHECK(s == Subspace::span(Q, 3, {make_vector(Q, {1, 0, 0}), make_vector(Q, {0, 1, 0})}));
    auto a = Subspace::span(Q, 3, {make_vector(Q, {1, 0, 0}), make_vector(Q, {0, 1, 0})});
    auto b = Subspace::span(Q, 3, {make_vector(Q, {0, 1, 0}), make_vector(Q, {0, 0, 1})});
    CHECK(std::get<Subspace>(subspace_algebra(a, b, SubspaceOp::Intersect)) == e2);
    CHECK(std::get<bool>(subspace_algebra(a, e2, SubspaceOp::Contains)));
    CHECK_FALSE(std::get<bool>(subspace_algebra(e2, a, SubspaceOp::Contains)));
    CHECK_THROWS_AS(e1.sum(Subspace::zero(Q, 2)), Error);
  }

  TEST_CASE("complement of the diagonal line") {
    auto d = Subspace::span(Q, 2, {make_vector(Q, {1, 1})});
    auto c = d.complement();
    CHECK(c == Subspace::span(Q, 2, {make_vector(Q, {0, 1})}));
    CHECK(c.intersect(d).dim() == 0);
    CHECK(c.sum(d).dim() == 2);
  }

  TEST_CASE("random complements are direct summands") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
      std::size_t n = 1 + rng() % 5;
      std::vector<Vector> gens;
      for (std::size_t g = 0; g < rng() % 4; ++g) {
        Vector v;
        for (std::size_t i = 0; i < n; ++i) v.emplace_back(F5, static_cast<long>(rng() % 5));
        gens.push_back(v);
      }
      auto s = Subspace::span(F5, n, gens);
      auto c = s.complement();
      CHECK(c.dim() + s.dim() == n);
      CHECK(c.intersect(s).dim() == 0);
      for (const auto& g : gens) CHECK(s.contains(g));
    }
  }

  TEST_CASE("relative complement lies in the outer space") {
    auto outer = Subspace::span(Q, 3, {make_vector(Q, {1, 1, 0}), make_vector(Q, {0, 0, 1})});
    auto inner = Subspace::span(Q, 3, {make_vector(Q, {1, 1, 1})});
    auto rc = relative_complement(outer, inner);
    REQUIRE(rc.size() == 1);
    CHECK(outer.contains(rc[0]));
    CHECK_FALSE(inner.contains(rc[0]));
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("exact division") {
    auto x = Polynomial::linear(make_vector(Q, {1, 0}));
    auto y = Polynomial::linear(make_vector(Q, {0, 1}));
    auto p = (x + y) * (x - y);
    CHECK(p.divide_exact(x + y) == x - y);
    CHECK_THROWS_AS(p.divide_exact(x), Error);
  }

  TEST_CASE("nonvanishing point") {
    auto x = Polynomial::linear(make_vector(Q, {1, 0}));
    auto y = Polynomial::linear(make_vector(Q, {0, 1}));
    auto p = x * y * (x - y);
    auto pt = nonvanishing_point(p);
    CHECK_FALSE(p.evaluate(pt).is_zero());
  }

  TEST_CASE("generic rank of a diagonal linear matrix") {
    LinPolyMatrix m(Q, 2, 2, 2);
    m.coeff(0, 0, 0) = Scalar::one(Q);
    m.coeff(1, 1, 1) = Scalar::one(Q);
    auto g = generic_rank_with_minor(m);
    CHECK(g.rank == 2);
    CHECK_FALSE(g.minor.is_zero());
    LinPolyMatrix z(Q, 3, 3, 2);
    CHECK(generic_rank(z) == 0);
  }

  TEST_CASE("generic rank is not fooled by singular evaluation points") {
    // [[t1, t2], [t2, t1]]: singular at t1 = t2 but generically rank 2.
    LinPolyMatrix m(Q, 2, 2, 2);
    m.coeff(0, 0, 0) = m.coeff(1, 1, 0) = Scalar::one(Q);
    m.coeff(0, 1, 1) = m.coeff(1, 0, 1) = Scalar::one(Q);
    auto g = generic_rank_with_minor(m);
    CHECK(g.rank == 2);
    CHECK(rank(m.evaluate(nonvanishing_point(g.minor))) == 2);
  }
}
