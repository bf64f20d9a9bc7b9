#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilbreadth/matrix.hpp"

namespace nilbreadth {

// Finite-dimensional Lie algebra given by structure constants on the basis
// e_0..e_{n-1}: [e_i, e_j] = sum_k c_ij^k e_k. Only i < j is stored; the
// other half follows from antisymmetry. Indices are 0-based in the API and
// 1-based in documents.
class LieAlgebra {
 public:
  /// Abelian algebra of the given dimension.
  LieAlgebra(FieldSpec field, std::size_t dim);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  bool validated() const noexcept { return validated_; }

  /// Sets [e_i, e_j]; i > j stores the negated vector at (j, i).
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  /// [e_i, e_j] for any i, j.
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  /// Stored vector for i < j.
  const Vector& structure(std::size_t i, std::size_t j) const;

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Column j is [x, e_j].
  Matrix ad_matrix(const Vector& x) const;
  bool is_abelian() const;

  /// Equal structure constants (the validation flag is ignored).
  bool operator==(const LieAlgebra& rhs) const;

  std::string describe() const;

 private:
  friend LieAlgebra validate_algebra(LieAlgebra);
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  FieldSpec field_;
  std::size_t dim_;
  std::vector<Vector> constants_;  // indexed by pair_index(i, j), i < j
  bool validated_ = false;
};

class JacobiViolation : public Error {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, Vector residual);
  std::size_t i, j, k;  // 0-based
  Vector residual;
};

/// Checks the Jacobi identity on every basis triple i < j < k.
LieAlgebra validate_algebra(LieAlgebra algebra);

// Invertible change of basis; the columns of forward() are the new basis
// vectors written in old coordinates.
class BasisChange {
 public:
  /// Throws SingularMatrix.
  explicit BasisChange(Matrix forward);
  static BasisChange identity(FieldSpec field, std::size_t n);
  static BasisChange from_columns(FieldSpec field, std::size_t n, const std::vector<Vector>& columns);

  const Matrix& forward() const noexcept { return forward_; }
  const Matrix& inverse() const noexcept { return inverse_; }
  std::size_t dim() const noexcept { return forward_.rows(); }

  /// this * rhs: first rhs, then this, in the sense change_basis(change_basis(L, A), B) = change_basis(L, A * B).
  BasisChange compose(const BasisChange& rhs) const;
  /// Block diagonal with this block first.
  BasisChange direct_sum(const BasisChange& rhs) const;

 private:
  BasisChange(Matrix forward, Matrix inverse) : forward_(std::move(forward)), inverse_(std::move(inverse)) {}
  Matrix forward_;
  Matrix inverse_;
};

/// Structure constants in the basis given by the columns of P.
LieAlgebra change_basis(const LieAlgebra& algebra, const BasisChange& p);

struct InvariantProfile {
  std::size_t dim = 0;
  std::size_t dim_derived = 0;
  std::size_t dim_center = 0;
  std::vector<std::size_t> lcs_dims;  // dim L^1 = L, dim L^2, ...; ends with 0 when nilpotent
  bool nilpotent = false;
  bool is_pure = false;

  std::size_t nilpotency_class() const;  // lcs length - 1 for nilpotent algebras
  bool operator==(const InvariantProfile&) const = default;
  std::string to_string() const;
};

struct StructuralInvariants {
  InvariantProfile profile;
  Subspace center;
  Subspace derived;
  std::vector<Subspace> lcs;  // L^1, L^2, ...
};

StructuralInvariants structural_invariants(const LieAlgebra& algebra);
InvariantProfile invariant_profile(const LieAlgebra& algebra);
Subspace center(const LieAlgebra& algebra);
Subspace derived_algebra(const LieAlgebra& algebra);
/// [A, B] for subspaces A, B.
Subspace bracket_subspaces(const LieAlgebra& algebra, const Subspace& a, const Subspace& b);
/// C_L(S) = {x : [x, S] = 0}.
Subspace centralizer(const LieAlgebra& algebra, const Subspace& s);
bool is_ideal(const LieAlgebra& algebra, const Subspace& s);
bool is_abelian_subspace(const LieAlgebra& algebra, const Subspace& s);
/// Throws NotNilpotent.
void require_nilpotent(const LieAlgebra& algebra);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
LieAlgebra abelian_algebra(FieldSpec field, std::size_t dim);

struct Quotient {
  LieAlgebra algebra;
  Matrix projection;  // dim(L/I) x dim(L): old coordinates -> quotient coordinates
};

/// L / I with the quotient basis given by the non-pivot coordinates of I.
/// Throws NotAnIdeal.
Quotient quotient(const LieAlgebra& algebra, const Subspace& ideal);

/// A self-centralizing abelian ideal (hence maximal abelian for nilpotent L),
/// grown from Z(L) by adjoining canonical vectors. Throws NotNilpotent.
Subspace maximal_abelian_ideal(const LieAlgebra& algebra);

struct PurifyResult {
  LieAlgebra pure;
  std::size_t abelian_dim = 0;
  BasisChange witness;  // transports L to pure (+) A(abelian_dim), pure block first
};

/// Splits off the largest central summand: L = pure (+) W with W central and
/// Z(pure) inside [pure, pure].
PurifyResult purify(const LieAlgebra& algebra);

}  // namespace nilbreadth
