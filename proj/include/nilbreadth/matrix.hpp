#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nilbreadth/field.hpp"

namespace nilbreadth {

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec field, std::size_t n);
Vector unit_vector(FieldSpec field, std::size_t n, std::size_t index);
Vector make_vector(FieldSpec field, const std::vector<long>& entries);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
/// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);
std::string to_string(const Vector& v);

// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<long>>& rows);
  static Matrix from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix& rhs) const;

  /// Throws FieldMismatch when some entry lives in another field.
  void require_uniform_field() const;

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

class Subspace;

struct RrefResult {
  Matrix rref;  // same shape as the input
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::vector<Vector> kernel_basis;  // one vector per free column

  Subspace kernel() const;
};

/// Reduced row-echelon form. Pivots are chosen as the lowest row index in
/// the leftmost column that still has a nonzero entry.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Particular solution of m x = b with free variables set to zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Throws SingularMatrix.
Matrix inverse(const Matrix& m);

// Subspace of F^n stored as its unique RREF basis; equal subspaces compare
// equal entry for entry.
class Subspace {
 public:
  static Subspace zero(FieldSpec field, std::size_t ambient);
  static Subspace full(FieldSpec field, std::size_t ambient);
  static Subspace span(FieldSpec field, std::size_t ambient, const std::vector<Vector>& vectors);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Matrix basis_matrix() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Standard basis vectors at the non-pivot coordinates.
  Subspace complement() const;
  /// Indices of the non-pivot coordinates (the complement basis).
  std::vector<std::size_t> non_pivots() const;
  /// v minus its projection along the RREF basis: zero at pivot coordinates.
  Vector reduce(const Vector& v) const;
  /// Coefficients of v (which must lie in the subspace) in the RREF basis.
  Vector coordinates(const Vector& v) const;

  bool operator==(const Subspace& rhs) const;

 private:
  Subspace(FieldSpec field, std::size_t ambient) : field_(field), ambient_(ambient) {}
  void require_compatible(const Subspace& other) const;
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

enum class SubspaceOp { Sum, Intersect, Contains, Complement };
std::variant<Subspace, bool> subspace_algebra(const Subspace& a, const Subspace& b, SubspaceOp op);

/// Complement of `inner` inside `outer` chosen by the non-pivot rule applied
/// to outer's coordinates; returns basis vectors (in ambient coordinates).
std::vector<Vector> relative_complement(const Subspace& outer, const Subspace& inner);

}  // namespace nilbreadth
