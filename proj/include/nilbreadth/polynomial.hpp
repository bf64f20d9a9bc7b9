#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilbreadth/matrix.hpp"

namespace nilbreadth {

using Monomial = std::vector<std::uint16_t>;  // exponent per indeterminate

// Sparse multivariate polynomial in t_1..t_n. Terms are ordered by the
// lexicographic monomial order; division uses the same order.
class Polynomial {
 public:
  Polynomial(FieldSpec field, std::size_t nvars) : field_(field), nvars_(nvars) {}
  static Polynomial constant(const Scalar& c, std::size_t nvars);
  /// Homogeneous linear form sum coeffs[i] * t_i.
  static Polynomial linear(const Vector& coeffs);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
  std::size_t total_degree() const;
  std::size_t degree_in(std::size_t var) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  bool operator==(const Polynomial& rhs) const { return field_ == rhs.field_ && terms_ == rhs.terms_; }

  /// Quotient of an exact division; throws DivisionByZero when rhs does not
  /// divide *this.
  Polynomial divide_exact(const Polynomial& rhs) const;

  Scalar evaluate(const Vector& point) const;
  /// Substitutes t_var := value, keeping the variable count.
  Polynomial substitute(std::size_t var, const Scalar& value) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  FieldSpec field_;
  std::size_t nvars_;
  std::map<Monomial, Scalar> terms_;
};

// Matrix of homogeneous linear forms in t_1..t_n: entry (r, c) is
// sum_k coeff(r, c, k) t_k. Models ad_x for the generic element x = sum t_k e_k.
class LinPolyMatrix {
 public:
  LinPolyMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::size_t nvars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const FieldSpec& field() const noexcept { return field_; }

  Scalar& coeff(std::size_t r, std::size_t c, std::size_t var) { return data_[(r * cols_ + c) * nvars_ + var]; }
  const Scalar& coeff(std::size_t r, std::size_t c, std::size_t var) const {
    return data_[(r * cols_ + c) * nvars_ + var];
  }

  Polynomial entry(std::size_t r, std::size_t c) const;
  Matrix evaluate(const Vector& point) const;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_, nvars_;
  std::vector<Scalar> data_;
};

struct GenericRankResult {
  std::size_t rank = 0;
  /// Last nonzero Bareiss pivot: a nonzero rank x rank minor (1 when rank = 0).
  Polynomial minor;
};

/// Rank over the rational function field F(t_1..t_n), by fraction-free
/// elimination in F[t_1..t_n].
GenericRankResult generic_rank_with_minor(const LinPolyMatrix& m);
std::size_t generic_rank(const LinPolyMatrix& m);

/// A point with small nonnegative integer coordinates where p does not
/// vanish (p must be nonzero). Coordinates are fixed one variable at a time.
Vector nonvanishing_point(const Polynomial& p);

}  // namespace nilbreadth
