#include "nilbreadth/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace nilbreadth {

Vector zero_vector(FieldSpec field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(FieldSpec field, std::size_t n, std::size_t index) {
  Vector v = zero_vector(field, n);
  v.at(index) = Scalar::one(field);
  return v;
}

Vector make_vector(FieldSpec field, const std::vector<long>& entries) {
  Vector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(field, e);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector add");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sub");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x = c * x;
  return out;
}

void axpy(Vector& a, const Scalar& c, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "axpy");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(field, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(Errc::DimensionMismatch, "ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::DimensionMismatch, "matrix product");
  if (!(field_ == rhs.field_)) throw Error(Errc::FieldMismatch, "matrix product");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector product");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!v[k].is_zero() && !(*this)(i, k).is_zero()) out[i] += (*this)(i, k) * v[k];
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

void Matrix::require_uniform_field() const {
  for (const auto& s : data_)
    if (!(s.field() == field_)) throw Error(Errc::FieldMismatch, "matrix entries from mixed fields");
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Subspace RrefResult::kernel() const {
  return Subspace::span(rref.field(), rref.cols(), kernel_basis);
}

RrefResult rref(const Matrix& m) {
  m.require_uniform_field();
  const FieldSpec f = m.field();
  RrefResult out{m, 0, {}, {}};
  Matrix& a = out.rref;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = a(row, c) * inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : out.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector k = zero_vector(f, a.cols());
    k[free] = Scalar::one(f);
    for (std::size_t i = 0; i < out.pivots.size(); ++i) k[out.pivots[i]] = -a(i, free);
    out.kernel_basis.push_back(std::move(k));
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(Errc::DimensionMismatch, "solve");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.rref(i, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::SingularMatrix, "non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  RrefResult rr = rref(aug);
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1))
    throw Error(Errc::SingularMatrix, "matrix is not invertible");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.rref(r, n + c);
  return inv;
}

Subspace Subspace::zero(FieldSpec field, std::size_t ambient) { return Subspace(field, ambient); }

Subspace Subspace::full(FieldSpec field, std::size_t ambient) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vector(field, ambient, i));
  return span(field, ambient, vs);
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(field, ambient);
  if (vectors.empty()) return s;
  Matrix m = Matrix::from_rows(field, ambient, vectors);
  RrefResult rr = rref(m);
  for (std::size_t i = 0; i < rr.rank; ++i) s.basis_.push_back(rr.rref.row(i));
  s.pivots_ = rr.pivots;
  return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(field_, ambient_, basis_); }

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw Error(Errc::DimensionMismatch, "reduce");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_compatible(other);
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(Errc::DimensionMismatch, "vector not in subspace");
  Vector c;
  c.reserve(basis_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

void Subspace::require_compatible(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error(Errc::DimensionMismatch, "ambient dimensions differ");
  if (!(field_ == other.field_)) throw Error(Errc::FieldMismatch, "subspaces over different fields");
}

Subspace Subspace::sum(const Subspace& other) const {
  require_compatible(other);
  std::vector<Vector> vs = basis_;
  vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_compatible(other);
  if (basis_.empty() || other.basis_.empty()) return zero(field_, ambient_);
  // Kernel of [A^T | -B^T]: pairs (a, b) with sum a_i A_i = sum b_j B_j.
  std::size_t da = basis_.size(), db = other.basis_.size();
  Matrix m(field_, ambient_, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, da + j) = -other.basis_[j][r];
  RrefResult rr = rref(m);
  std::vector<Vector> vs;
  for (const auto& k : rr.kernel_basis) {
    Vector v = zero_vector(field_, ambient_);
    for (std::size_t i = 0; i < da; ++i) axpy(v, k[i], basis_[i]);
    vs.push_back(std::move(v));
  }
  return span(field_, ambient_, vs);
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

Subspace Subspace::complement() const {
  std::vector<Vector> vs;
  for (auto i : non_pivots()) vs.push_back(unit_vector(field_, ambient_, i));
  return span(field_, ambient_, vs);
}

bool Subspace::operator==(const Subspace& rhs) const {
  return field_ == rhs.field_ && ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
}

std::variant<Subspace, bool> subspace_algebra(const Subspace& a, const Subspace& b, SubspaceOp op) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::DimensionMismatch, "ambient dimensions differ");
  if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "subspaces over different fields");
  switch (op) {
    case SubspaceOp::Sum: return a.sum(b);
    case SubspaceOp::Intersect: return a.intersect(b);
    case SubspaceOp::Contains: return a.contains(b);
    case SubspaceOp::Complement: return a.complement();
  }
  return false;
}

std::vector<Vector> relative_complement(const Subspace& outer, const Subspace& inner) {
  if (!outer.contains(inner)) throw Error(Errc::DimensionMismatch, "inner subspace not contained in outer");
  std::vector<Vector> coords;
  for (const auto& b : inner.basis()) coords.push_back(outer.coordinates(b));
  Subspace in_outer = Subspace::span(outer.field(), outer.dim(), coords);
  std::vector<Vector> out;
  for (auto i : in_outer.non_pivots()) out.push_back(outer.basis()[i]);
  return out;
}

}  // namespace nilbreadth
