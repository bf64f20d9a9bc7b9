#include "nilbreadth/lie_algebra.hpp"

#include <sstream>

namespace nilbreadth {

LieAlgebra::LieAlgebra(FieldSpec field, std::size_t dim)
    : field_(field), dim_(dim), constants_(dim * (dim > 0 ? dim - 1 : 0) / 2, zero_vector(field, dim)) {}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // Row-major index of (i, j), i < j, in the strict upper triangle.
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_) throw Error(Errc::DimensionMismatch, "set_bracket");
  for (const auto& s : value)
    if (!(s.field() == field_)) throw Error(Errc::FieldMismatch, "set_bracket");
  if (i == j) {
    if (!is_zero(value)) throw Error(Errc::BadParameters, "[e_i, e_i] must vanish");
    return;
  }
  validated_ = false;
  if (i < j)
    constants_[pair_index(i, j)] = value;
  else
    constants_[pair_index(j, i)] = scale(Scalar(field_, -1L), value);
}

const Vector& LieAlgebra::structure(std::size_t i, std::size_t j) const {
  if (!(i < j && j < dim_)) throw Error(Errc::DimensionMismatch, "structure() needs i < j < dim");
  return constants_[pair_index(i, j)];
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw Error(Errc::DimensionMismatch, "basis_bracket");
  if (i == j) return zero_vector(field_, dim_);
  if (i < j) return constants_[pair_index(i, j)];
  return scale(Scalar(field_, -1L), constants_[pair_index(j, i)]);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(Errc::DimensionMismatch, "bracket");
  Vector out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Scalar coeff = x[i] * y[j] - x[j] * y[i];
      if (!coeff.is_zero()) axpy(out, coeff, constants_[pair_index(i, j)]);
    }
  return out;
}

Matrix LieAlgebra::ad_matrix(const Vector& x) const {
  if (x.size() != dim_) throw Error(Errc::DimensionMismatch, "ad_matrix");
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vector col = zero_vector(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (!x[i].is_zero() && i != j) axpy(col, x[i], basis_bracket(i, j));
    for (std::size_t r = 0; r < dim_; ++r) m(r, j) = col[r];
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& c : constants_)
    if (!is_zero(c)) return false;
  return true;
}

bool LieAlgebra::operator==(const LieAlgebra& rhs) const {
  return field_ == rhs.field_ && dim_ == rhs.dim_ && constants_ == rhs.constants_;
}

std::string LieAlgebra::describe() const {
  std::ostringstream os;
  os << "dim " << dim_ << " over " << field_.to_string();
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!is_zero(structure(i, j))) os << "; [e" << i + 1 << ",e" << j + 1 << "]=" << nilbreadth::to_string(structure(i, j));
  return os.str();
}

JacobiViolation::JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_, Vector residual_)
    : Error(Errc::JacobiViolation, "Jacobi identity fails on (e" + std::to_string(i_ + 1) + ",e" +
                                       std::to_string(j_ + 1) + ",e" + std::to_string(k_ + 1) +
                                       "), residual " + nilbreadth::to_string(residual_)),
      i(i_), j(j_), k(k_), residual(std::move(residual_)) {}

LieAlgebra validate_algebra(LieAlgebra algebra) {
  const std::size_t n = algebra.dim();
  const FieldSpec f = algebra.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = algebra.bracket(unit_vector(f, n, i), algebra.basis_bracket(j, k));
        r = add(r, algebra.bracket(unit_vector(f, n, j), algebra.basis_bracket(k, i)));
        r = add(r, algebra.bracket(unit_vector(f, n, k), algebra.basis_bracket(i, j)));
        if (!is_zero(r)) throw JacobiViolation(i, j, k, r);
      }
  algebra.validated_ = true;
  return algebra;
}

BasisChange::BasisChange(Matrix forward) : forward_(forward), inverse_(nilbreadth::inverse(forward)) {}

BasisChange BasisChange::identity(FieldSpec field, std::size_t n) {
  return BasisChange(Matrix::identity(field, n), Matrix::identity(field, n));
}

BasisChange BasisChange::from_columns(FieldSpec field, std::size_t n, const std::vector<Vector>& columns) {
  if (columns.size() != n) throw Error(Errc::SingularMatrix, "need exactly n basis vectors");
  return BasisChange(Matrix::from_columns(field, n, columns));
}

BasisChange BasisChange::compose(const BasisChange& rhs) const {
  return BasisChange(forward_ * rhs.forward_, rhs.inverse_ * inverse_);
}

BasisChange BasisChange::direct_sum(const BasisChange& rhs) const {
  std::size_t a = dim(), b = rhs.dim(), n = a + b;
  Matrix f(forward_.field(), n, n), inv(forward_.field(), n, n);
  for (std::size_t r = 0; r < a; ++r)
    for (std::size_t c = 0; c < a; ++c) {
      f(r, c) = forward_(r, c);
      inv(r, c) = inverse_(r, c);
    }
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < b; ++c) {
      f(a + r, a + c) = rhs.forward_(r, c);
      inv(a + r, a + c) = rhs.inverse_(r, c);
    }
  return BasisChange(std::move(f), std::move(inv));
}

LieAlgebra change_basis(const LieAlgebra& algebra, const BasisChange& p) {
  const std::size_t n = algebra.dim();
  if (p.dim() != n) throw Error(Errc::DimensionMismatch, "basis change size");
  if (!(p.forward().field() == algebra.field())) throw Error(Errc::FieldMismatch, "basis change field");
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(p.forward().column(i));
  LieAlgebra out(algebra.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector b = algebra.bracket(cols[i], cols[j]);
      if (!is_zero(b)) out.set_bracket(i, j, p.inverse() * b);
    }
  if (algebra.validated()) out = validate_algebra(std::move(out));
  return out;
}

std::size_t InvariantProfile::nilpotency_class() const {
  if (!nilpotent || lcs_dims.empty()) return 0;
  return lcs_dims.size() - 1;
}

std::string InvariantProfile::to_string() const {
  std::ostringstream os;
  os << "dim=" << dim << " dim_derived=" << dim_derived << " dim_center=" << dim_center << " lcs=(";
  for (std::size_t i = 0; i < lcs_dims.size(); ++i) os << (i ? "," : "") << lcs_dims[i];
  os << ") nilpotent=" << (nilpotent ? "yes" : "no") << " pure=" << (is_pure ? "yes" : "no");
  return os.str();
}

namespace {

Matrix stack_ads(const LieAlgebra& algebra, const std::vector<Vector>& elements) {
  const std::size_t n = algebra.dim();
  Matrix m(algebra.field(), elements.size() * n, n);
  for (std::size_t b = 0; b < elements.size(); ++b) {
    Matrix ad = algebra.ad_matrix(elements[b]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(b * n + r, c) = ad(r, c);
  }
  return m;
}

std::vector<Vector> standard_basis(FieldSpec f, std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(f, n, i));
  return out;
}

}  // namespace

Subspace centralizer(const LieAlgebra& algebra, const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(algebra.field(), algebra.dim());
  return rref(stack_ads(algebra, s.basis())).kernel();
}

Subspace center(const LieAlgebra& algebra) {
  return centralizer(algebra, Subspace::full(algebra.field(), algebra.dim()));
}

Subspace bracket_subspaces(const LieAlgebra& algebra, const Subspace& a, const Subspace& b) {
  std::vector<Vector> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      Vector v = algebra.bracket(x, y);
      if (!is_zero(v)) vs.push_back(std::move(v));
    }
  return Subspace::span(algebra.field(), algebra.dim(), vs);
}

Subspace derived_algebra(const LieAlgebra& algebra) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < algebra.dim(); ++j)
      if (!is_zero(algebra.structure(i, j))) vs.push_back(algebra.structure(i, j));
  return Subspace::span(algebra.field(), algebra.dim(), vs);
}

bool is_ideal(const LieAlgebra& algebra, const Subspace& s) {
  for (std::size_t j = 0; j < algebra.dim(); ++j)
    for (const auto& b : s.basis())
      if (!s.contains(algebra.bracket(unit_vector(algebra.field(), algebra.dim(), j), b))) return false;
  return true;
}

bool is_abelian_subspace(const LieAlgebra& algebra, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!is_zero(algebra.bracket(s.basis()[i], s.basis()[j]))) return false;
  return true;
}

StructuralInvariants structural_invariants(const LieAlgebra& algebra) {
  const FieldSpec f = algebra.field();
  const std::size_t n = algebra.dim();
  Subspace full = Subspace::full(f, n);
  StructuralInvariants out{{}, center(algebra), derived_algebra(algebra), {full}};
  out.profile.dim = n;
  out.profile.dim_derived = out.derived.dim();
  out.profile.dim_center = out.center.dim();
  out.profile.lcs_dims.push_back(n);
  while (out.lcs.back().dim() > 0) {
    Subspace next = bracket_subspaces(algebra, full, out.lcs.back());
    if (next.dim() == out.lcs.back().dim()) break;
    out.profile.lcs_dims.push_back(next.dim());
    out.lcs.push_back(std::move(next));
  }
  out.profile.nilpotent = out.lcs.back().dim() == 0;
  out.profile.is_pure = out.derived.contains(out.center);
  return out;
}

InvariantProfile invariant_profile(const LieAlgebra& algebra) { return structural_invariants(algebra).profile; }

void require_nilpotent(const LieAlgebra& algebra) {
  if (!invariant_profile(algebra).nilpotent) throw Error(Errc::NotNilpotent, algebra.describe());
}

LieAlgebra abelian_algebra(FieldSpec field, std::size_t dim) {
  return validate_algebra(LieAlgebra(field, dim));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "direct_sum");
  const FieldSpec f = a.field();
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  LieAlgebra out(f, n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j) {
      Vector v = zero_vector(f, n);
      for (std::size_t k = 0; k < na; ++k) v[k] = a.structure(i, j)[k];
      out.set_bracket(i, j, v);
    }
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      Vector v = zero_vector(f, n);
      for (std::size_t k = 0; k < nb; ++k) v[na + k] = b.structure(i, j)[k];
      out.set_bracket(na + i, na + j, v);
    }
  if (a.validated() && b.validated()) out = validate_algebra(std::move(out));
  return out;
}

Quotient quotient(const LieAlgebra& algebra, const Subspace& ideal) {
  if (!is_ideal(algebra, ideal)) throw Error(Errc::NotAnIdeal, "quotient by a non-ideal");
  const FieldSpec f = algebra.field();
  const std::size_t n = algebra.dim();
  std::vector<std::size_t> keep = ideal.non_pivots();
  const std::size_t m = keep.size();
  Matrix projection(f, m, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector r = ideal.reduce(unit_vector(f, n, j));
    for (std::size_t a = 0; a < m; ++a) projection(a, j) = r[keep[a]];
  }
  LieAlgebra q(f, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vector v = projection * algebra.basis_bracket(keep[a], keep[b]);
      if (!is_zero(v)) q.set_bracket(a, b, v);
    }
  if (algebra.validated()) q = validate_algebra(std::move(q));
  return {std::move(q), std::move(projection)};
}

Subspace maximal_abelian_ideal(const LieAlgebra& algebra) {
  require_nilpotent(algebra);
  const FieldSpec f = algebra.field();
  const std::size_t n = algebra.dim();
  std::vector<Vector> basis = standard_basis(f, n);
  Subspace a = center(algebra);
  while (true) {
    Subspace c = centralizer(algebra, a);
    if (c == a) return a;
    // Preimage of Z(L/A): x with [e_j, x] in A for every j.
    std::vector<std::size_t> keep = a.non_pivots();
    Matrix proj(f, keep.size(), n);
    for (std::size_t j = 0; j < n; ++j) {
      Vector r = a.reduce(basis[j]);
      for (std::size_t q = 0; q < keep.size(); ++q) proj(q, j) = r[keep[q]];
    }
    std::vector<Vector> rows;
    for (std::size_t j = 0; j < n; ++j) {
      Matrix block = proj * algebra.ad_matrix(basis[j]);
      for (std::size_t r = 0; r < block.rows(); ++r) rows.push_back(block.row(r));
    }
    Subspace pre = rows.empty() ? Subspace::full(f, n) : rref(Matrix::from_rows(f, n, rows)).kernel();
    Subspace candidates = pre.intersect(c);
    const Vector* pick = nullptr;
    for (const auto& v : candidates.basis())
      if (!a.contains(v)) {
        pick = &v;
        break;
      }
    if (pick == nullptr) throw Error(Errc::NotNilpotent, "centralizer quotient has trivial center");
    a = a.sum(Subspace::span(f, n, {*pick}));
  }
}

PurifyResult purify(const LieAlgebra& algebra) {
  const FieldSpec f = algebra.field();
  const std::size_t n = algebra.dim();
  StructuralInvariants inv = structural_invariants(algebra);
  Subspace z_in_derived = inv.center.intersect(inv.derived);
  std::vector<Vector> w = relative_complement(inv.center, z_in_derived);
  Subspace derived_plus_w = inv.derived.sum(Subspace::span(f, n, w));
  Subspace pure_part = inv.derived.sum(derived_plus_w.complement());

  std::vector<Vector> columns = pure_part.basis();
  columns.insert(columns.end(), w.begin(), w.end());
  BasisChange witness = BasisChange::from_columns(f, n, columns);
  LieAlgebra moved = change_basis(algebra, witness);

  const std::size_t k = pure_part.dim();
  LieAlgebra pure(f, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Vector& v = moved.structure(i, j);
      pure.set_bracket(i, j, Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k)));
    }
  if (algebra.validated()) pure = validate_algebra(std::move(pure));
  return {std::move(pure), w.size(), std::move(witness)};
}

}  // namespace nilbreadth
