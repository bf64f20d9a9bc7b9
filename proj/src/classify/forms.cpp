#include <sstream>

#include "nilbreadth/classify.hpp"
#include "forms_internal.hpp"

namespace nilbreadth {

namespace detail {

Scalar pair(const Matrix& form, const Vector& u, const Vector& v) {
  Scalar acc = Scalar::zero(form.field());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero() && !form(i, j).is_zero()) acc += u[i] * form(i, j) * v[j];
  }
  return acc;
}

Matrix gram(const std::vector<Vector>& basis, const std::function<Scalar(const Vector&, const Vector&)>& f,
            FieldSpec field) {
  Matrix g(field, basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      g(i, j) = f(basis[i], basis[j]);
      g(j, i) = -g(i, j);
    }
  return g;
}

Vector combine(FieldSpec field, std::size_t n, const std::vector<Vector>& basis, const Vector& coords) {
  Vector out = zero_vector(field, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coords[i].is_zero()) axpy(out, coords[i], basis[i]);
  return out;
}

std::vector<Vector> symplectic_vectors(const Matrix& form, std::vector<Vector> rest, std::size_t& pairs) {
  std::vector<Vector> out;
  pairs = 0;
  while (true) {
    std::size_t pi = 0, pj = 0;
    bool found = false;
    Scalar w = Scalar::zero(form.field());
    for (std::size_t i = 0; i < rest.size() && !found; ++i)
      for (std::size_t j = i + 1; j < rest.size() && !found; ++j) {
        w = pair(form, rest[i], rest[j]);
        if (!w.is_zero()) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    Vector e = rest[pi];
    Vector f = scale(w.inverse(), rest[pj]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pj));
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pi));
    // b -> b - w(b,f) e + w(b,e) f is orthogonal to e and f.
    for (auto& b : rest) {
      Scalar bf = pair(form, b, f), be = pair(form, b, e);
      if (!bf.is_zero()) axpy(b, -bf, e);
      if (!be.is_zero()) axpy(b, be, f);
    }
    out.push_back(std::move(e));
    out.push_back(std::move(f));
    ++pairs;
  }
  for (auto& b : rest) out.push_back(std::move(b));
  return out;
}

Vector coefficients_along(const Vector& w, const std::vector<Vector>& basis) {
  const FieldSpec field = w.front().field();
  auto x = solve(Matrix::from_columns(field, w.size(), basis), w);
  if (!x) throw Error(Errc::BadParameters, "vector outside the expected span");
  return *x;
}

}  // namespace detail

SymplecticResult symplectic_normalize(const Matrix& form) {
  const std::size_t n = form.rows();
  if (form.cols() != n) throw Error(Errc::NotAlternating, "form is not square");
  form.require_uniform_field();
  for (std::size_t i = 0; i < n; ++i) {
    if (!form(i, i).is_zero()) throw Error(Errc::NotAlternating, "nonzero diagonal entry");
    for (std::size_t j = i + 1; j < n; ++j)
      if (form(i, j) != -form(j, i)) throw Error(Errc::NotAlternating, "form is not antisymmetric");
  }
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(form.field(), n, i));
  std::size_t k = 0;
  auto cols = detail::symplectic_vectors(form, basis, k);
  return {BasisChange::from_columns(form.field(), n, cols), k};
}

std::string PencilInvariant::roots_string() const {
  switch (roots) {
    case Roots::Zero: return "0";
    case Roots::One: return "1";
    case Roots::Two: return "2";
    case Roots::Degenerate: return "degenerate";
  }
  return "?";
}

std::string PencilInvariant::to_string() const {
  std::ostringstream os;
  os << "Pf = " << a << "*l^2 + " << b << "*l*m + " << c << "*m^2; roots: " << roots_string();
  return os.str();
}

namespace detail {

ClassTwoSplit class_two_split(const LieAlgebra& algebra) {
  const FieldSpec field = algebra.field();
  ClassTwoSplit s{center(algebra), {}, {}, Matrix(field, 0, 0), Matrix(field, 0, 0)};
  s.v = s.z.complement().basis();
  s.zbasis = s.z.basis();
  auto coord = [&](std::size_t which) {
    return [&, which](const Vector& a, const Vector& b) { return s.z.coordinates(algebra.bracket(a, b))[which]; };
  };
  s.g1 = gram(s.v, coord(0), field);
  s.g2 = gram(s.v, coord(1), field);
  return s;
}

PencilInvariant pencil_from_grams(const Matrix& g1, const Matrix& g2) {
  const FieldSpec f = g1.field();
  // Pf = a01 a23 - a02 a13 + a03 a12 with a = l g1 + m g2.
  auto prod = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    // (l p + m q)(l r + m s) -> (p r, p s + q r, q s)
    const Scalar &p = g1(i, j), &q = g2(i, j), &r = g1(k, l), &t = g2(k, l);
    return std::array<Scalar, 3>{p * r, p * t + q * r, q * t};
  };
  auto t1 = prod(0, 1, 2, 3), t2 = prod(0, 2, 1, 3), t3 = prod(0, 3, 1, 2);
  PencilInvariant pi{t1[0] - t2[0] + t3[0], t1[1] - t2[1] + t3[1], t1[2] - t2[2] + t3[2],
                     PencilInvariant::Roots::Degenerate};
  if (pi.a.is_zero() && pi.b.is_zero() && pi.c.is_zero()) return pi;
  using R = PencilInvariant::Roots;
  if (pi.a.is_zero()) {
    pi.roots = pi.b.is_zero() ? R::One : R::Two;
  } else {
    Scalar disc = pi.b * pi.b - Scalar(f, 4) * pi.a * pi.c;
    pi.roots = disc.is_zero() ? R::One : (is_nonzero_square(disc) ? R::Two : R::Zero);
  }
  return pi;
}

}  // namespace detail

PencilInvariant pencil_invariant(const LieAlgebra& algebra) {
  const StructuralInvariants inv = structural_invariants(algebra);
  const auto& p = inv.profile;
  const bool class_two = p.nilpotent && p.lcs_dims.size() <= 3;
  if (p.dim != 6 || p.dim_center != 2 || p.dim_derived != 2 || !p.is_pure || !class_two)
    throw Error(Errc::WrongStratum, "pencil invariant needs a pure class-2 algebra with dim 6, dim Z = dim [L,L] = 2");
  auto s = detail::class_two_split(algebra);
  return detail::pencil_from_grams(s.g1, s.g2);
}

std::string LAlphaEquivalence::to_string() const {
  std::ostringstream os;
  if (outcome == Outcome::Equivalent)
    os << "Equivalent(gamma=" << *gamma << ")";
  else
    os << "NotBySquareCriterion";
  if (sqrt_neg_alpha) os << "; SqrtReduction(s=" << *sqrt_neg_alpha << ", y=" << nilbreadth::to_string(*breadth_one_element) << ")";
  return os.str();
}

LAlphaEquivalence lalpha_equivalence(const Scalar& alpha, const Scalar& beta) {
  if (!(alpha.field() == beta.field())) throw Error(Errc::FieldMismatch, "alpha and beta in different fields");
  const FieldSpec f = alpha.field();
  LAlphaEquivalence r;
  if (beta.is_zero()) {
    if (alpha.is_zero()) {
      r.outcome = LAlphaEquivalence::Outcome::Equivalent;
      r.gamma = Scalar::one(f);
    }
  } else if (!alpha.is_zero()) {
    if (auto g = sqrt_in_field(alpha / beta)) {
      r.outcome = LAlphaEquivalence::Outcome::Equivalent;
      r.gamma = *g;
    }
  }
  if (auto s = sqrt_in_field(-alpha)) {
    r.sqrt_neg_alpha = *s;
    Vector y = zero_vector(f, 6);
    y[1] = *s;
    y[3] = Scalar::one(f);
    r.breadth_one_element = y;
  }
  return r;
}

}  // namespace nilbreadth
