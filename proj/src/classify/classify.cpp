#include "nilbreadth/classify.hpp"

#include "forms_internal.hpp"
#include "nilbreadth/breadth.hpp"

namespace nilbreadth {

using detail::combine;
using detail::gram;
using detail::pair;

namespace {

struct PureResult {
  CanonicalLabel label;
  std::vector<Vector> columns;  // empty for Unclassified
  std::vector<std::string> notes;
  std::optional<PencilInvariant> pencil;
};

[[noreturn]] void internal(const std::string& what) {
  throw Error(Errc::WrongStratum, "input violates the stratum's structure: " + what);
}

// t with w = t u (w in span{u}, u != 0).
Scalar ratio(const Vector& w, const Vector& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero()) return w[i] / u[i];
  internal("zero reference vector");
}

std::vector<Vector> units(FieldSpec f, std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(f, n, i));
  return out;
}

Vector row_times(const Vector& c, const Matrix& g) {
  Vector out = zero_vector(g.field(), g.cols());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) axpy(out, c[i], g.row(i));
  return out;
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar acc = Scalar::zero(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

Matrix lin(const Matrix& g1, const Scalar& s1, const Matrix& g2, const Scalar& s2) {
  Matrix out(g1.field(), g1.rows(), g1.cols());
  for (std::size_t i = 0; i < g1.rows(); ++i)
    for (std::size_t j = 0; j < g1.cols(); ++j) out(i, j) = s1 * g1(i, j) + s2 * g2(i, j);
  return out;
}

Vector solve_or_fail(const Matrix& m, const Vector& b, const char* what) {
  auto x = solve(m, b);
  if (!x) internal(what);
  return *x;
}

ClassificationReport report_for(const LieAlgebra& algebra, CanonicalLabel label, BasisChange witness) {
  return ClassificationReport{std::move(label), std::move(witness), invariant_profile(algebra), {}, std::nullopt};
}

// ---------------------------------------------------------------- breadth 1

ClassificationReport breadth1_impl(const LieAlgebra& algebra) {
  const FieldSpec f = algebra.field();
  const std::size_t n = algebra.dim();
  const Subspace d = derived_algebra(algebra);
  if (d.dim() != 1) throw Error(Errc::WrongStratum, "breadth-1 classification needs dim [L,L] = 1");
  const Vector z1 = d.basis()[0];
  const auto v = d.complement().basis();
  Matrix phi = gram(v, [&](const Vector& a, const Vector& b) { return d.coordinates(algebra.bracket(a, b))[0]; }, f);
  std::size_t k = 0;
  auto normal = detail::symplectic_vectors(phi, units(f, v.size()), k);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < 2 * k; ++i) cols.push_back(combine(f, n, v, normal[i]));
  cols.push_back(z1);
  for (std::size_t i = 2 * k; i < normal.size(); ++i) cols.push_back(combine(f, n, v, normal[i]));
  return report_for(algebra, CanonicalLabel::breadth1(k, n - 2 * k - 1), BasisChange::from_columns(f, n, cols));
}

// ---------------------------------------------------------------- pure strata

PureResult n4(const LieAlgebra& l) {
  const Subspace z = center(l);
  const auto c = z.complement().basis();
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      Vector w = l.bracket(c[a], c[b]);
      if (z.contains(w)) continue;
      Vector xw = l.bracket(c[a], w), yw = l.bracket(c[b], w);
      Vector x1 = c[a], x2 = c[b];
      if (is_zero(xw)) {
        std::swap(x1, x2);
      } else if (!is_zero(yw)) {
        axpy(x2, -ratio(yw, xw), x1);
      }
      Vector x3 = l.bracket(x1, x2);
      Vector zz = l.bracket(x1, x3);
      return {CanonicalLabel::simple(CanonicalLabel::Kind::N4), {x1, x2, x3, zz}, {}, std::nullopt};
    }
  internal("no bracket outside the center");
}

PureResult m5(const LieAlgebra& l) {
  const auto c = derived_algebra(l).complement().basis();
  Vector x3 = l.bracket(c[0], c[1]);
  return {CanonicalLabel::simple(CanonicalLabel::Kind::M5),
          {c[0], c[1], x3, l.bracket(c[0], x3), l.bracket(c[1], x3)},
          {},
          std::nullopt};
}

PureResult m6(const LieAlgebra& l) {
  const auto c = derived_algebra(l).complement().basis();
  return {CanonicalLabel::simple(CanonicalLabel::Kind::M6),
          {c[0], c[1], c[2], l.bracket(c[0], c[1]), l.bracket(c[0], c[2]), l.bracket(c[1], c[2])},
          {},
          std::nullopt};
}

PureResult qfamily(const LieAlgebra& l) {
  const FieldSpec f = l.field();
  const std::size_t dim = l.dim(), n = dim - 4;
  const Subspace z = center(l), l2 = derived_algebra(l);
  const Vector v = relative_complement(l2, z)[0];
  const Subspace c = centralizer(l, l2);
  const Vector x = c.complement().basis()[0];
  const Vector u = l.bracket(x, v);
  if (is_zero(u)) internal("[x, v] vanishes");

  // y in C with [x, y] = v + t u, then y -= t v.
  std::vector<Vector> cols;
  for (const auto& b : c.basis()) cols.push_back(l.bracket(x, b));
  cols.push_back(scale(-Scalar::one(f), u));
  Vector sol = solve_or_fail(Matrix::from_columns(f, dim, cols), v, "no y with [x,y] = v mod Z");
  Vector y = combine(f, dim, c.basis(), sol);
  axpy(y, -sol.back(), v);

  auto w = relative_complement(c, Subspace::span(f, dim, {y, v, u}));
  for (auto& wi : w) {
    Vector co = detail::coefficients_along(l.bracket(x, wi), {v, u});
    axpy(wi, -co[0], y);
    axpy(wi, -co[1], v);
  }
  auto phi = [&](const Vector& a, const Vector& b) { return ratio(l.bracket(a, b), u); };

  Vector x2;
  std::vector<Vector> zs;
  if (n % 2 == 0) {
    std::vector<Vector> nb{y};
    nb.insert(nb.end(), w.begin(), w.end());
    auto ker = rref(gram(nb, phi, f)).kernel_basis;
    if (ker.size() != 1 || ker[0][0].is_zero()) internal("radical of the form on span{y, w}");
    x2 = combine(f, dim, nb, scale(ker[0][0].inverse(), ker[0]));
    std::size_t k = 0;
    auto normal = detail::symplectic_vectors(gram(w, phi, f), units(f, n), k);
    if (2 * k != n) internal("form on W is degenerate");
    for (const auto& nv : normal) zs.push_back(combine(f, dim, w, nv));
  } else {
    auto ker = rref(gram(w, phi, f)).kernel_basis;
    if (ker.size() != 1) internal("radical of the form on W");
    Vector z1 = combine(f, dim, w, ker[0]);
    const Scalar yz = phi(y, z1);
    if (yz.is_zero()) internal("y pairs trivially with the radical of W");
    z1 = scale(yz.inverse(), z1);
    auto wp = relative_complement(Subspace::span(f, dim, w), Subspace::span(f, dim, {z1}));
    std::size_t k = 0;
    auto normal = detail::symplectic_vectors(gram(wp, phi, f), units(f, wp.size()), k);
    if (2 * k != wp.size()) internal("form on W' is degenerate");
    zs.push_back(z1);
    x2 = y;
    for (std::size_t i = 0; i < k; ++i) {
      Vector e = combine(f, dim, wp, normal[2 * i]), g = combine(f, dim, wp, normal[2 * i + 1]);
      // y + phi(y,e) g - phi(y,g) e is orthogonal to e and g.
      axpy(x2, phi(y, e), g);
      axpy(x2, -phi(y, g), e);
      zs.push_back(e);
      zs.push_back(g);
    }
  }
  Vector x3 = l.bracket(x, x2);
  std::vector<Vector> out{x, x2, x3, l.bracket(x, x3)};
  out.insert(out.end(), zs.begin(), zs.end());
  return {CanonicalLabel::qfamily(n), out, {}, std::nullopt};
}

PureResult p5(const LieAlgebra& l) {
  auto x = find_element_of_breadth(l, 2);
  if (!x) internal("no element of breadth 2");
  auto ys = rref(l.ad_matrix(*x)).kernel().complement().basis();
  Vector z1 = l.bracket(*x, ys[0]), z2 = l.bracket(*x, ys[1]);
  Vector a = detail::coefficients_along(l.bracket(ys[0], ys[1]), {z1, z2});
  Vector x2 = ys[0], x3 = ys[1];
  axpy(x2, -a[1], *x);
  axpy(x3, a[0], *x);
  return {CanonicalLabel::simple(CanonicalLabel::Kind::P5), {*x, x2, x3, z1, z2}, {}, std::nullopt};
}

// Breadth of the V-coordinate vector c: rank of (c^T G1, c^T G2).
std::size_t v_breadth(const Vector& c, const Matrix& g1, const Matrix& g2) {
  return rank(Matrix::from_rows(g1.field(), g1.cols(), {row_times(c, g1), row_times(c, g2)}));
}

std::optional<Vector> breadth_one_in_v(const detail::ClassTwoSplit& s, const PencilInvariant& pencil,
                                       std::vector<std::string>& notes) {
  const FieldSpec f = s.g1.field();
  std::optional<Vector> found;
  auto visit = [&](const Vector& c) {
    if (is_zero(c)) return false;
    if (v_breadth(c, s.g1, s.g2) == 1) found = c;
    return found.has_value();
  };
  if (f.is_prime()) {
    for_each_field_element(f, 4, visit);
    return found;
  }
  for_each_trial_point(f, 4, visit);
  if (found) return found;
  // Breadth-1 elements are the radicals of the degenerate members of the
  // pencil; a rational root of Pf(l, m) gives one.
  std::optional<std::pair<Scalar, Scalar>> root;
  if (pencil.a.is_zero()) {
    root.emplace(Scalar::one(f), Scalar::zero(f));
  } else if (auto sq = sqrt_in_field(pencil.b * pencil.b - Scalar(f, 4) * pencil.a * pencil.c)) {
    root.emplace((-pencil.b + *sq) / (Scalar(f, 2) * pencil.a), Scalar::one(f));
  }
  if (!root) return std::nullopt;
  notes.push_back("breadth-1 element taken from a rational root of the Pfaffian");
  auto ker = rref(lin(s.g1, root->first, s.g2, root->second)).kernel_basis;
  if (ker.empty()) internal("degenerate pencil member has no radical");
  return ker[0];
}

PureResult six_dim(const LieAlgebra& l) {
  const FieldSpec f = l.field();
  const std::size_t dim = 6;
  const auto s = detail::class_two_split(l);
  const PencilInvariant pencil = detail::pencil_from_grams(s.g1, s.g2);
  PureResult out;
  out.pencil = pencil;
  out.notes.push_back("pencil: " + pencil.to_string());
  auto tol = [&](const Vector& c) { return combine(f, dim, s.v, c); };
  auto zvec = [&](const Scalar& a, const Scalar& b) {
    Vector zz = zero_vector(f, dim);
    axpy(zz, a, s.zbasis[0]);
    axpy(zz, b, s.zbasis[1]);
    return zz;
  };

  auto x1 = breadth_one_in_v(s, pencil, out.notes);
  if (!x1) {
    // Every element outside Z has breadth 2: S = G1^-1 G2 satisfies S^2 = -a I
    // after removing its trace.
    Matrix sm = inverse(s.g1) * s.g2;
    Scalar tr = sm(0, 0) + sm(1, 1) + sm(2, 2) + sm(3, 3);
    Scalar t = tr / Scalar(f, 4);
    for (std::size_t i = 0; i < 4; ++i) sm(i, i) -= t;
    Matrix sq = sm * sm;
    Scalar a = -sq(0, 0);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (sq(i, j) != (i == j ? -a : Scalar::zero(f))) internal("pencil operator is not a scalar square root");
    if (a.is_zero()) internal("anisotropic pencil with zero parameter");
    const Matrix g1 = s.g1;
    Vector c1 = unit_vector(f, 4, 0);
    Vector c3 = scale(a.inverse(), sm * c1);
    Vector c2 = solve_or_fail(Matrix::from_rows(f, 4, {row_times(c1, g1), row_times(c3, g1)}),
                              make_vector(f, {1, 0}), "dual vector for x2");
    Vector c4 = scale(-Scalar::one(f), sm * c2);
    const Scalar rep = square_class_representative(a);
    const Scalar gamma = *sqrt_in_field(rep / a);
    c3 = scale(gamma.inverse(), c3);
    c4 = scale(gamma, c4);
    // z1 = u1 + t u2, z2 = u2 / gamma
    out.columns = {tol(c1), tol(c2), tol(c3), tol(c4), zvec(Scalar::one(f), t), zvec(Scalar::zero(f), gamma.inverse())};
    out.label = CanonicalLabel::lalpha(rep);
    out.notes.push_back("no element of breadth 1; -alpha is not a square");
    return out;
  }

  const Vector r1 = row_times(*x1, s.g1), r2 = row_times(*x1, s.g2);
  // Image of ad_x1 in center coordinates.
  Scalar c1 = Scalar::zero(f), c2 = Scalar::zero(f);
  for (std::size_t j = 0; j < 4; ++j)
    if (!r1[j].is_zero() || !r2[j].is_zero()) {
      c1 = r1[j];
      c2 = r2[j];
      break;
    }
  const Matrix psi0 = lin(s.g1, -c2, s.g2, c1);
  const auto rad = rref(psi0).kernel();
  if (rad.dim() != 2) internal("radical of psi0 is not 2-dimensional");
  const Vector r = relative_complement(rad, Subspace::span(f, 4, {*x1}))[0];
  const Scalar b1 = dot(r1, r), b2 = dot(r2, r);
  if (!b1.is_zero() || !b2.is_zero()) {
    const Vector a1 = tol(*x1), a2 = tol(r);
    const Subspace ca = centralizer(l, Subspace::span(f, dim, {a1, a2}));
    auto ys = relative_complement(ca, s.z);
    if (ys.size() != 2) internal("centralizer of the split pair");
    out.columns = {a1, a2, ys[0], ys[1], l.bracket(a1, a2), l.bracket(ys[0], ys[1])};
    out.label = CanonicalLabel::simple(CanonicalLabel::Kind::HH);
    out.notes.push_back("decomposes as a sum of two Heisenberg algebras");
    return out;
  }

  // L_0: x1, x4 span the radical of psi0; x2, x3 are dual to them under psi1.
  Scalar e1 = c1.is_zero() ? Scalar::zero(f) : c1.inverse();
  Scalar e2 = c1.is_zero() ? c2.inverse() : Scalar::zero(f);
  const Matrix psi1 = lin(s.g1, e1, s.g2, e2);
  Vector v1 = *x1, v4 = r;
  Matrix dual = Matrix::from_rows(f, 4, {row_times(v1, psi1), row_times(v4, psi1)});
  Vector v2 = solve_or_fail(dual, make_vector(f, {1, 0}), "dual vector for x2");
  Vector v3 = solve_or_fail(dual, make_vector(f, {0, -1}), "dual vector for x3");
  axpy(v2, pair(psi1, v2, v3), v4);
  const Scalar d = pair(psi0, v2, v3);
  if (d.is_zero()) internal("psi0 vanishes on the dual pair");
  v3 = scale(d.inverse(), v3);
  v4 = scale(d, v4);
  Vector zc = solve_or_fail(Matrix::from_rows(f, 2, {Vector{e1, e2}, Vector{-c2, c1}}), make_vector(f, {0, 1}),
                            "dual center basis");
  out.columns = {tol(v1), tol(v2), tol(v3), tol(v4), zvec(c1, c2), zvec(zc[0], zc[1])};
  out.label = CanonicalLabel::lalpha(Scalar::zero(f));
  return out;
}

PureResult classify_pure(const LieAlgebra& l) {
  const InvariantProfile p = invariant_profile(l);
  if (p.dim_derived == 3) {
    if (p.dim == 5 && p.dim_center == 2) return m5(l);
    if (p.dim == 6 && p.dim_center == 3) return m6(l);
  } else if (p.dim_derived == 2 && p.dim_center == 1) {
    return p.dim == 4 ? n4(l) : qfamily(l);
  } else if (p.dim_derived == 2 && p.dim_center == 2) {
    if (p.dim == 5) return p5(l);
    if (p.dim == 6) return six_dim(l);
    return {CanonicalLabel::unclassified("dim>=7 stratum"), {}, {}, std::nullopt};
  }
  return {CanonicalLabel::unclassified("profile outside the breadth-2 strata"), {}, {}, std::nullopt};
}

ClassificationReport breadth2_impl(const LieAlgebra& algebra) {
  const FieldSpec f = algebra.field();
  PurifyResult pr = purify(algebra);
  PureResult r = classify_pure(pr.pure);
  if (r.label.kind == CanonicalLabel::Kind::Unclassified) {
    auto rep = report_for(algebra, r.label, BasisChange::identity(f, algebra.dim()));
    rep.notes = r.notes;
    return rep;
  }
  r.label.m = pr.abelian_dim;
  BasisChange pure_w = BasisChange::from_columns(f, pr.pure.dim(), r.columns);
  BasisChange w = pr.witness.compose(pure_w.direct_sum(BasisChange::identity(f, pr.abelian_dim)));
  auto rep = report_for(algebra, r.label, std::move(w));
  rep.notes = std::move(r.notes);
  rep.pencil = r.pencil;
  if (r.label.kind == CanonicalLabel::Kind::LAlpha && r.label.alpha) {
    const Scalar na = -*r.label.alpha;
    rep.notes.push_back(std::string("-alpha is ") +
                        (na.is_zero() ? "zero" : (is_nonzero_square(na) ? "a nonzero square" : "a nonsquare")));
  }
  return rep;
}

}  // namespace

ClassificationReport classify_breadth1(const LieAlgebra& algebra) {
  require_nilpotent(algebra);
  return breadth1_impl(algebra);
}

ClassificationReport classify_breadth2(const LieAlgebra& algebra) {
  require_nilpotent(algebra);
  const std::size_t b = algebra_breadth(algebra).value;
  if (b != 2) throw Error(Errc::WrongStratum, "breadth-2 classification on an algebra of breadth " + std::to_string(b));
  return breadth2_impl(algebra);
}

ClassificationReport classify(const LieAlgebra& algebra) {
  require_nilpotent(algebra);
  const FieldSpec f = algebra.field();
  const InvariantProfile p = invariant_profile(algebra);
  if (p.dim_derived == 0)
    return report_for(algebra, CanonicalLabel::abelian(p.dim), BasisChange::identity(f, p.dim));
  if (p.dim_derived == 1) return breadth1_impl(algebra);
  const std::size_t b = algebra_breadth(algebra).value;
  if (b == 2) return breadth2_impl(algebra);
  auto rep = report_for(algebra, CanonicalLabel::unclassified("breadth>=3"), BasisChange::identity(f, p.dim));
  rep.notes.push_back("breadth " + std::to_string(b));
  return rep;
}

bool verify_witness(const LieAlgebra& algebra, const ClassificationReport& report) {
  if (report.label.kind == CanonicalLabel::Kind::Unclassified) return false;
  try {
    LieAlgebra target = catalog_make(report.label, algebra.field());
    if (target.dim() != algebra.dim() || report.witness.dim() != algebra.dim()) return false;
    return change_basis(algebra, report.witness) == target;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace nilbreadth
