#include "nilbreadth/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace nilbreadth {

Polynomial Polynomial::constant(const Scalar& c, std::size_t nvars) {
  Polynomial p(c.field(), nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::linear(const Vector& coeffs) {
  if (coeffs.empty()) throw Error(Errc::BadParameters, "linear form needs at least one variable");
  Polynomial p(coeffs.front().field(), coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t Polynomial::total_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max<std::size_t>(d, std::accumulate(m.begin(), m.end(), std::size_t{0}));
  return d;
}

std::size_t Polynomial::degree_in(std::size_t var) const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max<std::size_t>(d, m[var]);
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  if (!(field_ == rhs.field_)) throw Error(Errc::FieldMismatch, "polynomial add");
  Polynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  if (!(field_ == rhs.field_)) throw Error(Errc::FieldMismatch, "polynomial sub");
  Polynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (!(field_ == rhs.field_)) throw Error(Errc::FieldMismatch, "polynomial mul");
  Polynomial out(field_, nvars_);
  Monomial prod(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) prod[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      out.add_term(prod, ca * cb);
    }
  return out;
}

Polynomial Polynomial::divide_exact(const Polynomial& rhs) const {
  if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  Polynomial quotient(field_, nvars_);
  Polynomial rem = *this;
  // Leading term = lexicographically largest monomial = last map entry.
  const auto& [lead_m, lead_c] = *rhs.terms_.rbegin();
  Scalar lead_inv = lead_c.inverse();
  Monomial q_m(nvars_);
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.rbegin();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (rm[i] < lead_m[i]) throw Error(Errc::DivisionByZero, "inexact polynomial division");
      q_m[i] = static_cast<std::uint16_t>(rm[i] - lead_m[i]);
    }
    Polynomial t(field_, nvars_);
    t.add_term(q_m, rc * lead_inv);
    quotient.add_term(q_m, rc * lead_inv);
    rem = rem - t * rhs;
  }
  return quotient;
}

Scalar Polynomial::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw Error(Errc::DimensionMismatch, "evaluation point");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint16_t e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(std::size_t var, const Scalar& value) const {
  Polynomial out(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::uint16_t e = 0; e < m[var]; ++e) t *= value;
    Monomial mm = m;
    mm[var] = 0;
    out.add_term(mm, t);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    os << (first ? "" : " + ") << it->second;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      os << "*t" << (i + 1);
      if (it->first[i] > 1) os << '^' << it->first[i];
    }
    first = false;
  }
  return os.str();
}

LinPolyMatrix::LinPolyMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::size_t nvars)
    : field_(field), rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols * nvars, Scalar::zero(field)) {}

Polynomial LinPolyMatrix::entry(std::size_t r, std::size_t c) const {
  Polynomial p(field_, nvars_);
  if (nvars_ == 0) return p;
  Vector coeffs(data_.begin() + static_cast<std::ptrdiff_t>((r * cols_ + c) * nvars_),
                data_.begin() + static_cast<std::ptrdiff_t>((r * cols_ + c + 1) * nvars_));
  return Polynomial::linear(coeffs);
}

Matrix LinPolyMatrix::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw Error(Errc::DimensionMismatch, "evaluation point");
  Matrix m(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t k = 0; k < nvars_; ++k)
        if (!coeff(r, c, k).is_zero() && !point[k].is_zero()) m(r, c) += coeff(r, c, k) * point[k];
  return m;
}

GenericRankResult generic_rank_with_minor(const LinPolyMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols(), nv = m.nvars();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t k = 0; k < nv; ++k)
        if (!(m.coeff(r, c, k).field() == m.field())) throw Error(Errc::FieldMismatch, "mixed fields in LinPolyMatrix");

  std::vector<std::vector<Polynomial>> a(rows, std::vector<Polynomial>(cols, Polynomial(m.field(), nv)));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.entry(r, c);

  Polynomial prev = Polynomial::constant(Scalar::one(m.field()), nv);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    const Polynomial pivot = a[row][col];
    for (std::size_t r = row + 1; r < rows; ++r) {
      const Polynomial lead = a[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        Polynomial v = pivot * a[r][c] - lead * a[row][c];
        a[r][c] = v.is_zero() ? v : v.divide_exact(prev);
      }
      a[r][col] = Polynomial(m.field(), nv);
    }
    prev = pivot;
    ++row;
  }
  return {row, prev};
}

std::size_t generic_rank(const LinPolyMatrix& m) { return generic_rank_with_minor(m).rank; }

Vector nonvanishing_point(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::BadParameters, "zero polynomial vanishes everywhere");
  Polynomial cur = p;
  Vector point;
  for (std::size_t var = 0; var < p.nvars(); ++var) {
    // cur is nonzero and has degree d in var, so one of 0..d keeps it nonzero.
    std::size_t d = cur.degree_in(var);
    bool found = false;
    for (std::size_t v = 0; v <= d + 1 && !found; ++v) {
      Scalar val(p.field(), static_cast<long>(v));
      Polynomial next = cur.substitute(var, val);
      if (!next.is_zero()) {
        cur = std::move(next);
        point.push_back(val);
        found = true;
      }
    }
    if (!found) throw Error(Errc::BadParameters, "no nonvanishing value (field too small)");
  }
  return point;
}

}  // namespace nilbreadth
