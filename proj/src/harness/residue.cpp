#include "residue.hpp"

#include <limits>

namespace nilbreadth::harness::residue {

Table table(const LieAlgebra& algebra) {
  if (!algebra.field().is_prime()) throw Error(Errc::BadParameters, "residue arithmetic needs a prime field");
  Table t;
  t.p = algebra.field().characteristic();
  t.n = algebra.dim();
  t.c.assign(t.n * t.n * t.n, 0);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) {
      if (i == j) continue;
      const Vector v = algebra.basis_bracket(i, j);
      for (std::size_t k = 0; k < t.n; ++k) t.c[(i * t.n + j) * t.n + k] = v[k].residue();
    }
  return t;
}

void Table::ad(const std::vector<std::uint64_t>& x, std::vector<std::uint64_t>& out) const {
  out.assign(n * n, 0);
  // Small p: n products of two residues fit in 64 bits, reduce once at the end.
  const bool lazy = n == 0 || (p - 1) * (p - 1) <= std::numeric_limits<std::uint64_t>::max() / n;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    const std::uint64_t* row = &c[i * n * n];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t& e = out[k * n + j];
        e = lazy ? e + x[i] * row[j * n + k] : (e + x[i] * row[j * n + k] % p) % p;
      }
  }
  for (auto& v : out) v %= p;
}

std::vector<std::uint64_t> to_residues(const Vector& v) {
  std::vector<std::uint64_t> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.residue());
  return out;
}

std::uint64_t power_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::size_t rank(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols, std::uint64_t p) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m[piv * cols + k], m[r * cols + k]);
    const std::uint64_t inv = power_mod(m[r * cols + col], p - 2, p);
    for (std::size_t row = r + 1; row < rows; ++row) {
      const std::uint64_t f = m[row * cols + col] * inv % p;
      if (f == 0) continue;
      for (std::size_t k = col; k < cols; ++k) m[row * cols + k] = (m[row * cols + k] + (p - f) * m[r * cols + k]) % p;
    }
    ++r;
  }
  return r;
}

std::uint64_t space_size(std::uint64_t p, std::size_t n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / p) throw Error(Errc::SizeCapExceeded, "p^n exceeds the size cap");
    total *= p;
  }
  return total;
}

void increment(std::vector<std::uint64_t>& x, std::uint64_t p) {
  for (std::size_t d = x.size(); d-- > 0;) {
    if (++x[d] < p) return;
    x[d] = 0;
  }
}

}  // namespace nilbreadth::harness::residue
