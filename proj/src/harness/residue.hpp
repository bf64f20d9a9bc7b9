#pragma once

#include <cstdint>
#include <vector>

#include "nilbreadth/lie_algebra.hpp"

// Plain-residue arithmetic shared by the harness oracles and suites. It does
// not touch Matrix, rref or the breadth module, so brute-force results stay
// independent of the library's elimination code.
namespace nilbreadth::harness::residue {

struct Table {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::vector<std::uint64_t> c;  // c[(i * n + j) * n + k]: e_k-coefficient of [e_i, e_j]

  std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }
  /// Row-major n x n matrix of ad_x: entry (k, j) = sum_i x_i c_ij^k.
  void ad(const std::vector<std::uint64_t>& x, std::vector<std::uint64_t>& out) const;
};

/// Throws BadParameters over Q.
Table table(const LieAlgebra& algebra);
std::vector<std::uint64_t> to_residues(const Vector& v);
std::uint64_t power_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Rank of a rows x cols matrix (destroyed).
std::size_t rank(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols, std::uint64_t p);
/// p^n, or throws SizeCapExceeded when it exceeds cap.
std::uint64_t space_size(std::uint64_t p, std::size_t n, std::uint64_t cap);
/// Lexicographic successor in GF(p)^n, last coordinate fastest.
void increment(std::vector<std::uint64_t>& x, std::uint64_t p);

}  // namespace nilbreadth::harness::residue
