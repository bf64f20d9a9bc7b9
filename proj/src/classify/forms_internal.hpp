#pragma once

#include <array>
#include <functional>

#include "nilbreadth/classify.hpp"

namespace nilbreadth::detail {

/// u^T form v
Scalar pair(const Matrix& form, const Vector& u, const Vector& v);
Matrix gram(const std::vector<Vector>& basis, const std::function<Scalar(const Vector&, const Vector&)>& f,
            FieldSpec field);
/// sum coords[i] * basis[i]
Vector combine(FieldSpec field, std::size_t n, const std::vector<Vector>& basis, const Vector& coords);
/// Greedy hyperbolic pairs e1, f1, e2, f2, .. followed by the radical, all
/// built from `rest` (vectors in form coordinates).
std::vector<Vector> symplectic_vectors(const Matrix& form, std::vector<Vector> rest, std::size_t& pairs);
/// Coefficients of w in the (independent) basis; throws when w is outside.
Vector coefficients_along(const Vector& w, const std::vector<Vector>& basis);

// Class-2 algebra with a 2-dim center: V = standard complement of Z, the
// center's RREF basis, and the Gram matrices of the two center coordinates.
struct ClassTwoSplit {
  Subspace z;
  std::vector<Vector> v;
  std::vector<Vector> zbasis;
  Matrix g1, g2;
};
ClassTwoSplit class_two_split(const LieAlgebra& algebra);
PencilInvariant pencil_from_grams(const Matrix& g1, const Matrix& g2);

}  // namespace nilbreadth::detail
