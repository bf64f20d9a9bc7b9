#pragma once

#include <initializer_list>
#include <tuple>

#include "nilbreadth/lie_algebra.hpp"

namespace fixtures {

using nilbreadth::FieldSpec;
using nilbreadth::LieAlgebra;

// Brackets as (i, j, k, c) with 1-based indices: [e_i, e_j] += c e_k.
inline LieAlgebra build(FieldSpec field, std::size_t n, std::initializer_list<std::tuple<int, int, int, long>> terms) {
  LieAlgebra l(field, n);
  for (auto [i, j, k, c] : terms) {
    auto v = l.basis_bracket(i - 1, j - 1);
    v[k - 1] += nilbreadth::Scalar(field, c);
    l.set_bracket(i - 1, j - 1, v);
  }
  return nilbreadth::validate_algebra(l);
}

inline LieAlgebra heisenberg(FieldSpec f) { return build(f, 3, {{1, 2, 3, 1}}); }
// [x1,x2]=x3, [x1,x3]=z
inline LieAlgebra n4(FieldSpec f) { return build(f, 4, {{1, 2, 3, 1}, {1, 3, 4, 1}}); }
inline LieAlgebra m5(FieldSpec f) { return build(f, 5, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 3, 5, 1}}); }
inline LieAlgebra m6(FieldSpec f) { return build(f, 6, {{1, 2, 4, 1}, {1, 3, 5, 1}, {2, 3, 6, 1}}); }
inline LieAlgebra hh(FieldSpec f) { return build(f, 6, {{1, 2, 5, 1}, {3, 4, 6, 1}}); }

}  // namespace fixtures
