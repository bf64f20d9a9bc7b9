#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nilbreadth/lie_algebra.hpp"
#include "nilbreadth/polynomial.hpp"

namespace nilbreadth {

enum class BreadthMethod { Exhaustive, GenericRank };
const char* method_name(BreadthMethod m);

struct BreadthOptions {
  /// Largest number of field elements an exhaustive scan may visit.
  std::uint64_t enumeration_cap = 100'000'000;
};

struct BreadthReport {
  std::size_t value = 0;
  Vector witness;  // rank(ad_witness) == value
  BreadthMethod method = BreadthMethod::Exhaustive;
  FieldSpec field = FieldSpec::rationals();
};

struct RelativeBreadthReport {
  Subspace ideal;
  std::size_t value = 0;
  Vector witness;
  BreadthMethod method = BreadthMethod::Exhaustive;
};

/// rank(ad_x)
std::size_t element_breadth(const LieAlgebra& algebra, const Vector& x);
/// rank(ad_x restricted to A). Throws NotAnIdeal.
std::size_t relative_breadth(const LieAlgebra& algebra, const Subspace& ideal, const Vector& x);

/// b(L). Over GF(p) the value is the exact maximum over the field (scan of
/// L/Z(L) up to scalars, stopping at the trivial bound min(dim[L,L],
/// dim L/Z(L) - 1)); the witness is the lexicographically first maximizer
/// of GF(p)^n. Over Q the value is the generic rank of ad_x.
/// Throws EnumerationBudgetExceeded.
BreadthReport algebra_breadth(const LieAlgebra& algebra, const BreadthOptions& options = {});
RelativeBreadthReport relative_algebra_breadth(const LieAlgebra& algebra, const Subspace& ideal,
                                               const BreadthOptions& options = {});

/// ad_x for the generic element x = sum t_i e_i.
LinPolyMatrix symbolic_ad(const LieAlgebra& algebra);
/// ad_x restricted to the ideal, columns indexed by the ideal's basis.
LinPolyMatrix symbolic_relative_ad(const LieAlgebra& algebra, const Subspace& ideal);

/// Deterministic candidate elements: e_1..e_n, then e_i + e_j (i < j), then
/// the points of {-1,0,1}^n in lexicographic order (when 3^n <= 20000).
/// The callback returns true to stop.
void for_each_trial_point(FieldSpec field, std::size_t n, const std::function<bool(const Vector&)>& visit);

/// Calls visit(x) for every x in GF(p)^n in lexicographic coordinate order
/// until it returns true. Throws EnumerationBudgetExceeded.
void for_each_field_element(FieldSpec field, std::size_t n, const std::function<bool(const Vector&)>& visit,
                            std::uint64_t cap = 100'000'000);

/// First element x (trial order over Q, lexicographic over GF(p)) with
/// rank(ad_x) == target. Over Q, when the trial sequence fails and target is
/// the generic rank, a point off the vanishing locus of a nonzero minor is
/// used.
std::optional<Vector> find_element_of_breadth(const LieAlgebra& algebra, std::size_t target,
                                              const BreadthOptions& options = {});

enum class PredictedBreadth { Zero, One, Two, AtLeastThree };
const char* predicted_name(PredictedBreadth p);

struct BoundChecks {
  bool lower_bound = true;    // dim(L/Z) >= b + 1 (non-abelian L)
  bool derived_bound = true;  // b <= dim[L,L]
  bool upper_bound = true;    // dim[L,L] <= b(b+1)/2 (nilpotent L)
  bool all() const { return lower_bound && derived_bound && upper_bound; }
};

struct CharacterizationReport {
  InvariantProfile profile;
  PredictedBreadth predicted = PredictedBreadth::Zero;
  std::optional<std::size_t> computed;
  std::optional<BoundChecks> bounds;
  /// Prediction agrees with the computed value (when one was supplied).
  bool consistent() const;
};

/// Predicts the breadth class from invariants alone: 0 iff abelian, 1 iff
/// dim[L,L] = 1, 2 iff dim[L,L] = 2 or dim[L,L] = dim(L/Z) = 3, otherwise
/// at least 3. Throws NotNilpotent.
CharacterizationReport characterize_breadth(const LieAlgebra& algebra);
/// Same, plus the bound checks against a computed breadth.
CharacterizationReport characterize_breadth(const LieAlgebra& algebra, std::size_t computed_breadth);
BoundChecks check_bounds(const InvariantProfile& profile, std::size_t breadth);

}  // namespace nilbreadth
