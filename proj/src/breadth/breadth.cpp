#include "nilbreadth/breadth.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace nilbreadth {

const char* method_name(BreadthMethod m) {
  return m == BreadthMethod::Exhaustive ? "exhaustive" : "generic_rank";
}

const char* predicted_name(PredictedBreadth p) {
  switch (p) {
    case PredictedBreadth::Zero: return "0";
    case PredictedBreadth::One: return "1";
    case PredictedBreadth::Two: return "2";
    case PredictedBreadth::AtLeastThree: return ">=3";
  }
  return "?";
}

namespace {

// Columns of ad_x restricted to span{targets}, as residues mod p:
// table[i][c] = [e_i, targets[c]].
class PrimeKernel {
 public:
  PrimeKernel(const LieAlgebra& algebra, const std::vector<Vector>& targets)
      : p_(algebra.field().characteristic()), n_(algebra.dim()), cols_(targets.size()),
        table_(n_ * cols_ * n_, 0), scratch_(n_ * cols_, 0) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t c = 0; c < cols_; ++c) {
        Vector v = algebra.bracket(unit_vector(algebra.field(), n_, i), targets[c]);
        for (std::size_t r = 0; r < n_; ++r) table_[(i * cols_ + c) * n_ + r] = v[r].residue();
      }
  }

  // x given as residues.
  std::size_t rank(const std::vector<std::uint32_t>& x) {
    std::fill(scratch_.begin(), scratch_.end(), 0);
    // scratch_ is row-major with rows = columns of ad (so rank is the same).
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t c = 0; c < cols_; ++c) {
        const std::uint32_t* t = &table_[(i * cols_ + c) * n_];
        std::uint32_t* row = &scratch_[c * n_];
        for (std::size_t r = 0; r < n_; ++r)
          if (t[r]) row[r] = static_cast<std::uint32_t>((row[r] + std::uint64_t{x[i]} * t[r]) % p_);
      }
    }
    std::size_t rk = 0;
    for (std::size_t col = 0; col < n_ && rk < cols_; ++col) {
      std::size_t piv = rk;
      while (piv < cols_ && scratch_[piv * n_ + col] == 0) ++piv;
      if (piv == cols_) continue;
      if (piv != rk)
        for (std::size_t k = 0; k < n_; ++k) std::swap(scratch_[piv * n_ + k], scratch_[rk * n_ + k]);
      const std::uint64_t inv = inverse(scratch_[rk * n_ + col]);
      for (std::size_t r = rk + 1; r < cols_; ++r) {
        std::uint32_t f = scratch_[r * n_ + col];
        if (f == 0) continue;
        const std::uint64_t m = (f * inv) % p_;
        for (std::size_t k = col; k < n_; ++k)
          scratch_[r * n_ + k] =
              static_cast<std::uint32_t>((scratch_[r * n_ + k] + (p_ - m) * scratch_[rk * n_ + k]) % p_);
      }
      ++rk;
    }
    return rk;
  }

 private:
  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t result = 1, base = a % p_, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return result;
  }

  std::uint64_t p_;
  std::size_t n_, cols_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> scratch_;
};

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

Vector to_vector(FieldSpec field, const std::vector<std::uint32_t>& x) {
  Vector v;
  v.reserve(x.size());
  for (auto r : x) v.emplace_back(field, static_cast<long>(r));
  return v;
}

// Maximum of kernel.rank over x with support on `free` coordinates, up to
// nonzero scalars; stops once `bound` is reached.
std::size_t projective_max(PrimeKernel& kernel, std::size_t n, std::uint32_t p, const std::vector<std::size_t>& free,
                           std::size_t bound, std::uint64_t cap) {
  const std::size_t f = free.size();
  if (f == 0 || bound == 0) return 0;
  std::uint64_t count = saturating_pow(p, f);
  if (count != UINT64_MAX) count = (count - 1) / (p - 1);
  if (count > cap) {
    std::ostringstream os;
    os << "scan of " << count << " quotient representatives exceeds cap " << cap;
    throw Error(Errc::EnumerationBudgetExceeded, os.str());
  }
  std::size_t best = 0;
  std::vector<std::uint32_t> x(n, 0);
  // Leading coordinate (first nonzero among free) is 1; later ones range freely.
  for (std::size_t lead = 0; lead < f; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[free[lead]] = 1;
    const std::size_t tail = f - lead - 1;
    while (true) {
      best = std::max(best, kernel.rank(x));
      if (best >= bound) return best;
      std::size_t k = 0;
      for (; k < tail; ++k) {
        std::uint32_t& d = x[free[f - 1 - k]];
        if (++d < p) break;
        d = 0;
      }
      if (k == tail) break;
    }
  }
  return best;
}

// Lexicographically first x in GF(p)^n with kernel.rank(x) == target.
std::optional<std::vector<std::uint32_t>> lex_first(PrimeKernel& kernel, std::size_t n, std::uint32_t p,
                                                    std::size_t target, std::uint64_t cap) {
  std::vector<std::uint32_t> x(n, 0);
  std::uint64_t visited = 0;
  while (true) {
    if (++visited > cap) throw Error(Errc::EnumerationBudgetExceeded, "witness scan exceeds enumeration cap");
    if (kernel.rank(x) == target) return x;
    std::size_t k = 0;
    for (; k < n; ++k) {
      std::uint32_t& d = x[n - 1 - k];
      if (++d < p) break;
      d = 0;
    }
    if (k == n) return std::nullopt;
  }
}

std::vector<Vector> standard_basis(FieldSpec field, std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(field, n, i));
  return out;
}

struct Scan {
  std::size_t value;
  Vector witness;
  BreadthMethod method;
};

// Breadth of ad_x restricted to span{targets}; `kernel_space` is the set of
// x acting trivially and `bound` an a priori upper bound.
Scan scan_breadth(const LieAlgebra& algebra, const std::vector<Vector>& targets, const Subspace& kernel_space,
                  std::size_t bound, const LinPolyMatrix* symbolic, const BreadthOptions& options) {
  const FieldSpec field = algebra.field();
  const std::size_t n = algebra.dim();
  if (n == 0) return {0, {}, field.is_prime() ? BreadthMethod::Exhaustive : BreadthMethod::GenericRank};
  auto rank_at = [&](const Vector& x) {
    std::vector<Vector> cols;
    for (const auto& t : targets) cols.push_back(algebra.bracket(x, t));
    return rank(Matrix::from_columns(field, n, cols));
  };
  if (field.is_prime()) {
    const std::uint32_t p = field.characteristic();
    PrimeKernel kernel(algebra, targets);
    std::size_t value = projective_max(kernel, n, p, kernel_space.non_pivots(), bound, options.enumeration_cap);
    auto w = lex_first(kernel, n, p, value, options.enumeration_cap);
    return {value, to_vector(field, *w), BreadthMethod::Exhaustive};
  }
  // Over Q: generic rank. The trial points give a lower bound; when it meets
  // the a priori bound no elimination is needed.
  std::optional<Vector> best_point;
  std::size_t best = 0;
  for_each_trial_point(field, n, [&](const Vector& x) {
    std::size_t r = rank_at(x);
    if (!best_point || r > best) {
      best = r;
      best_point = x;
    }
    return best >= bound;
  });
  if (best >= bound) return {best, *best_point, BreadthMethod::GenericRank};
  GenericRankResult g = generic_rank_with_minor(*symbolic);
  if (g.rank == best) return {best, *best_point, BreadthMethod::GenericRank};
  return {g.rank, nonvanishing_point(g.minor), BreadthMethod::GenericRank};
}

}  // namespace

std::size_t element_breadth(const LieAlgebra& algebra, const Vector& x) { return rank(algebra.ad_matrix(x)); }

std::size_t relative_breadth(const LieAlgebra& algebra, const Subspace& ideal, const Vector& x) {
  if (!is_ideal(algebra, ideal)) throw Error(Errc::NotAnIdeal, "relative breadth needs an ideal");
  std::vector<Vector> cols;
  for (const auto& a : ideal.basis()) cols.push_back(algebra.bracket(x, a));
  return rank(Matrix::from_columns(algebra.field(), algebra.dim(), cols));
}

LinPolyMatrix symbolic_ad(const LieAlgebra& algebra) {
  return symbolic_relative_ad(algebra, Subspace::full(algebra.field(), algebra.dim()));
}

LinPolyMatrix symbolic_relative_ad(const LieAlgebra& algebra, const Subspace& ideal) {
  const std::size_t n = algebra.dim();
  LinPolyMatrix m(algebra.field(), n, ideal.dim(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < ideal.dim(); ++c) {
      Vector v = algebra.bracket(unit_vector(algebra.field(), n, i), ideal.basis()[c]);
      for (std::size_t r = 0; r < n; ++r) m.coeff(r, c, i) = v[r];
    }
  return m;
}

void for_each_trial_point(FieldSpec field, std::size_t n, const std::function<bool(const Vector&)>& visit) {
  for (std::size_t i = 0; i < n; ++i)
    if (visit(unit_vector(field, n, i))) return;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = unit_vector(field, n, i);
      v[j] = Scalar::one(field);
      if (visit(v)) return;
    }
  if (saturating_pow(3, n) > 20000) return;
  std::vector<int> digits(n, -1);
  while (true) {
    Vector v;
    for (int d : digits) v.emplace_back(field, static_cast<long>(d));
    if (visit(v)) return;
    std::size_t k = 0;
    for (; k < n; ++k) {
      int& d = digits[n - 1 - k];
      if (++d <= 1) break;
      d = -1;
    }
    if (k == n) return;
  }
}

void for_each_field_element(FieldSpec field, std::size_t n, const std::function<bool(const Vector&)>& visit,
                            std::uint64_t cap) {
  if (!field.is_prime()) throw Error(Errc::InvalidField, "enumeration needs a finite field");
  const std::uint32_t p = field.characteristic();
  if (saturating_pow(p, n) > cap) throw Error(Errc::EnumerationBudgetExceeded, "field enumeration exceeds cap");
  std::vector<std::uint32_t> x(n, 0);
  while (true) {
    if (visit(to_vector(field, x))) return;
    std::size_t k = 0;
    for (; k < n; ++k) {
      std::uint32_t& d = x[n - 1 - k];
      if (++d < p) break;
      d = 0;
    }
    if (k == n) return;
  }
}

BreadthReport algebra_breadth(const LieAlgebra& algebra, const BreadthOptions& options) {
  const FieldSpec field = algebra.field();
  const std::size_t n = algebra.dim();
  StructuralInvariants inv = structural_invariants(algebra);
  const std::size_t quotient_dim = n - inv.profile.dim_center;
  const std::size_t bound = quotient_dim == 0 ? 0 : std::min(inv.profile.dim_derived, quotient_dim - 1);
  std::optional<LinPolyMatrix> sym;
  if (field.is_rational() && bound > 0) sym = symbolic_ad(algebra);
  Scan s = scan_breadth(algebra, standard_basis(field, n), inv.center, bound, sym ? &*sym : nullptr, options);
  BreadthReport r;
  r.value = s.value;
  r.witness = std::move(s.witness);
  r.method = s.method;
  r.field = field;
  return r;
}

RelativeBreadthReport relative_algebra_breadth(const LieAlgebra& algebra, const Subspace& ideal,
                                               const BreadthOptions& options) {
  if (!is_ideal(algebra, ideal)) throw Error(Errc::NotAnIdeal, "relative breadth needs an ideal");
  const FieldSpec field = algebra.field();
  const Subspace cent = centralizer(algebra, ideal);
  const Subspace image = bracket_subspaces(algebra, Subspace::full(field, algebra.dim()), ideal);
  const std::size_t bound = std::min({image.dim(), ideal.dim(), algebra.dim() - cent.dim()});
  std::optional<LinPolyMatrix> sym;
  if (field.is_rational() && bound > 0) sym = symbolic_relative_ad(algebra, ideal);
  Scan s = scan_breadth(algebra, ideal.basis(), cent, bound, sym ? &*sym : nullptr, options);
  RelativeBreadthReport r{ideal, s.value, std::move(s.witness), s.method};
  return r;
}

std::optional<Vector> find_element_of_breadth(const LieAlgebra& algebra, std::size_t target,
                                              const BreadthOptions& options) {
  const FieldSpec field = algebra.field();
  const std::size_t n = algebra.dim();
  if (field.is_prime()) {
    PrimeKernel kernel(algebra, standard_basis(field, n));
    auto w = lex_first(kernel, n, field.characteristic(), target, options.enumeration_cap);
    if (!w) return std::nullopt;
    return to_vector(field, *w);
  }
  std::optional<Vector> found;
  for_each_trial_point(field, n, [&](const Vector& x) {
    if (element_breadth(algebra, x) == target) found = x;
    return found.has_value();
  });
  if (found) return found;
  GenericRankResult g = generic_rank_with_minor(symbolic_ad(algebra));
  if (g.rank == target) return nonvanishing_point(g.minor);
  return std::nullopt;
}

bool CharacterizationReport::consistent() const {
  if (!computed) return true;
  switch (predicted) {
    case PredictedBreadth::Zero: return *computed == 0;
    case PredictedBreadth::One: return *computed == 1;
    case PredictedBreadth::Two: return *computed == 2;
    case PredictedBreadth::AtLeastThree: return *computed >= 3;
  }
  return false;
}

BoundChecks check_bounds(const InvariantProfile& profile, std::size_t b) {
  BoundChecks c;
  if (profile.dim_derived > 0) c.lower_bound = profile.dim - profile.dim_center >= b + 1;
  c.derived_bound = b <= profile.dim_derived;
  if (profile.nilpotent) c.upper_bound = profile.dim_derived <= b * (b + 1) / 2;
  return c;
}

CharacterizationReport characterize_breadth(const LieAlgebra& algebra) {
  require_nilpotent(algebra);
  CharacterizationReport r;
  r.profile = invariant_profile(algebra);
  const std::size_t d = r.profile.dim_derived;
  const std::size_t q = r.profile.dim - r.profile.dim_center;
  if (d == 0)
    r.predicted = PredictedBreadth::Zero;
  else if (d == 1)
    r.predicted = PredictedBreadth::One;
  else if (d == 2 || (d == 3 && q == 3))
    r.predicted = PredictedBreadth::Two;
  else
    r.predicted = PredictedBreadth::AtLeastThree;
  return r;
}

CharacterizationReport characterize_breadth(const LieAlgebra& algebra, std::size_t computed_breadth) {
  CharacterizationReport r = characterize_breadth(algebra);
  r.computed = computed_breadth;
  r.bounds = check_bounds(r.profile, computed_breadth);
  return r;
}

}  // namespace nilbreadth
