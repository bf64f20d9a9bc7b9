#include <algorithm>
#include <limits>

#include "nilbreadth/harness.hpp"

namespace nilbreadth::harness {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(Errc::BadParameters, "Rng::below(0)");
  // Largest multiple of n that fits; values at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do v = engine_();
  while (v >= limit);
  return v % n;
}

Scalar Rng::scalar(FieldSpec field) {
  if (field.is_prime()) return Scalar(field, static_cast<long>(below(field.characteristic())));
  return Scalar(field, static_cast<long>(below(5)) - 2);
}

Scalar Rng::nonzero_scalar(FieldSpec field) {
  Scalar s = scalar(field);
  while (s.is_zero()) s = scalar(field);
  return s;
}

Vector Rng::vector(FieldSpec field, std::size_t n) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(field));
  return v;
}

BasisChange Rng::invertible(FieldSpec field, std::size_t n) {
  while (true) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar(field);
    if (rank(m) == n) return BasisChange(m);
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

GenerateMode parse_mode(std::string_view text) {
  if (text == "class2") return GenerateMode::Class2;
  if (text == "scramble" || text == "scrambled_catalog") return GenerateMode::ScrambledCatalog;
  if (text == "sum" || text == "direct_sum") return GenerateMode::DirectSum;
  if (text == "extension" || text == "central_extension") return GenerateMode::CentralExtension;
  throw Error(Errc::BadParameters, "unknown generate mode '" + std::string(text) + "'");
}

namespace {

constexpr std::size_t kMaxGeneratedDim = 24;

void check_class2_dims(std::size_t dim_v, std::size_t dim_z) {
  if (dim_v == 0 || dim_v + dim_z > kMaxGeneratedDim)
    throw Error(Errc::BadParameters, "class-2 dimensions need dim_v >= 1 and dim_v + dim_z <= 24");
}

}  // namespace

LieAlgebra random_class2(FieldSpec field, std::size_t dim_v, std::size_t dim_z, Rng& rng) {
  check_class2_dims(dim_v, dim_z);
  const std::size_t n = dim_v + dim_z;
  LieAlgebra l(field, n);
  for (std::size_t i = 0; i < dim_v; ++i)
    for (std::size_t j = i + 1; j < dim_v; ++j) {
      Vector v = zero_vector(field, n);
      for (std::size_t k = 0; k < dim_z; ++k) v[dim_v + k] = rng.scalar(field);
      l.set_bracket(i, j, v);
    }
  return validate_algebra(std::move(l));
}

LieAlgebra random_central_extension(const LieAlgebra& base, std::size_t dim_z, Rng& rng) {
  const FieldSpec field = base.field();
  const std::size_t n = base.dim();
  if (n + dim_z > kMaxGeneratedDim) throw Error(Errc::BadParameters, "extension too large");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  auto pair_at = [&](std::size_t i, std::size_t j) {
    return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) - pairs.begin());
  };
  // Row for w(v, e_k) as a functional of the unknowns w_ij (i < j).
  auto add_term = [&](Vector& row, const Vector& v, std::size_t k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (v[l].is_zero() || l == k) continue;
      if (l < k) row[pair_at(l, k)] += v[l];
      else row[pair_at(k, l)] -= v[l];
    }
  };
  // Cocycle condition on every triple i < j < k.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector row = zero_vector(field, pairs.size());
        add_term(row, base.basis_bracket(i, j), k);
        add_term(row, base.basis_bracket(j, k), i);
        add_term(row, base.basis_bracket(k, i), j);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<Vector> cocycles;
  if (rows.empty()) {
    for (std::size_t p = 0; p < pairs.size(); ++p) cocycles.push_back(unit_vector(field, pairs.size(), p));
  } else {
    cocycles = rref(Matrix::from_rows(field, pairs.size(), rows)).kernel_basis;
  }
  LieAlgebra l(field, n + dim_z);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    Vector v = base.structure(pairs[p].first, pairs[p].second);
    v.resize(n + dim_z, Scalar::zero(field));
    l.set_bracket(pairs[p].first, pairs[p].second, v);
  }
  for (std::size_t c = 0; c < dim_z; ++c) {
    Vector w = zero_vector(field, pairs.size());
    for (const auto& basis : cocycles) axpy(w, rng.scalar(field), basis);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (w[p].is_zero()) continue;
      Vector v = l.structure(pairs[p].first, pairs[p].second);
      v[n + c] += w[p];
      l.set_bracket(pairs[p].first, pairs[p].second, v);
    }
  }
  return validate_algebra(std::move(l));
}

LieAlgebra scramble(const LieAlgebra& algebra, Rng& rng) {
  return validate_algebra(change_basis(algebra, rng.invertible(algebra.field(), algebra.dim())));
}

LieAlgebra generate_random(GenerateMode mode, const GenerateParams& params, std::uint64_t seed) {
  Rng rng(seed);
  switch (mode) {
    case GenerateMode::Class2: return random_class2(params.field, params.dim_v, params.dim_z, rng);
    case GenerateMode::ScrambledCatalog: {
      if (!params.label || params.label->kind == CanonicalLabel::Kind::Unclassified)
        throw Error(Errc::BadParameters, "scrambled catalog mode needs a catalog label");
      return scramble(catalog_make(*params.label, params.field), rng);
    }
    case GenerateMode::DirectSum: {
      LieAlgebra a = random_class2(params.field, params.dim_v, params.dim_z, rng);
      LieAlgebra b = random_class2(params.field, params.dim_v2, params.dim_z2, rng);
      return validate_algebra(direct_sum(a, b));
    }
    case GenerateMode::CentralExtension: {
      if (params.dim_z2 == 0) throw Error(Errc::BadParameters, "extension needs dim_z2 >= 1");
      return random_central_extension(random_class2(params.field, params.dim_v, params.dim_z, rng), params.dim_z2, rng);
    }
  }
  throw Error(Errc::BadParameters, "unknown generate mode");
}

namespace {

CanonicalLabel random_catalog_label(FieldSpec field, std::size_t max_dim, Rng& rng) {
  using K = CanonicalLabel::Kind;
  std::vector<CanonicalLabel> pool;
  for (std::size_t k = 1; 2 * k + 1 <= max_dim; ++k) pool.push_back(CanonicalLabel::breadth1(k));
  for (K kind : {K::N4, K::M5, K::M6, K::P5, K::HH}) pool.push_back(CanonicalLabel::simple(kind));
  for (std::size_t n = 1; n + 4 <= max_dim; ++n) pool.push_back(CanonicalLabel::qfamily(n));
  pool.push_back(CanonicalLabel::lalpha(rng.scalar(field)));
  std::erase_if(pool, [&](const CanonicalLabel& l) { return l.dimension() > max_dim; });
  if (pool.empty()) return CanonicalLabel::abelian(max_dim);
  CanonicalLabel label = pool[rng.below(pool.size())];
  const std::size_t room = max_dim - label.dimension();
  if (room > 0 && rng.below(3) == 0) {
    label.m = 1 + rng.below(room);
  }
  return label;
}

}  // namespace

LieAlgebra random_corpus_algebra(FieldSpec field, std::size_t max_dim, Rng& rng) {
  if (max_dim < 3) throw Error(Errc::BadParameters, "corpus algebras need max_dim >= 3");
  auto maybe_scramble = [&](LieAlgebra l) { return rng.below(2) == 0 ? scramble(l, rng) : l; };
  switch (rng.below(5)) {
    case 0: {
      const std::size_t dv = 2 + rng.below(std::min<std::size_t>(3, max_dim - 2));
      const std::size_t dz = 1 + rng.below(std::min<std::size_t>(3, max_dim - dv));
      return maybe_scramble(random_class2(field, dv, dz, rng));
    }
    case 1: {
      const std::size_t dv = 2 + rng.below(std::min<std::size_t>(2, max_dim - 2));
      const std::size_t dz = 1 + rng.below(std::min<std::size_t>(2, max_dim - dv));
      LieAlgebra base = random_class2(field, dv, dz, rng);
      if (base.dim() >= max_dim) return maybe_scramble(base);
      const std::size_t ext = 1 + rng.below(std::min<std::size_t>(2, max_dim - base.dim()));
      return maybe_scramble(random_central_extension(base, ext, rng));
    }
    case 2: return scramble(catalog_make(random_catalog_label(field, max_dim, rng), field), rng);
    case 3: {
      LieAlgebra a = random_class2(field, max_dim >= 5 ? 2 + rng.below(2) : 2, 1, rng);
      if (a.dim() >= max_dim) return maybe_scramble(a);
      const std::size_t rest = max_dim - a.dim();
      if (rest < 3) return maybe_scramble(validate_algebra(direct_sum(a, abelian_algebra(field, rest))));
      const std::size_t dv = 2 + rng.below(std::min<std::size_t>(2, rest - 2));
      LieAlgebra b = random_class2(field, dv, 1 + rng.below(rest - dv), rng);
      return maybe_scramble(validate_algebra(direct_sum(a, b)));
    }
    default: {
      if (max_dim <= 3) return maybe_scramble(random_class2(field, 2, 1, rng));
      LieAlgebra a = random_corpus_algebra(field, max_dim - 1, rng);
      const std::size_t room = max_dim - a.dim();
      if (room == 0) return a;
      return maybe_scramble(validate_algebra(direct_sum(a, abelian_algebra(field, 1 + rng.below(room)))));
    }
  }
}

std::uint64_t class2_count(std::size_t dim_v, std::size_t dim_z, FieldSpec field) {
  if (!field.is_prime()) throw Error(Errc::BadParameters, "enumeration needs a prime field");
  const std::size_t constants = dim_z * dim_v * (dim_v == 0 ? 0 : dim_v - 1) / 2;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < constants; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / field.characteristic())
      return std::numeric_limits<std::uint64_t>::max();
    count *= field.characteristic();
  }
  return count;
}

void enumerate_class2(std::size_t dim_v, std::size_t dim_z, FieldSpec field,
                      const std::function<void(const LieAlgebra&)>& visit, std::uint64_t cap) {
  check_class2_dims(dim_v, dim_z);
  const std::uint64_t count = class2_count(dim_v, dim_z, field);
  if (count > cap) throw Error(Errc::SizeCapExceeded, "class-2 enumeration exceeds the size cap");
  const std::uint32_t p = field.characteristic();
  const std::size_t n = dim_v + dim_z;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < dim_v; ++i)
    for (std::size_t j = i + 1; j < dim_v; ++j) pairs.emplace_back(i, j);
  std::vector<std::uint32_t> digits(pairs.size() * dim_z, 0);
  for (std::uint64_t index = 0; index < count; ++index) {
    LieAlgebra l(field, n);
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      Vector v = zero_vector(field, n);
      for (std::size_t k = 0; k < dim_z; ++k) v[dim_v + k] = Scalar(field, static_cast<long>(digits[q * dim_z + k]));
      l.set_bracket(pairs[q].first, pairs[q].second, v);
    }
    visit(validate_algebra(std::move(l)));
    for (std::size_t d = digits.size(); d-- > 0;) {
      if (++digits[d] < p) break;
      digits[d] = 0;
    }
  }
}

}  // namespace nilbreadth::harness
