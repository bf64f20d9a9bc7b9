#include <sstream>

#include "nilbreadth/harness.hpp"
#include "residue.hpp"

namespace nilbreadth::harness {

std::vector<std::uint64_t> oracle_breadth_histogram(const LieAlgebra& algebra, std::uint64_t cap) {
  const residue::Table t = residue::table(algebra);
  const std::uint64_t total = residue::space_size(t.p, t.n, cap);
  std::vector<std::uint64_t> histogram(t.n + 1, 0);
  std::vector<std::uint64_t> x(t.n, 0), ad;
  for (std::uint64_t count = 0; count < total; ++count) {
    t.ad(x, ad);
    ++histogram[residue::rank(ad, t.n, t.n, t.p)];
    residue::increment(x, t.p);
  }
  return histogram;
}

std::size_t oracle_breadth(const LieAlgebra& algebra, std::uint64_t cap) {
  const auto h = oracle_breadth_histogram(algebra, cap);
  std::size_t best = 0;
  for (std::size_t r = 0; r < h.size(); ++r)
    if (h[r] != 0) best = r;
  return best;
}

std::string IsoOutcome::verdict_name() const {
  switch (verdict) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

IsoOutcome no(std::string evidence) { return {IsoOutcome::Verdict::No, std::nullopt, std::move(evidence)}; }

std::optional<std::string> separating_invariant(const LieAlgebra& a, const LieAlgebra& b) {
  const InvariantProfile pa = invariant_profile(a), pb = invariant_profile(b);
  auto differ = [](const std::string& what, auto x, auto y) {
    std::ostringstream os;
    os << what << " " << x << " vs " << y;
    return os.str();
  };
  if (pa.dim_derived != pb.dim_derived) return differ("dim [L,L]", pa.dim_derived, pb.dim_derived);
  if (pa.dim_center != pb.dim_center) return differ("dim Z(L)", pa.dim_center, pb.dim_center);
  if (pa.lcs_dims != pb.lcs_dims) return differ("lower central series", join(pa.lcs_dims), join(pb.lcs_dims));
  if (pa.is_pure != pb.is_pure) return differ("pure", pa.is_pure, pb.is_pure);
  if (pa.nilpotent && pb.nilpotent) {
    const std::size_t ba = algebra_breadth(a).value, bb = algebra_breadth(b).value;
    if (ba != bb) return differ("breadth", ba, bb);
  }
  const bool pencil_applies = pa.dim == 6 && pa.dim_center == 2 && pa.dim_derived == 2 && pa.is_pure &&
                              pa.nilpotent && pa.lcs_dims.size() <= 3;
  if (pencil_applies) {
    const auto ra = pencil_invariant(a).roots_string(), rb = pencil_invariant(b).roots_string();
    if (ra != rb) return differ("pencil roots", ra, rb);
  }
  if (a.field().is_prime()) {
    try {
      const auto ha = oracle_breadth_histogram(a, 1'000'000), hb = oracle_breadth_histogram(b, 1'000'000);
      if (ha != hb) return differ("breadth histogram", join(ha), join(hb));
    } catch (const Error& e) {
      if (e.code() != Errc::SizeCapExceeded) throw;
    }
  }
  return std::nullopt;
}

bool transports(const LieAlgebra& first, const LieAlgebra& second, const BasisChange& w) {
  return change_basis(second, w) == first;
}

std::optional<BasisChange> exhaustive_search(const LieAlgebra& first, const LieAlgebra& second) {
  const FieldSpec f = first.field();
  const std::size_t n = first.dim();
  const std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> digits(n * n, 0);
  while (true) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = Scalar(f, static_cast<long>(digits[i]));
    if (rank(m) == n) {
      BasisChange w(m);
      if (transports(first, second, w)) return w;
    }
    std::size_t d = digits.size();
    while (d-- > 0) {
      if (++digits[d] < p) break;
      digits[d] = 0;
    }
    if (d == static_cast<std::size_t>(-1)) return std::nullopt;
  }
}

// One randomized attempt: images of the generators (a complement of [L,L] in
// the first algebra) are drawn from the affine space cut out by every bracket
// relation already determined, then the map is extended along brackets and
// checked for consistency.
class TransportSearch {
 public:
  TransportSearch(const LieAlgebra& first, const LieAlgebra& second)
      : a_(first), b_(second), f_(first.field()), n_(first.dim()), derived_b_(derived_algebra(second)) {
    gens_ = derived_algebra(first).complement().basis();
    for (const auto& g : gens_) gen_breadth_.push_back(element_breadth(first, g));
  }

  std::optional<BasisChange> attempt(Rng& rng) {
    src_.clear();
    img_.clear();
    closed_ = 0;
    Subspace chosen = derived_b_;
    for (std::size_t t = 0; t < gens_.size(); ++t) {
      auto y = draw_image(gens_[t], gen_breadth_[t], chosen, rng);
      if (!y) return std::nullopt;
      chosen = chosen.sum(Subspace::span(f_, n_, {*y}));
      src_.push_back(gens_[t]);
      img_.push_back(*y);
      if (!close()) return std::nullopt;
    }
    if (src_.size() != n_) return std::nullopt;
    Matrix phi = Matrix::from_columns(f_, n_, img_) * inverse(Matrix::from_columns(f_, n_, src_));
    if (rank(phi) != n_) return std::nullopt;
    BasisChange w(phi);
    if (!transports(a_, b_, w)) return std::nullopt;
    return w;
  }

 private:
  std::optional<Vector> coordinates(const Vector& v) const {
    if (src_.empty()) return is_zero(v) ? std::optional<Vector>(Vector{}) : std::nullopt;
    return solve(Matrix::from_columns(f_, n_, src_), v);
  }
  Vector image(const Vector& coords) const {
    Vector out = zero_vector(f_, n_);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero()) axpy(out, coords[i], img_[i]);
    return out;
  }

  std::optional<Vector> draw_image(const Vector& g, std::size_t breadth, const Subspace& chosen, Rng& rng) {
    // [y, phi(s)] = phi([g, s])  <=>  ad_{phi(s)} y = -phi([g, s])
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t s = 0; s < src_.size(); ++s) {
      auto c = coordinates(a_.bracket(g, src_[s]));
      if (!c) continue;
      const Matrix ad = b_.ad_matrix(img_[s]);
      const Vector target = image(*c);
      for (std::size_t r = 0; r < n_; ++r) {
        rows.push_back(ad.row(r));
        rhs.push_back(-target[r]);
      }
    }
    Vector base = zero_vector(f_, n_);
    std::vector<Vector> directions;
    if (rows.empty()) {
      for (std::size_t i = 0; i < n_; ++i) directions.push_back(unit_vector(f_, n_, i));
    } else {
      const Matrix m = Matrix::from_rows(f_, n_, rows);
      auto particular = solve(m, rhs);
      if (!particular) return std::nullopt;
      base = *particular;
      directions = rref(m).kernel_basis;
    }
    for (int tries = 0; tries < 8; ++tries) {
      Vector y = base;
      for (const auto& d : directions) axpy(y, rng.scalar(f_), d);
      if (chosen.contains(y)) continue;
      if (element_breadth(b_, y) != breadth) continue;
      return y;
    }
    return std::nullopt;
  }

  bool close() {
    while (closed_ < src_.size()) {
      const std::size_t i = closed_;
      for (std::size_t j = 0; j < i; ++j) {
        const Vector c = a_.bracket(src_[i], src_[j]);
        const Vector ic = b_.bracket(img_[i], img_[j]);
        if (auto coords = coordinates(c)) {
          if (image(*coords) != ic) return false;
        } else {
          src_.push_back(c);
          img_.push_back(ic);
        }
      }
      ++closed_;
    }
    return true;
  }

  const LieAlgebra& a_;
  const LieAlgebra& b_;
  FieldSpec f_;
  std::size_t n_;
  Subspace derived_b_;
  std::vector<Vector> gens_;
  std::vector<std::size_t> gen_breadth_;
  std::vector<Vector> src_, img_;
  std::size_t closed_ = 0;
};

}  // namespace

IsoOutcome oracle_isomorphism(const LieAlgebra& first, const LieAlgebra& second, const IsoOptions& options) {
  if (!(first.field() == second.field())) throw Error(Errc::FieldMismatch, "algebras over different fields");
  if (first.dim() != second.dim()) {
    std::ostringstream os;
    os << "dim " << first.dim() << " vs " << second.dim();
    return no(os.str());
  }
  const FieldSpec f = first.field();
  const std::size_t n = first.dim();
  if (auto sep = separating_invariant(first, second)) return no(*sep);

  if (f.is_prime()) {
    std::uint64_t size = 1;
    bool small = true;
    for (std::size_t i = 0; i < n * n && small; ++i) {
      size *= f.characteristic();
      small = size <= options.exhaustive_limit;
    }
    if (small) {
      if (auto w = exhaustive_search(first, second))
        return {IsoOutcome::Verdict::Yes, *w, "exhaustive search over GL_n"};
      return no("exhaustive search over GL_n found no isomorphism");
    }
  }

  Rng rng(options.seed);
  TransportSearch search(first, second);
  for (std::size_t k = 0; k < options.attempts; ++k)
    if (auto w = search.attempt(rng)) {
      std::ostringstream os;
      os << "randomized search, attempt " << (k + 1);
      return {IsoOutcome::Verdict::Yes, *w, os.str()};
    }
  std::ostringstream os;
  os << "invariants agree; no witness in " << options.attempts << " randomized attempts";
  return {IsoOutcome::Verdict::Unknown, std::nullopt, os.str()};
}

}  // namespace nilbreadth::harness
