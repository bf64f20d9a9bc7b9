#include <chrono>
#include <sstream>

#include "json.hpp"
#include "nilbreadth/harness.hpp"
#include "residue.hpp"

namespace nilbreadth::harness {

namespace {

using Outcome = TrialRecord::Outcome;
using K = CanonicalLabel::Kind;

struct Verdict {
  Outcome outcome;
  std::string message;
};

Verdict pass() { return {Outcome::Pass, {}}; }
Verdict skip() { return {Outcome::Skipped, {}}; }
Verdict fail(std::string message) { return {Outcome::Fail, std::move(message)}; }

struct Instance {
  LieAlgebra algebra;
  std::vector<LieAlgebra> parts;  // summands, for the direct-sum suites
};

using Draw = std::function<Instance(FieldSpec, std::size_t, Rng&)>;
using Check = std::function<Verdict(const Instance&, Rng&)>;

struct Suite {
  std::string id;
  Draw draw;
  Check check;
  bool exhaustive = false;  // also runs over the GF(3) class-2 corpus
};

constexpr int kFilterBudget = 50;
constexpr std::uint64_t kOracleCap = 1'000'000;

std::string str(std::size_t v) { return std::to_string(v); }

// Brute-force cross-check of the computed breadth when the space is small.
std::optional<std::string> oracle_disagrees(const LieAlgebra& l, std::size_t computed) {
  if (!l.field().is_prime()) return std::nullopt;
  try {
    const std::size_t o = oracle_breadth(l, kOracleCap);
    if (o != computed) return "oracle breadth " + str(o) + " vs algebra_breadth " + str(computed);
  } catch (const Error& e) {
    if (e.code() != Errc::SizeCapExceeded) throw;
  }
  return std::nullopt;
}

Instance single(LieAlgebra l) { return {std::move(l), {}}; }

Draw corpus() {
  return [](FieldSpec f, std::size_t max_dim, Rng& rng) { return single(random_corpus_algebra(f, max_dim, rng)); };
}

LieAlgebra scrambled_label(const CanonicalLabel& label, FieldSpec f, Rng& rng) {
  return scramble(catalog_make(label, f), rng);
}

// Mixture biased towards breadth two.
Draw breadth_two() {
  return [](FieldSpec f, std::size_t max_dim, Rng& rng) {
    switch (rng.below(4)) {
      case 0: {
        std::vector<CanonicalLabel> pool{CanonicalLabel::simple(K::N4), CanonicalLabel::simple(K::M5),
                                         CanonicalLabel::simple(K::M6), CanonicalLabel::simple(K::P5),
                                         CanonicalLabel::simple(K::HH), CanonicalLabel::qfamily(1),
                                         CanonicalLabel::qfamily(2), CanonicalLabel::lalpha(rng.scalar(f))};
        std::erase_if(pool, [&](const CanonicalLabel& l) { return l.dimension() > max_dim; });
        return single(scrambled_label(pool[rng.below(pool.size())], f, rng));
      }
      case 1: return single(scramble(random_class2(f, 3 + rng.below(std::min<std::size_t>(2, max_dim - 4)), 2, rng), rng));
      case 2: {
        LieAlgebra base = random_class2(f, 2 + rng.below(2), 1, rng);
        const std::size_t room = max_dim > base.dim() ? max_dim - base.dim() : 0;
        if (room == 0) return single(scramble(base, rng));
        return single(scramble(random_central_extension(base, 1 + rng.below(std::min<std::size_t>(2, room)), rng), rng));
      }
      default: return single(random_corpus_algebra(f, max_dim, rng));
    }
  };
}

Draw direct_sum_pair() {
  return [](FieldSpec f, std::size_t max_dim, Rng& rng) {
    const std::size_t part = std::max<std::size_t>(3, std::min<std::size_t>(4, max_dim));
    LieAlgebra a = random_corpus_algebra(f, part, rng), b = random_corpus_algebra(f, part, rng);
    LieAlgebra sum = validate_algebra(direct_sum(a, b));
    if (rng.below(2) == 0) sum = scramble(sum, rng);
    return Instance{sum, {a, b}};
  };
}

// ---- sections 2 and 3 ----

Verdict check_lower_bound(const Instance& in, Rng&) {
  const LieAlgebra& l = in.algebra;
  if (l.is_abelian()) return skip();
  const std::size_t b = algebra_breadth(l).value;
  const auto p = invariant_profile(l);
  if (auto d = oracle_disagrees(l, b)) return fail(*d);
  if (p.dim - p.dim_center < b + 1)
    return fail("dim(L/Z) = " + str(p.dim - p.dim_center) + " < b + 1 = " + str(b + 1));
  return pass();
}

Verdict check_additivity(const Instance& in, Rng&) {
  const std::size_t b = algebra_breadth(in.algebra).value;
  const std::size_t b1 = algebra_breadth(in.parts[0]).value, b2 = algebra_breadth(in.parts[1]).value;
  if (auto d = oracle_disagrees(in.algebra, b)) return fail(*d);
  if (b != b1 + b2) return fail("b(L1 + L2) = " + str(b) + " but b(L1) + b(L2) = " + str(b1 + b2));
  return pass();
}

Verdict check_upper_bound(const Instance& in, Rng&) {
  const auto p = invariant_profile(in.algebra);
  if (!p.nilpotent) return skip();
  const std::size_t b = algebra_breadth(in.algebra).value;
  if (auto d = oracle_disagrees(in.algebra, b)) return fail(*d);
  if (p.dim_derived > b * (b + 1) / 2)
    return fail("dim[L,L] = " + str(p.dim_derived) + " > b(b+1)/2 with b = " + str(b));
  return pass();
}

Verdict check_breadth_one(const Instance& in, Rng&) {
  const auto p = invariant_profile(in.algebra);
  if (!p.nilpotent) return skip();
  const std::size_t b = algebra_breadth(in.algebra).value;
  if (auto d = oracle_disagrees(in.algebra, b)) return fail(*d);
  if ((b == 1) != (p.dim_derived == 1)) return fail("b = " + str(b) + " with dim[L,L] = " + str(p.dim_derived));
  return pass();
}

Verdict check_breadth_two(const Instance& in, Rng&) {
  const auto p = invariant_profile(in.algebra);
  if (!p.nilpotent) return skip();
  const std::size_t b = algebra_breadth(in.algebra).value;
  if (auto d = oracle_disagrees(in.algebra, b)) return fail(*d);
  const bool predicted = p.dim_derived == 2 || (p.dim_derived == 3 && p.dim - p.dim_center == 3);
  if ((b == 2) != predicted)
    return fail("b = " + str(b) + " with dim[L,L] = " + str(p.dim_derived) + ", dim(L/Z) = " + str(p.dim - p.dim_center));
  return pass();
}

Verdict check_heisenberg_form(const Instance& in, Rng&) {
  const auto p = invariant_profile(in.algebra);
  if (!p.nilpotent || p.dim_derived != 1) return skip();
  if (algebra_breadth(in.algebra).value != 1) return fail("dim[L,L] = 1 but b != 1");
  const ClassificationReport r = classify_breadth1(in.algebra);
  if (r.label.kind != K::Breadth1 || 2 * r.label.k + 1 + r.label.m != p.dim)
    return fail("breadth-one label " + r.label.to_string() + " does not fit dim " + str(p.dim));
  if (!verify_witness(in.algebra, r)) return fail("witness does not give [x_i, y_j] = delta_ij z");
  return pass();
}

Draw breadth_one_draw() {
  return [](FieldSpec f, std::size_t max_dim, Rng& rng) {
    if (rng.below(2) == 0) {
      const std::size_t k = 1 + rng.below((max_dim - 1) / 2);
      const std::size_t room = max_dim - (2 * k + 1);
      return single(scrambled_label(CanonicalLabel::breadth1(k, room ? rng.below(room + 1) : 0), f, rng));
    }
    const std::size_t dv = 2 + rng.below(max_dim - 2);
    return single(scramble(random_class2(f, dv, 1, rng), rng));
  };
}

// b(L) = 2 and the relative breadth of a maximal abelian ideal.
struct IdealContext {
  Subspace a;
  std::size_t relative = 0;
};

std::optional<IdealContext> breadth_two_with_ideal(const LieAlgebra& l) {
  const auto p = invariant_profile(l);
  if (!p.nilpotent || algebra_breadth(l).value != 2) return std::nullopt;
  Subspace a = maximal_abelian_ideal(l);
  return IdealContext{a, relative_algebra_breadth(l, a).value};
}

Subspace image_on(const LieAlgebra& l, const Vector& x, const Subspace& s) {
  std::vector<Vector> v;
  for (const auto& b : s.basis()) v.push_back(l.bracket(x, b));
  return Subspace::span(l.field(), l.dim(), v);
}

Verdict check_six_elements(const Instance& in, Rng& rng) {
  const LieAlgebra& l = in.algebra;
  auto ctx = breadth_two_with_ideal(l);
  if (!ctx || ctx->relative != 2) return skip();
  const FieldSpec f = l.field();
  const std::size_t n = l.dim();
  auto b_a = [&](const Vector& v) { return image_on(l, v, ctx->a).dim(); };
  auto sample = [&](std::size_t target) -> std::optional<Vector> {
    for (int t = 0; t < 40; ++t) {
      Vector v = rng.vector(f, n);
      if (b_a(v) == target) return v;
    }
    return std::nullopt;
  };
  auto x = sample(2);
  if (!x) x = relative_algebra_breadth(l, ctx->a).witness;
  // y, z preferably in T_A, which is where a counterexample would live.
  auto y = sample(1), z = sample(1);
  if (!y) y = rng.vector(f, n);
  for (int t = 0; t < 40 && (!z || ctx->a.contains(sub(*y, *z))); ++t) z = sample(1);
  if (!z || ctx->a.contains(sub(*y, *z))) {
    z = rng.vector(f, n);
    if (ctx->a.contains(sub(*y, *z))) return skip();
  }
  const std::vector<Vector> six{*y, *z, add(*y, *z), add(*x, *y), add(*x, *z), add(*x, add(*y, *z))};
  for (const auto& e : six)
    if (b_a(e) != 1) return pass();
  return fail("all six elements lie in T_A for x = " + to_string(*x) + ", y = " + to_string(*y) + ", z = " + to_string(*z));
}

Verdict check_ideal_dimension(const Instance& in, Rng&) {
  auto ctx = breadth_two_with_ideal(in.algebra);
  if (!ctx || ctx->relative != 2) return skip();
  const auto al = bracket_subspaces(in.algebra, ctx->a, Subspace::full(in.algebra.field(), in.algebra.dim()));
  if (al.dim() != 2) return fail("dim[A,L] = " + str(al.dim()));
  return pass();
}

// Every x with b_A(x) = 2 satisfies [x, L] in [A, L]; exact over GF(p) by
// enumeration in residues.
std::optional<bool> images_inside(const LieAlgebra& l, const Subspace& a, const Subspace& al) {
  if (!l.field().is_prime()) return std::nullopt;
  const residue::Table t = residue::table(l);
  const std::size_t n = t.n;
  std::uint64_t total;
  try {
    total = residue::space_size(t.p, n, kOracleCap);
  } catch (const Error&) {
    return std::nullopt;
  }
  std::vector<std::vector<std::uint64_t>> abasis, albasis;
  for (const auto& v : a.basis()) abasis.push_back(residue::to_residues(v));
  for (const auto& v : al.basis()) albasis.push_back(residue::to_residues(v));
  std::vector<std::uint64_t> x(n, 0), ad, m;
  for (std::uint64_t c = 0; c < total; ++c, residue::increment(x, t.p)) {
    t.ad(x, ad);
    // rows: ad_x a_j for the ideal basis
    m.assign(abasis.size() * n, 0);
    for (std::size_t j = 0; j < abasis.size(); ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < n; ++i) s = (s + ad[k * n + i] * abasis[j][i]) % t.p;
        m[j * n + k] = s;
      }
    if (residue::rank(m, abasis.size(), n, t.p) != 2) continue;
    // [A,L] basis rows followed by the columns of ad_x.
    m.clear();
    for (const auto& r : albasis) m.insert(m.end(), r.begin(), r.end());
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m.push_back(ad[k * n + j]);
    if (residue::rank(m, albasis.size() + n, n, t.p) != albasis.size()) return false;
  }
  return true;
}

Verdict check_derived_equals(const Instance& in, Rng&) {
  const LieAlgebra& l = in.algebra;
  auto ctx = breadth_two_with_ideal(l);
  if (!ctx || ctx->relative != 2) return skip();
  const Subspace all = Subspace::full(l.field(), l.dim());
  const Subspace al = bracket_subspaces(l, ctx->a, all);
  auto inside = images_inside(l, ctx->a, al);
  if (!inside || !*inside) return skip();
  const Subspace d = derived_algebra(l);
  if (!(d == al)) return fail("[L,L] != [A,L]");
  if (d.dim() != 2) return fail("dim[L,L] = " + str(d.dim()));
  return pass();
}

Verdict check_relative_one(const Instance& in, Rng&) {
  const LieAlgebra& l = in.algebra;
  auto ctx = breadth_two_with_ideal(l);
  if (!ctx || ctx->relative != 1) return skip();
  const auto p = invariant_profile(l);
  const Subspace al = bracket_subspaces(l, ctx->a, Subspace::full(l.field(), l.dim()));
  bool first = false;
  if (al.dim() == 1) first = algebra_breadth(quotient(l, al).algebra).value < 2;
  const bool second = ctx->a.dim() - p.dim_center == 1 && p.dim - p.dim_center <= 3;
  if (!first && !second)
    return fail("dim[A,L] = " + str(al.dim()) + ", dim(A/Z) = " + str(ctx->a.dim() - p.dim_center) +
                ", dim(L/Z) = " + str(p.dim - p.dim_center));
  return pass();
}

Verdict check_derived_three(const Instance& in, Rng&) {
  const LieAlgebra& l = in.algebra;
  const auto p = invariant_profile(l);
  if (!p.nilpotent || p.dim_derived != 3) return skip();
  auto ctx = breadth_two_with_ideal(l);
  if (!ctx) return skip();
  if (ctx->a.dim() - p.dim_center != 1) return fail("dim(A/Z) = " + str(ctx->a.dim() - p.dim_center));
  return pass();
}

Draw derived_three_draw() {
  return [](FieldSpec f, std::size_t max_dim, Rng& rng) {
    switch (rng.below(3)) {
      case 0: {
        CanonicalLabel label = CanonicalLabel::simple(rng.below(2) ? K::M5 : K::M6);
        if (label.dimension() < max_dim) label.m = rng.below(max_dim - label.dimension() + 1);
        return single(scrambled_label(label, f, rng));
      }
      case 1: return single(scramble(random_class2(f, 3, 3, rng), rng));
      default: {
        LieAlgebra base = random_class2(f, 3, 1, rng);
        return single(scramble(random_central_extension(base, std::min<std::size_t>(2, max_dim - 4), rng), rng));
      }
    }
  };
}

// ---- section 4 ----

Verdict classified_as(const LieAlgebra& l, const std::vector<CanonicalLabel>& allowed) {
  const ClassificationReport r = classify(l);
  bool ok = false;
  for (const auto& a : allowed)
    if (r.label.kind == a.kind && r.label.m == a.m && (a.kind != K::QFamily || r.label.n == a.n)) ok = true;
  if (!ok) return fail("classified as " + r.label.to_string());
  if (!verify_witness(l, r)) return fail("witness for " + r.label.to_string() + " does not verify");
  return pass();
}

struct Stratum {
  bool nilpotent = false;
  bool pure = false;
  std::size_t dim = 0, dz = 0, dd = 0, b = 0;
};

Stratum stratum(const LieAlgebra& l) {
  const auto p = invariant_profile(l);
  Stratum s{p.nilpotent, p.is_pure, p.dim, p.dim_center, p.dim_derived, 0};
  if (p.nilpotent) s.b = algebra_breadth(l).value;
  return s;
}

Verdict check_dim_four(const Instance& in, Rng&) {
  const Stratum s = stratum(in.algebra);
  if (!s.nilpotent || s.dim != 4 || s.b != 2) return skip();
  return classified_as(in.algebra, {CanonicalLabel::simple(K::N4)});
}

Verdict check_reducible(const Instance& in, Rng&) {
  const Stratum s = stratum(in.algebra);
  if (!s.nilpotent || !s.pure || s.b != 2) return skip();
  if (s.dim % 2 != 0) return fail("pure decomposable breadth-two algebra of odd dimension");
  for (const auto& part : in.parts) {
    const auto p = invariant_profile(part);
    if (p.dim_derived != 1 || p.dim_center != 1)
      return fail("summand with dim[L,L] = " + str(p.dim_derived) + ", dim Z = " + str(p.dim_center) + " is not Heisenberg");
  }
  return pass();
}

Draw reducible_draw() {
  return [](FieldSpec f, std::size_t max_dim, Rng& rng) {
    auto piece = [&](std::size_t cap) {
      if (rng.below(2) == 0) return random_class2(f, 2 + rng.below(std::max<std::size_t>(1, cap - 2)), 1, rng);
      return random_corpus_algebra(f, cap, rng);
    };
    const std::size_t cap = std::max<std::size_t>(3, std::min<std::size_t>(5, max_dim));
    LieAlgebra a = piece(cap), b = piece(cap);
    return Instance{scramble(validate_algebra(direct_sum(a, b)), rng), {a, b}};
  };
}

Verdict check_derived_three_class(const Instance& in, Rng&) {
  const Stratum s = stratum(in.algebra);
  if (!s.nilpotent || !s.pure || s.b != 2 || s.dd != 3 || s.dim - s.dz != 3) return skip();
  return classified_as(in.algebra, {CanonicalLabel::simple(K::M5), CanonicalLabel::simple(K::M6)});
}

Verdict check_one_dim_center(const Instance& in, Rng&) {
  const Stratum s = stratum(in.algebra);
  if (!s.nilpotent || !s.pure || s.b != 2 || s.dd != 2 || s.dz != 1 || s.dim < 5) return skip();
  return classified_as(in.algebra, {CanonicalLabel::qfamily(s.dim - 4)});
}

Draw one_dim_center_draw() {
  return [](FieldSpec f, std::size_t max_dim, Rng& rng) {
    if (rng.below(2) == 0 && max_dim >= 5)
      return single(scrambled_label(CanonicalLabel::qfamily(1 + rng.below(max_dim - 4)), f, rng));
    LieAlgebra base = random_class2(f, 2 + rng.below(std::min<std::size_t>(3, max_dim - 3)), 1, rng);
    return single(scramble(random_central_extension(base, 1, rng), rng));
  };
}

Verdict check_five_dim(const Instance& in, Rng&) {
  const Stratum s = stratum(in.algebra);
  if (!s.nilpotent || !s.pure || s.b != 2 || s.dim != 5 || s.dz != 2 || s.dd != 2) return skip();
  return classified_as(in.algebra, {CanonicalLabel::simple(K::P5)});
}

Draw five_dim_draw() {
  return [](FieldSpec f, std::size_t, Rng& rng) {
    if (rng.below(3) == 0) return single(scrambled_label(CanonicalLabel::simple(K::P5), f, rng));
    return single(scramble(random_class2(f, 3, 2, rng), rng));
  };
}

Verdict check_six_dim(const Instance& in, Rng&) {
  const LieAlgebra& l = in.algebra;
  const Stratum s = stratum(l);
  if (!s.nilpotent || !s.pure || s.b != 2 || s.dim != 6 || s.dz != 2 || s.dd != 2) return skip();
  const ClassificationReport r = classify(l);
  if (r.label.kind != K::HH && r.label.kind != K::LAlpha) return fail("classified as " + r.label.to_string());
  if (!verify_witness(l, r)) return fail("witness for " + r.label.to_string() + " does not verify");
  // Root count of the Pfaffian pencil: 2 for HH, 1 for L_0, 0 for other L_alpha.
  const std::string roots = pencil_invariant(l).roots_string();
  const std::string expected =
      r.label.kind == K::HH ? "2" : (r.label.alpha && r.label.alpha->is_zero() ? "1" : "0");
  if (roots != expected) return fail(r.label.to_string() + " with pencil roots " + roots);
  return pass();
}

Draw six_dim_draw() {
  return [](FieldSpec f, std::size_t, Rng& rng) {
    switch (rng.below(3)) {
      case 0: return single(scrambled_label(CanonicalLabel::simple(K::HH), f, rng));
      case 1: return single(scrambled_label(CanonicalLabel::lalpha(rng.scalar(f)), f, rng));
      default: return single(scramble(random_class2(f, 4, 2, rng), rng));
    }
  };
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"P2.1", corpus(), check_lower_bound},
      {"P2.2", direct_sum_pair(), check_additivity},
      {"P2.3", corpus(), check_upper_bound},
      {"T2.4", corpus(), check_breadth_one, true},
      {"T2.5", breadth_one_draw(), check_heisenberg_form},
      {"T3.1", corpus(), check_breadth_two, true},
      {"L3.2", breadth_two(), check_six_elements},
      {"L3.3", breadth_two(), check_ideal_dimension},
      {"P3.4", breadth_two(), check_derived_equals},
      {"P3.5", breadth_two(), check_relative_one},
      {"C3.6", derived_three_draw(), check_derived_three},
      {"T4.1", [](FieldSpec f, std::size_t, Rng& rng) { return single(random_corpus_algebra(f, 4, rng)); },
       check_dim_four},
      {"P4.3", reducible_draw(), check_reducible},
      {"T4.4", derived_three_draw(), check_derived_three_class},
      {"T4.5", one_dim_center_draw(), check_one_dim_center},
      {"T4.6", five_dim_draw(), check_five_dim},
      {"T4.7", six_dim_draw(), check_six_dim},
  };
  return all;
}

const std::string kAdjudicate = "C4.8-adjudicate";

const Suite* find_suite(const std::string& id) {
  for (const auto& s : suites())
    if (s.id == id) return &s;
  return nullptr;
}

TrialRecord evaluate(const Suite& s, const Instance& in, Rng& rng) {
  Verdict v;
  try {
    v = s.check(in, rng);
  } catch (const Error& e) {
    v = fail(std::string("error ") + errc_name(e.code()) + ": " + e.what());
  }
  return {v.outcome, v.message, v.outcome == Outcome::Fail ? serialize_algebra(in.algebra) : std::string()};
}

TrialRecord run_random_trial(const Suite& s, FieldSpec field, std::uint64_t seed, std::size_t max_dim) {
  Rng rng(seed);
  for (int k = 0; k < kFilterBudget; ++k) {
    TrialRecord r = evaluate(s, s.draw(field, max_dim, rng), rng);
    if (r.outcome != Outcome::Skipped) return r;
  }
  return {Outcome::Skipped, "no hypothesis-satisfying instance within the filter budget", {}};
}

void record(VerificationReport& report, const TrialRecord& r, std::size_t trial, FieldSpec f, std::uint64_t seed,
            bool exhaustive) {
  if (r.outcome == Outcome::Skipped) {
    ++report.skipped;
    return;
  }
  ++report.trials;
  if (r.outcome == Outcome::Pass) {
    ++report.passes;
    return;
  }
  report.failures.push_back({trial, f, seed, exhaustive, r.message, r.document});
}

void run_exhaustive(const Suite& s, VerificationReport& report) {
  const FieldSpec f = FieldSpec::prime(3);
  std::size_t index = 0;
  Rng rng(report.seed);
  for (std::size_t dv = 1; dv <= 3; ++dv)
    for (std::size_t dz = 1; dz <= 2; ++dz)
      enumerate_class2(dv, dz, f, [&](const LieAlgebra& l) {
        record(report, evaluate(s, single(l), rng), index, f, index, true);
        ++index;
      });
}

// ---- L_alpha adjudication ----

void adjudicate(const VerifyOptions& options, VerificationReport& report) {
  std::size_t trial = 0;
  std::size_t confirm = 0, contradict = 0;
  for (std::size_t fi = 0; fi < options.fields.size(); ++fi) {
    const FieldSpec f = options.fields[fi];
    if (!f.is_prime()) {
      report.details.push_back(f.to_string() + ": skipped, adjudication runs over finite fields only");
      continue;
    }
    const LieAlgebra l0 = catalog_make(CanonicalLabel::lalpha(Scalar::zero(f)), f);
    const LieAlgebra hh = catalog_make(CanonicalLabel::simple(K::HH), f);
    const std::string l0_label = classify(l0).label.to_string(), hh_label = classify(hh).label.to_string();
    for (std::uint32_t a = 1; a < f.characteristic(); ++a) {
      const Scalar alpha(f, static_cast<long>(a));
      const LieAlgebra la = catalog_make(CanonicalLabel::lalpha(alpha), f);
      const ClassificationReport cls = classify(la);
      const bool witness_ok = verify_witness(la, cls);
      const std::string label = cls.label.to_string();
      std::ostringstream row;
      row << f.to_string() << " alpha=" << a << " (-alpha " << (is_nonzero_square(-alpha) ? "square" : "nonsquare")
          << "): classify " << label << (witness_ok ? " [witness ok]" : " [witness FAILED]") << "; pencil roots L_alpha "
          << pencil_invariant(la).roots_string() << ", L_0 " << pencil_invariant(l0).roots_string() << ", HH "
          << pencil_invariant(hh).roots_string();
      struct Target {
        const char* name;
        const LieAlgebra* algebra;
        const std::string* label;
      };
      bool iso_l0 = false;
      for (const Target& t : {Target{"L_0", &l0, &l0_label}, Target{"HH", &hh, &hh_label}}) {
        IsoOptions io;
        io.seed = derive_seed(options.seed, fi * 1000 + a * 2 + (t.algebra == &hh));
        const IsoOutcome iso = oracle_isomorphism(la, *t.algebra, io);
        row << "; iso(L_alpha, " << t.name << ") = " << iso.verdict_name() << " [" << iso.evidence << "]";
        std::string problem;
        if (!witness_ok) problem = "classification witness does not verify";
        if (iso.verdict == IsoOutcome::Verdict::No && iso.evidence.empty()) problem = "No without a separating invariant";
        if (iso.verdict == IsoOutcome::Verdict::Yes &&
            (!iso.witness || !(change_basis(*t.algebra, *iso.witness) == la)))
          problem = "Yes without a verified witness";
        if (iso.verdict == IsoOutcome::Verdict::Yes && label != *t.label)
          problem = "isomorphic to " + std::string(t.name) + " but classified as " + label;
        if (iso.verdict == IsoOutcome::Verdict::No && label == *t.label)
          problem = "not isomorphic to " + std::string(t.name) + " but classified as " + label;
        if (t.algebra == &l0) iso_l0 = iso.verdict == IsoOutcome::Verdict::Yes;
        TrialRecord r{problem.empty() ? Outcome::Pass : Outcome::Fail, problem,
                      problem.empty() ? std::string() : serialize_algebra(la)};
        record(report, r, trial, f, io.seed, false);
        ++trial;
      }
      // The claim under test: L_alpha = L_0 whenever -alpha is a square.
      if (is_nonzero_square(-alpha)) (iso_l0 ? confirm : contradict) += 1;
      report.details.push_back(row.str());
    }
  }
  std::ostringstream summary;
  summary << "claim check (-alpha a nonzero square => L_alpha = L_0): confirmed " << confirm << ", contradicted "
          << contradict;
  report.details.push_back(summary.str());
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& s : suites()) v.push_back(s.id);
    v.push_back(kAdjudicate);
    return v;
  }();
  return ids;
}

VerificationReport verify_theorems(const VerifyOptions& options) {
  const Suite* suite = find_suite(options.suite);
  if (!suite && options.suite != kAdjudicate) throw Error(Errc::UnknownSuite, "unknown suite '" + options.suite + "'");
  if (options.max_dim < 6) throw Error(Errc::BadParameters, "suites need max_dim >= 6");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = options.suite;
  report.seed = options.seed;
  report.fields = options.fields;
  if (!suite) {
    adjudicate(options, report);
  } else {
    for (std::size_t fi = 0; fi < options.fields.size(); ++fi) {
      const FieldSpec f = options.fields[fi];
      const std::uint64_t field_seed = derive_seed(options.seed, fi);
      for (std::size_t t = 0; t < options.trials; ++t) {
        const std::uint64_t seed = derive_seed(field_seed, t);
        record(report, run_random_trial(*suite, f, seed, options.max_dim), t, f, seed, false);
      }
    }
    bool has_gf3 = false;
    for (const auto& f : options.fields) has_gf3 = has_gf3 || f == FieldSpec::prime(3);
    if (suite->exhaustive && options.exhaustive && has_gf3) run_exhaustive(*suite, report);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

TrialRecord replay_trial(const std::string& suite, FieldSpec field, std::uint64_t trial_seed, std::size_t max_dim) {
  const Suite* s = find_suite(suite);
  if (!s) throw Error(Errc::UnknownSuite, "no replayable suite '" + suite + "'");
  return run_random_trial(*s, field, trial_seed, max_dim);
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << "  seed " << seed << "  fields ";
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i].to_string();
  os << "\n";
  for (const auto& d : details) os << "  " << d << "\n";
  os << "trials " << trials << "  passes " << passes << "  failures " << failures.size() << "  skipped " << skipped
     << "  (" << seconds << " s)\n";
  for (const auto& f : failures) {
    os << "FAIL trial " << f.trial << " " << f.field.to_string() << (f.exhaustive ? " exhaustive index " : " seed ")
       << f.seed << ": " << f.message << "\n"
       << f.document;
  }
  os << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  using Json = nlohmann::ordered_json;
  Json fs = Json::array();
  for (const auto& f : fields) fs.push_back(f.to_string());
  Json fails = Json::array();
  for (const auto& f : failures) {
    Json doc = f.document.empty() ? Json() : Json::parse(f.document);
    fails.push_back(Json{{"document", doc},
                         {"exhaustive", f.exhaustive},
                         {"field", f.field.to_string()},
                         {"message", f.message},
                         {"seed", f.seed},
                         {"trial", f.trial}});
  }
  Json j{{"details", details}, {"failures", fails},   {"fields", fs},        {"passed", passed()},
         {"passes", passes},   {"seed", seed},        {"skipped", skipped},  {"suite", suite},
         {"trials", trials}};
  return j.dump(2) + "\n";
}

}  // namespace nilbreadth::harness
