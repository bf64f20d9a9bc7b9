// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nilbreadth/harness.hpp"

using namespace nilbreadth;
using namespace nilbreadth::harness;
using K = CanonicalLabel::Kind;

namespace {

const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec F7 = FieldSpec::prime(7);
const FieldSpec Q = FieldSpec::rationals();
constexpr std::uint64_t kSeed = 20240601;

struct Result {
  bool pass = false;
  std::string detail;
};

bool all_pass = true;

void criterion(int id, const std::string& title, const std::function<Result()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  all_pass = all_pass && r.pass;
  std::cout << "criterion " << id << " " << (r.pass ? "PASS" : "FAIL") << ": " << title << " -- " << r.detail << " ("
            << std::fixed << std::setprecision(1) << s << " s)" << std::endl;
}

VerificationReport run(const std::string& suite, std::size_t trials, std::vector<FieldSpec> fields, bool exhaustive = true) {
  VerifyOptions o;
  o.suite = suite;
  o.trials = trials;
  o.seed = kSeed;
  o.fields = std::move(fields);
  o.exhaustive = exhaustive;
  return verify_theorems(o);
}

std::string summary(const VerificationReport& r) {
  std::ostringstream os;
  os << r.suite << " " << r.passes << "/" << r.trials;
  if (r.skipped) os << " (" << r.skipped << " filter misses)";
  if (!r.failures.empty()) os << ", first failure: " << r.failures.front().message;
  return os.str();
}

std::vector<CanonicalLabel> catalog_labels(FieldSpec f) {
  std::vector<CanonicalLabel> out;
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t m = 0; m <= 2; ++m) out.push_back(CanonicalLabel::breadth1(k, m));
  for (K kind : {K::N4, K::M5, K::M6, K::P5, K::HH}) out.push_back(CanonicalLabel::simple(kind));
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(CanonicalLabel::qfamily(n));
  if (f.is_prime()) {
    for (std::uint32_t a = 0; a < f.characteristic(); ++a) out.push_back(CanonicalLabel::lalpha(Scalar(f, static_cast<long>(a))));
  } else {
    for (const char* a : {"0", "1", "-1", "2", "-2", "3", "1/2", "-4/9"}) out.push_back(CanonicalLabel::lalpha(Scalar::parse(f, a)));
  }
  return out;
}

// All subspaces of GF(p)^n, by closing {0} under adjoining single vectors.
std::vector<Subspace> all_subspaces(FieldSpec f, std::size_t n) {
  std::vector<Vector> vectors;
  for_each_field_element(f, n, [&](const Vector& v) {
    if (!is_zero(v)) vectors.push_back(v);
    return false;
  });
  std::vector<Subspace> out{Subspace::zero(f, n)};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& v : vectors) {
      if (out[i].contains(v)) continue;
      Subspace s = out[i].sum(Subspace::span(f, n, {v}));
      bool seen = false;
      for (const auto& t : out) seen = seen || t == s;
      if (!seen) out.push_back(s);
    }
  return out;
}

std::optional<std::string> ideal_contract(const LieAlgebra& l) {
  const Subspace a = maximal_abelian_ideal(l);
  if (!is_abelian_subspace(l, a)) return "not abelian";
  if (!is_ideal(l, a)) return "not an ideal";
  if (!(centralizer(l, a) == a)) return "C_L(A) != A";
  return std::nullopt;
}

bool integral(const LieAlgebra& l, std::uint32_t p) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      for (const auto& c : l.structure(i, j)) {
        if (c.rational().get_den() != 1) return false;
        if (!c.is_zero() && c.rational().get_num() % p == 0) return false;
      }
  return true;
}

LieAlgebra reduce_mod(const LieAlgebra& l, FieldSpec f) {
  LieAlgebra out(f, l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Vector v = zero_vector(f, l.dim());
      for (std::size_t k = 0; k < l.dim(); ++k) {
        const mpz_class num = l.structure(i, j)[k].rational().get_num();
        v[k] = Scalar(f, mpq_class(num));
      }
      out.set_bracket(i, j, v);
    }
  return validate_algebra(out);
}

}  // namespace

int main() {
  std::cout << "acceptance run, seed " << kSeed << std::endl;

  const auto timed = [](double limit, const std::vector<VerificationReport>& reports, double seconds,
                        std::size_t min_random) {
    Result r{true, {}};
    std::size_t trials = 0;
    for (const auto& rep : reports) {
      r.pass = r.pass && rep.passed();
      trials += rep.trials;
      r.detail += summary(rep) + "; ";
    }
    r.pass = r.pass && seconds < limit && trials >= min_random;
    r.detail += "limit " + std::to_string(static_cast<int>(limit)) + " s";
    return r;
  };

  for (const auto& [id, suite, title] :
       {std::tuple{1, "T2.4", "breadth one iff dim[L,L] = 1"},
        std::tuple{2, "T3.1", "breadth two iff dim[L,L] = 2 or dim[L,L] = dim(L/Z) = 3"}}) {
    criterion(id, title, [&, suite = suite] {
      const auto start = std::chrono::steady_clock::now();
      auto rep = run(suite, 250, {F3, F5});
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      // 770 exhaustive GF(3) class-2 algebras plus 500 random draws.
      return timed(120, {rep}, s, 770 + 500);
    });
  }

  criterion(3, "bounds and additivity", [] {
    Result r{true, {}};
    for (const auto& [suite, trials] : {std::pair{"P2.1", 250}, std::pair{"P2.3", 250}, std::pair{"P2.2", 100}}) {
      auto rep = run(suite, trials, {F3, F5});
      r.pass = r.pass && rep.passed() && rep.trials >= 200;
      r.detail += summary(rep) + "; ";
    }
    return r;
  });

  criterion(4, "classification round trip, 100 scrambles per label and field", [] {
    const auto start = std::chrono::steady_clock::now();
    std::size_t total = 0, ok = 0;
    std::string first;
    for (FieldSpec f : {F3, F5, F7, Q}) {
      Rng rng(derive_seed(kSeed, f.characteristic()));
      for (const auto& label : catalog_labels(f)) {
        const LieAlgebra base = catalog_make(label, f);
        const CanonicalLabel want = expected_classification(label);
        for (int t = 0; t < 100; ++t) {
          const LieAlgebra l = scramble(base, rng);
          const ClassificationReport rep = classify(l);
          ++total;
          if (rep.label == want && verify_witness(l, rep)) {
            ++ok;
          } else if (first.empty()) {
            first = f.to_string() + " " + label.to_string() + " -> " + rep.label.to_string();
          }
        }
      }
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string d = std::to_string(ok) + "/" + std::to_string(total) + " scrambles classified with verified witness";
    if (!first.empty()) d += ", first mismatch " + first;
    return Result{ok == total && s < 300, d + "; limit 300 s"};
  });

  criterion(5, "maximal abelian ideal contract", [] {
    std::size_t checked = 0, exhaustive = 0;
    for (FieldSpec f : {F3, F5, Q}) {
      Rng rng(derive_seed(kSeed, 500 + f.characteristic()));
      for (int i = 0; i < 200; ++i) {
        const LieAlgebra l = random_corpus_algebra(f, 6, rng);
        if (auto bad = ideal_contract(l)) return Result{false, *bad + " on\n" + serialize_algebra(l)};
        ++checked;
      }
    }
    // dim <= 4 over GF(3): no abelian ideal strictly contains the output.
    std::vector<LieAlgebra> small;
    for (auto [v, z] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}})
      enumerate_class2(v, z, F3, [&](const LieAlgebra& l) { small.push_back(l); });
    Rng rng(derive_seed(kSeed, 555));
    for (int i = 0; i < 150; ++i) small.push_back(random_corpus_algebra(F3, 4, rng));
    std::vector<std::vector<Subspace>> subspaces(5);
    for (std::size_t n = 1; n <= 4; ++n) subspaces[n] = all_subspaces(F3, n);
    for (const auto& l : small) {
      if (auto bad = ideal_contract(l)) return Result{false, *bad + " on\n" + serialize_algebra(l)};
      const Subspace a = maximal_abelian_ideal(l);
      for (const auto& s : subspaces[l.dim()])
        if (s.dim() > a.dim() && s.contains(a) && is_abelian_subspace(l, s) && is_ideal(l, s))
          return Result{false, "larger abelian ideal exists for\n" + serialize_algebra(l)};
      ++exhaustive;
    }
    return Result{true, std::to_string(checked) + " random algebras, " + std::to_string(exhaustive) +
                            " GF(3) algebras of dim <= 4 against " + std::to_string(subspaces[4].size()) +
                            " subspaces of GF(3)^4"};
  });

  criterion(6, "maximal abelian ideal structure on hypothesis-satisfying instances", [] {
    Result r{true, {}};
    for (const char* suite : {"L3.2", "L3.3", "P3.4", "P3.5", "C3.6"}) {
      auto rep = run(suite, 125, {F3, F5});
      r.pass = r.pass && rep.passed() && rep.trials >= 200;
      r.detail += summary(rep) + "; ";
    }
    return r;
  });

  criterion(7, "generic rank over Q equals exhaustive breadth over GF(5), GF(7)", [] {
    std::size_t compared = 0, skipped = 0;
    for (const auto& label : catalog_labels(Q)) {
      const LieAlgebra lq = catalog_make(label, Q);
      const std::size_t bq = algebra_breadth(lq).value;
      for (FieldSpec f : {F5, F7}) {
        if (!integral(lq, f.characteristic())) {
          ++skipped;
          continue;
        }
        const std::size_t bp = algebra_breadth(reduce_mod(lq, f)).value;
        if (bp != bq) return Result{false, label.to_string() + ": Q " + std::to_string(bq) + " vs " + f.to_string() + " " + std::to_string(bp)};
        ++compared;
      }
    }
    return Result{true, std::to_string(compared) + " comparisons, " + std::to_string(skipped) + " skipped (non-integral or divisible)"};
  });

  criterion(8, "L_alpha adjudication over GF(3) and GF(7)", [] {
    auto first = run("C4.8-adjudicate", 0, {F3, F7}), second = run("C4.8-adjudicate", 0, {F3, F7});
    const bool deterministic = first.to_json() == second.to_json();
    std::ofstream("lalpha_report.txt") << first.to_text();
    std::size_t unknown = 0;
    for (const auto& d : first.details) unknown += d.find("= Unknown") != std::string::npos;
    std::string detail = std::to_string(first.passes) + "/" + std::to_string(first.trials) + " comparisons consistent, " +
                         (deterministic ? "deterministic" : "NOT deterministic") + ", rows with Unknown: " +
                         std::to_string(unknown) + "; " + first.details.back();
    for (const auto& d : first.details) std::cout << "    " << d << "\n";
    return Result{first.passed() && deterministic && first.trials == 2 * (2 + 6), detail};
  });

  criterion(9, "oracle breadth equals algebra_breadth", [] {
    std::size_t n = 0;
    auto check = [&](const LieAlgebra& l) -> std::optional<std::string> {
      ++n;
      if (oracle_breadth(l) != algebra_breadth(l).value) return serialize_algebra(l);
      return std::nullopt;
    };
    for (std::size_t v = 1; v <= 3; ++v)
      for (std::size_t z = 1; z <= 2; ++z) {
        std::optional<std::string> bad;
        enumerate_class2(v, z, F3, [&](const LieAlgebra& l) {
          if (!bad) bad = check(l);
        });
        if (bad) return Result{false, "disagreement on\n" + *bad};
      }
    for (FieldSpec f : {F3, F5}) {
      Rng rng(derive_seed(kSeed, 900 + f.characteristic()));
      for (int i = 0; i < 500; ++i)
        if (auto bad = check(random_corpus_algebra(f, 6, rng))) return Result{false, "disagreement on\n" + *bad};
      for (const auto& label : catalog_labels(f)) {
        const LieAlgebra l = scramble(catalog_make(label, f), rng);
        if (std::pow(f.characteristic(), l.dim()) > 1e6) continue;
        if (auto bad = check(l)) return Result{false, "disagreement on\n" + *bad};
      }
    }
    return Result{true, std::to_string(n) + " algebras (plus the oracle checks inside criteria 1-3)"};
  });

  std::cout << (all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all_pass ? 0 : 1;
}
