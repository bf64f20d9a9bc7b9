#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "nilbreadth/breadth.hpp"
#include "nilbreadth/classify.hpp"

namespace nilbreadth::harness {

// mt19937_64 seeded with the raw 64-bit seed. Every report records the seed,
// so a run is reproducible from (seed, parameters) alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}
  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform over GF(p); an integer in [-2, 2] over Q.
  Scalar scalar(FieldSpec field);
  Scalar nonzero_scalar(FieldSpec field);
  Vector vector(FieldSpec field, std::size_t n);
  /// Random invertible matrix by rejection.
  BasisChange invertible(FieldSpec field, std::size_t n);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Independent child seed for sub-run `index` (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

enum class GenerateMode { Class2, ScrambledCatalog, DirectSum, CentralExtension };
/// "class2", "scramble" (or "scrambled_catalog"), "sum" (or "direct_sum"),
/// "extension". Throws BadParameters.
GenerateMode parse_mode(std::string_view text);

struct GenerateParams {
  FieldSpec field = FieldSpec::prime(3);
  std::size_t dim_v = 3;  // class2, extension: V; sum: first summand
  std::size_t dim_z = 2;
  std::size_t dim_v2 = 2;  // sum: second summand
  std::size_t dim_z2 = 1;
  std::optional<CanonicalLabel> label;  // scrambled catalog
};

/// Validated nilpotent algebra. Class2 draws a random alternating map V x V
/// -> Z; ScrambledCatalog applies a random invertible matrix to the catalog
/// algebra; DirectSum adds two class-2 draws; CentralExtension extends a
/// class-2 draw by a random 2-cocycle with values in F^dim_z2.
/// Throws BadParameters.
LieAlgebra generate_random(GenerateMode mode, const GenerateParams& params, std::uint64_t seed);

LieAlgebra random_class2(FieldSpec field, std::size_t dim_v, std::size_t dim_z, Rng& rng);
/// base (+) F^dim_z with [x, y] = [x, y]_base + w(x, y) for a random cocycle w.
LieAlgebra random_central_extension(const LieAlgebra& base, std::size_t dim_z, Rng& rng);
LieAlgebra scramble(const LieAlgebra& algebra, Rng& rng);
/// Mixture of all modes with dim <= max_dim; used by the suites.
LieAlgebra random_corpus_algebra(FieldSpec field, std::size_t max_dim, Rng& rng);

/// Every class-2 algebra on V (+) Z over GF(p): each of the
/// dim_z * C(dim_v, 2) constants runs over GF(p), last constant fastest,
/// constants ordered by pair (i < j) and then by center index.
/// Throws SizeCapExceeded when the count exceeds `cap`.
void enumerate_class2(std::size_t dim_v, std::size_t dim_z, FieldSpec field,
                      const std::function<void(const LieAlgebra&)>& visit, std::uint64_t cap = 100'000);
std::uint64_t class2_count(std::size_t dim_v, std::size_t dim_z, FieldSpec field);

/// Brute-force b(L) over GF(p): rank of ad_x for every x, with its own
/// residue arithmetic. Throws SizeCapExceeded when p^n > cap, BadParameters
/// over Q.
std::size_t oracle_breadth(const LieAlgebra& algebra, std::uint64_t cap = 10'000'000);
/// histogram[r] = #{x in GF(p)^n : rank(ad_x) = r}.
std::vector<std::uint64_t> oracle_breadth_histogram(const LieAlgebra& algebra, std::uint64_t cap = 10'000'000);

struct IsoOptions {
  std::uint64_t seed = 1;
  std::size_t attempts = 4000;
  /// Exhaustive search over GL_n(p) when p^(n^2) is at most this.
  std::uint64_t exhaustive_limit = 20'000;
};

struct IsoOutcome {
  enum class Verdict { Yes, No, Unknown };
  Verdict verdict = Verdict::Unknown;
  /// Yes: change_basis(second, *witness) == first.
  std::optional<BasisChange> witness;
  /// No: the separating invariant; otherwise how the verdict was reached.
  std::string evidence;
  std::string verdict_name() const;
};

/// Throws FieldMismatch.
IsoOutcome oracle_isomorphism(const LieAlgebra& first, const LieAlgebra& second, const IsoOptions& options = {});

/// Canonical UTF-8 JSON document (sorted keys, 1-based pairs i < j, nonzero
/// coefficients only, trailing newline). Byte-deterministic.
std::string serialize_algebra(const LieAlgebra& algebra);
/// Throws ParseError; the result is not Jacobi-checked.
LieAlgebra parse_algebra(std::string_view text);

struct TrialFailure {
  std::size_t trial = 0;
  FieldSpec field = FieldSpec::rationals();
  /// Rng seed of the trial, or the enumeration index for exhaustive ones.
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::string message;
  std::string document;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<FieldSpec> fields;
  std::size_t trials = 0;  // hypothesis-satisfying instances checked
  std::size_t passes = 0;
  std::size_t skipped = 0;  // trials whose filter budget ran out
  std::vector<TrialFailure> failures;
  std::vector<std::string> details;  // free-form rows (adjudication)
  double seconds = 0;

  bool passed() const { return failures.empty() && trials > 0; }
  std::string to_text() const;
  std::string to_json() const;
};

struct VerifyOptions {
  std::string suite;
  std::size_t trials = 100;  // per field
  std::uint64_t seed = 1;
  std::vector<FieldSpec> fields{FieldSpec::prime(3), FieldSpec::prime(5)};
  /// Add the exhaustive GF(3) class-2 corpus to T2.4 and T3.1.
  bool exhaustive = true;
  std::size_t max_dim = 6;
};

const std::vector<std::string>& suite_ids();
/// Throws UnknownSuite.
VerificationReport verify_theorems(const VerifyOptions& options);

struct TrialRecord {
  enum class Outcome { Pass, Fail, Skipped };
  Outcome outcome = Outcome::Skipped;
  std::string message;
  std::string document;
};
/// Re-runs one random trial from its seed; failures reproduce exactly.
TrialRecord replay_trial(const std::string& suite, FieldSpec field, std::uint64_t trial_seed,
                         std::size_t max_dim = 6);

}  // namespace nilbreadth::harness
