#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "nilbreadth/error.hpp"

namespace nilbreadth {

enum class FieldKind { Rationals, PrimeField };

// Either Q or GF(p) with p an odd prime. Characteristic 2 is rejected on
// construction: every normal form in this library divides by 2 somewhere.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "q" or "gf:<p>" (also "gf<p>", "GF(p)").
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == FieldKind::PrimeField; }
  bool is_rational() const noexcept { return kind_ == FieldKind::Rationals; }
  /// p for GF(p), 0 for Q.
  std::uint32_t characteristic() const noexcept { return p_; }

  /// "q" or "gf:p"
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

// Exact field element. Rationals are kept reduced with a positive
// denominator; residues are kept in [0, p).
class Scalar {
 public:
  explicit Scalar(FieldSpec field);  // zero
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpq_class& value);
  static Scalar zero(FieldSpec field) { return Scalar(field); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1L); }
  /// Parses the canonical string form; non-canonical input ("4/2", "-1" in
  /// GF(p)) is accepted and normalized.
  static Scalar parse(FieldSpec field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue in [0, p); GF(p) only.
  std::uint32_t residue() const;
  /// Exact rational value; Q only.
  const mpq_class& rational() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  Scalar inverse() const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  /// Canonical serialization: "a/b" or "a" over Q, "k" over GF(p).
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& rhs) const;
  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// s with s*s == a when one exists. Over GF(p) the smaller residue of the
/// pair is returned, over Q the nonnegative root.
std::optional<Scalar> sqrt_in_field(const Scalar& a);

/// True when a is a nonzero square of the field.
bool is_nonzero_square(const Scalar& a);

}  // namespace nilbreadth
