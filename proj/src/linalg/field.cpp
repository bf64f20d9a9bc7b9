#include "nilbreadth/field.hpp"

#include <cctype>
#include <sstream>

namespace nilbreadth {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidField: return "InvalidField";
    case Errc::JacobiViolation: return "JacobiViolation";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case Errc::WrongStratum: return "WrongStratum";
    case Errc::NotAlternating: return "NotAlternating";
    case Errc::BadParameters: return "BadParameters";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p == 2) throw Error(Errc::InvalidField, "characteristic 2 is not supported");
  if (!is_prime_number(p)) throw Error(Errc::InvalidField, std::to_string(p) + " is not prime");
  return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(c)));
  if (t == "q" || t == "qq" || t == "rationals") return rationals();
  std::string digits;
  if (t.rfind("gf:", 0) == 0) {
    digits = t.substr(3);
  } else if (t.rfind("gf(", 0) == 0 && t.back() == ')') {
    digits = t.substr(3, t.size() - 4);
  } else if (t.rfind("gf", 0) == 0) {
    digits = t.substr(2);
  } else {
    throw Error(Errc::ParseError, "unknown field '" + std::string(text) + "'");
  }
  if (digits.empty() || digits.size() > 9 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw Error(Errc::ParseError, "bad prime in field '" + std::string(text) + "'");
  return prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string FieldSpec::to_string() const {
  if (is_rational()) return "q";
  return "gf:" + std::to_string(p_);
}

namespace {

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar::Scalar(FieldSpec field) : field_(field) {
  if (field.is_rational())
    value_ = mpq_class(0);
  else
    value_ = std::uint32_t{0};
}

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    long p = static_cast<long>(field.characteristic());
    long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
    return;
  }
  std::uint32_t p = field.characteristic();
  std::uint32_t den = reduce_mod(value.get_den(), p);
  if (den == 0) throw Error(Errc::DivisionByZero, "denominator divisible by p");
  std::uint64_t num = reduce_mod(value.get_num(), p);
  value_ = static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  std::string t(text);
  // Accept the unicode minus sign as well as '-'.
  const std::string minus = "\xE2\x88\x92";
  if (t.rfind(minus, 0) == 0) t = "-" + t.substr(minus.size());
  if (t.empty()) throw Error(Errc::ParseError, "empty scalar");
  auto slash = t.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    return s.find_first_not_of("0123456789", start) == std::string::npos;
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error(Errc::ParseError, "bad scalar '" + t + "'");
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + t + "'");
  try {
    return Scalar(field, mpq_class(n, d));
  } catch (const Error&) {
    throw Error(Errc::ParseError, "denominator not invertible in " + field.to_string() + ": '" + t + "'");
  }
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_prime()) throw Error(Errc::FieldMismatch, "residue() on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error(Errc::FieldMismatch, "rational() on a GF(p) scalar");
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_))
    throw Error(Errc::FieldMismatch, field_.to_string() + " vs " + rhs.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same_field(rhs);
  Scalar out(field_);
  if (field_.is_rational()) {
    out.value_ = mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(rhs.value_));
  } else {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(rhs.value_);
    out.value_ = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  require_same_field(rhs);
  Scalar out(field_);
  if (field_.is_rational()) {
    out.value_ = mpq_class(std::get<mpq_class>(value_) - std::get<mpq_class>(rhs.value_));
  } else {
    std::uint64_t p = field_.characteristic();
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + p - std::get<std::uint32_t>(rhs.value_);
    out.value_ = static_cast<std::uint32_t>(s % p);
  }
  return out;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same_field(rhs);
  Scalar out(field_);
  if (field_.is_rational()) {
    out.value_ = mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(rhs.value_));
  } else {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(rhs.value_);
    out.value_ = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  Scalar out(field_);
  if (field_.is_rational()) {
    out.value_ = mpq_class(1 / std::get<mpq_class>(value_));
  } else {
    std::uint32_t p = field_.characteristic();
    out.value_ = pow_mod(std::get<std::uint32_t>(value_), p - 2, p);
  }
  return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  require_same_field(rhs);
  return *this * rhs.inverse();
}

Scalar Scalar::operator-() const { return Scalar(field_) - *this; }

bool Scalar::operator==(const Scalar& rhs) const {
  return field_ == rhs.field_ && value_ == rhs.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::optional<Scalar> sqrt_in_field(const Scalar& a) {
  const FieldSpec& f = a.field();
  if (f.is_prime()) {
    std::uint64_t p = f.characteristic();
    std::uint64_t target = a.residue();
    for (std::uint64_t s = 0; s < p; ++s)
      if (s * s % p == target) return Scalar(f, static_cast<long>(s));
    return std::nullopt;
  }
  const mpq_class& q = a.rational();
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Scalar(f, mpq_class(rn, rd));
}

bool is_nonzero_square(const Scalar& a) { return !a.is_zero() && sqrt_in_field(a).has_value(); }

}  // namespace nilbreadth
