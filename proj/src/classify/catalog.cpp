#include <cctype>
#include <charconv>
#include <sstream>

#include "nilbreadth/classify.hpp"

namespace nilbreadth {

CanonicalLabel CanonicalLabel::abelian(std::size_t d) {
  CanonicalLabel l;
  l.kind = Kind::Abelian;
  l.d = d;
  return l;
}

CanonicalLabel CanonicalLabel::breadth1(std::size_t k, std::size_t m) {
  CanonicalLabel l;
  l.kind = Kind::Breadth1;
  l.k = k;
  l.m = m;
  return l;
}

CanonicalLabel CanonicalLabel::simple(Kind kind, std::size_t m) {
  if (kind != Kind::N4 && kind != Kind::M5 && kind != Kind::M6 && kind != Kind::P5 && kind != Kind::HH)
    throw Error(Errc::BadParameters, "simple label kinds are N4, M5, M6, P5, HH");
  CanonicalLabel l;
  l.kind = kind;
  l.m = m;
  return l;
}

CanonicalLabel CanonicalLabel::qfamily(std::size_t n, std::size_t m) {
  CanonicalLabel l;
  l.kind = Kind::QFamily;
  l.n = n;
  l.m = m;
  return l;
}

CanonicalLabel CanonicalLabel::lalpha(const Scalar& alpha, std::size_t m) {
  CanonicalLabel l;
  l.kind = Kind::LAlpha;
  l.alpha = alpha;
  l.m = m;
  return l;
}

CanonicalLabel CanonicalLabel::unclassified(std::string reason) {
  CanonicalLabel l;
  l.kind = Kind::Unclassified;
  l.reason = std::move(reason);
  return l;
}

std::string CanonicalLabel::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Abelian: os << "A(" << d << ")"; return os.str();
    case Kind::Breadth1: os << "B1(k=" << k << ",m=" << m << ")"; return os.str();
    case Kind::Unclassified: return "UNCLASSIFIED(" + reason + ")";
    case Kind::N4: os << "N4"; break;
    case Kind::M5: os << "M5"; break;
    case Kind::M6: os << "M6"; break;
    case Kind::P5: os << "P5"; break;
    case Kind::HH: os << "HH"; break;
    case Kind::QFamily: os << "Q(n=" << n << ")"; break;
    case Kind::LAlpha: os << "L(alpha=" << (alpha ? alpha->to_string() : "?") << ")"; break;
  }
  os << "+A(" << m << ")";
  return os.str();
}

namespace {

class LabelParser {
 public:
  explicit LabelParser(std::string_view text) : text_(text) {}

  bool eat(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!eat(token)) fail("expected '" + std::string(token) + "'");
  }
  std::size_t number() {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  // Up to the matching close parenthesis.
  std::string_view until_close() {
    std::size_t depth = 0, start = pos_;
    for (; pos_ < text_.size(); ++pos_) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')') {
        if (depth == 0) return text_.substr(start, pos_ - start);
        --depth;
      }
    }
    fail("unbalanced parentheses");
    return {};
  }
  bool done() const { return pos_ == text_.size(); }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, "label '" + std::string(text_) + "': " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CanonicalLabel CanonicalLabel::parse(std::string_view text, FieldSpec field) {
  LabelParser p(text);
  CanonicalLabel l;
  if (p.eat("UNCLASSIFIED(")) {
    l = unclassified(std::string(p.until_close()));
    p.expect(")");
  } else if (p.eat("A(")) {
    l = abelian(p.number());
    p.expect(")");
  } else if (p.eat("B1(k=")) {
    std::size_t k = p.number();
    p.expect(",m=");
    std::size_t m = p.number();
    p.expect(")");
    l = breadth1(k, m);
  } else {
    if (p.eat("N4")) l = simple(Kind::N4);
    else if (p.eat("M5")) l = simple(Kind::M5);
    else if (p.eat("M6")) l = simple(Kind::M6);
    else if (p.eat("P5")) l = simple(Kind::P5);
    else if (p.eat("HH")) l = simple(Kind::HH);
    else if (p.eat("Q(n=")) {
      l = qfamily(p.number());
      p.expect(")");
    } else if (p.eat("L(alpha=")) {
      l = lalpha(Scalar::parse(field, p.until_close()));
      p.expect(")");
    } else {
      p.fail("unknown label kind");
    }
    if (p.eat("+A(")) {
      l.m = p.number();
      p.expect(")");
    }
  }
  if (!p.done()) p.fail("trailing characters");
  return l;
}

std::size_t CanonicalLabel::dimension() const {
  switch (kind) {
    case Kind::Abelian: return d;
    case Kind::Breadth1: return 2 * k + 1 + m;
    case Kind::N4: return 4 + m;
    case Kind::M5: return 5 + m;
    case Kind::M6: return 6 + m;
    case Kind::QFamily: return n + 4 + m;
    case Kind::P5: return 5 + m;
    case Kind::HH: return 6 + m;
    case Kind::LAlpha: return 6 + m;
    case Kind::Unclassified: return 0;
  }
  return 0;
}

bool CanonicalLabel::operator==(const CanonicalLabel& rhs) const {
  if (kind != rhs.kind) return false;
  switch (kind) {
    case Kind::Abelian: return d == rhs.d;
    case Kind::Breadth1: return k == rhs.k && m == rhs.m;
    case Kind::QFamily: return n == rhs.n && m == rhs.m;
    case Kind::LAlpha: return m == rhs.m && alpha.has_value() == rhs.alpha.has_value() && (!alpha || *alpha == *rhs.alpha);
    case Kind::Unclassified: return reason == rhs.reason;
    default: return m == rhs.m;
  }
}

namespace {

using Term = std::tuple<std::size_t, std::size_t, std::size_t>;  // 1-based [e_i, e_j] = e_k

LieAlgebra from_terms(FieldSpec field, std::size_t dim, const std::vector<Term>& terms) {
  LieAlgebra l(field, dim);
  for (auto [i, j, k] : terms) {
    Vector v = l.basis_bracket(i - 1, j - 1);
    v[k - 1] += Scalar::one(field);
    l.set_bracket(i - 1, j - 1, v);
  }
  return l;
}

LieAlgebra pure_part(const CanonicalLabel& label, FieldSpec field) {
  using K = CanonicalLabel::Kind;
  switch (label.kind) {
    case K::N4: return from_terms(field, 4, {{1, 2, 3}, {1, 3, 4}});
    case K::M5: return from_terms(field, 5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}});
    case K::M6: return from_terms(field, 6, {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}});
    case K::P5: return from_terms(field, 5, {{1, 2, 4}, {1, 3, 5}});
    case K::HH: return from_terms(field, 6, {{1, 2, 5}, {3, 4, 6}});
    case K::QFamily: {
      const std::size_t n = label.n;
      if (n == 0) throw Error(Errc::BadParameters, "Q(n) needs n >= 1");
      // x1 x2 x3 z z1..zn at 1..n+4; z_i sits at i + 4.
      std::vector<Term> t{{1, 2, 3}, {1, 3, 4}};
      if (n % 2 == 0) {
        for (std::size_t i = 1; i < n; i += 2) t.push_back({i + 4, i + 5, 4});
      } else {
        t.push_back({2, 5, 4});
        for (std::size_t i = 2; i < n; i += 2) t.push_back({i + 4, i + 5, 4});
      }
      return from_terms(field, n + 4, t);
    }
    case K::LAlpha: {
      if (!label.alpha) throw Error(Errc::BadParameters, "L(alpha) needs a parameter");
      if (!(label.alpha->field() == field)) throw Error(Errc::BadParameters, "alpha lives in another field");
      LieAlgebra l = from_terms(field, 6, {{1, 2, 5}, {2, 3, 6}, {3, 4, 5}});
      l.set_bracket(0, 3, scale(*label.alpha, unit_vector(field, 6, 5)));
      return l;
    }
    default: throw Error(Errc::BadParameters, "no pure catalog part");
  }
}

}  // namespace

LieAlgebra catalog_make(const CanonicalLabel& label, FieldSpec field) {
  using K = CanonicalLabel::Kind;
  switch (label.kind) {
    case K::Abelian: return abelian_algebra(field, label.d);
    case K::Unclassified: throw Error(Errc::BadParameters, "unclassified labels have no catalog algebra");
    case K::Breadth1: {
      if (label.k == 0) throw Error(Errc::BadParameters, "B1 needs k >= 1");
      const std::size_t z = 2 * label.k + 1;
      std::vector<Term> t;
      for (std::size_t i = 0; i < label.k; ++i) t.push_back({2 * i + 1, 2 * i + 2, z});
      return validate_algebra(direct_sum(from_terms(field, z, t), abelian_algebra(field, label.m)));
    }
    default: return validate_algebra(direct_sum(pure_part(label, field), abelian_algebra(field, label.m)));
  }
}

Scalar square_class_representative(const Scalar& a) {
  const FieldSpec f = a.field();
  if (a.is_zero()) return a;
  if (f.is_prime()) {
    if (is_nonzero_square(a)) return Scalar::one(f);
    for (long r = 2;; ++r)
      if (!is_nonzero_square(Scalar(f, r))) return Scalar(f, r);
  }
  // n/d ~ n*d; strip square factors by trial division.
  mpz_class v = a.rational().get_num() * a.rational().get_den();
  const int sign = sgn(v);
  v = abs(v);
  mpz_class out = 1;
  for (mpz_class q = 2; q * q <= v; ++q) {
    unsigned e = 0;
    while (v % q == 0) {
      v /= q;
      ++e;
    }
    if (e % 2 == 1) out *= q;
  }
  out *= v;
  return Scalar(f, mpq_class(sign * out));
}

CanonicalLabel expected_classification(const CanonicalLabel& label) {
  if (label.kind != CanonicalLabel::Kind::LAlpha || !label.alpha) return label;
  const Scalar& a = *label.alpha;
  if (!a.is_zero() && is_nonzero_square(-a)) return CanonicalLabel::simple(CanonicalLabel::Kind::HH, label.m);
  return CanonicalLabel::lalpha(square_class_representative(a), label.m);
}

}  // namespace nilbreadth
