#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilbreadth/lie_algebra.hpp"

namespace nilbreadth {

// Named algebras. Every non-abelian kind except Breadth1 and Unclassified
// carries an abelian summand A(m), placed after the pure block.
//
//   Abelian(d)      A(d)
//   Breadth1{k,m}   x1,y1,..,xk,yk,z (+A(m)); [x_i,y_i] = z
//   N4              [x1,x2]=x3, [x1,x3]=z
//   M5              [x1,x2]=x3, [x1,x3]=z1, [x2,x3]=z2
//   M6              [x1,x2]=z1, [x1,x3]=z2, [x2,x3]=z3
//   QFamily{n}      x1,x2,x3,z,z1..zn; [x1,x2]=x3, [x1,x3]=z and
//                   n even: [z_i,z_{i+1}]=z for odd i
//                   n odd:  [x2,z1]=z, [z_i,z_{i+1}]=z for even i
//   P5              [x1,x2]=z1, [x1,x3]=z2
//   HH              [x1,x2]=z1, [x3,x4]=z2
//   LAlpha{a}       [x1,x2]=z1, [x2,x3]=z2, [x3,x4]=z1, [x1,x4]=a z2
struct CanonicalLabel {
  enum class Kind { Abelian, Breadth1, N4, M5, M6, QFamily, P5, HH, LAlpha, Unclassified };

  Kind kind = Kind::Abelian;
  std::size_t d = 0;  // Abelian
  std::size_t k = 0;  // Breadth1
  std::size_t n = 0;  // QFamily
  std::size_t m = 0;  // abelian summand
  std::optional<Scalar> alpha;
  std::string reason;

  static CanonicalLabel abelian(std::size_t d);
  static CanonicalLabel breadth1(std::size_t k, std::size_t m = 0);
  static CanonicalLabel simple(Kind kind, std::size_t m = 0);  // N4, M5, M6, P5, HH
  static CanonicalLabel qfamily(std::size_t n, std::size_t m = 0);
  static CanonicalLabel lalpha(const Scalar& alpha, std::size_t m = 0);
  static CanonicalLabel unclassified(std::string reason);

  /// "A(3)", "B1(k=2,m=1)", "N4+A(0)", "Q(n=3)+A(0)", "L(alpha=2)+A(1)",
  /// "UNCLASSIFIED(dim>=7 stratum)". Throws ParseError.
  static CanonicalLabel parse(std::string_view text, FieldSpec field);
  std::string to_string() const;

  /// Dimension of the catalog algebra; 0 for Unclassified.
  std::size_t dimension() const;
  bool operator==(const CanonicalLabel& rhs) const;
};

struct PencilInvariant {
  enum class Roots { Zero, One, Two, Degenerate };
  /// Pf(l G1 + m G2) = a l^2 + b l m + c m^2 for the Gram matrices of the two
  /// center coordinates on the chosen complement of the center.
  Scalar a, b, c;
  Roots roots = Roots::Degenerate;

  /// Number of projective roots (or "degenerate").
  std::string roots_string() const;
  std::string to_string() const;
};

struct ClassificationReport {
  CanonicalLabel label;
  BasisChange witness;  // change_basis(input, witness) == catalog_make(label)
  InvariantProfile profile;
  std::vector<std::string> notes;
  std::optional<PencilInvariant> pencil;
};

struct SymplecticResult {
  BasisChange basis;  // P^T M P = diag(S, .., S, 0, .., 0)
  std::size_t k = 0;  // number of hyperbolic pairs
};

/// Hyperbolic-pair normal form. Pivot: the first (i, j), i < j, among the
/// remaining vectors with nonzero pairing. Throws NotAlternating.
SymplecticResult symplectic_normalize(const Matrix& form);

/// Structure constants of the named algebra. Throws BadParameters.
LieAlgebra catalog_make(const CanonicalLabel& label, FieldSpec field);

/// Label that classify assigns to the catalog algebra of `label`: LAlpha
/// parameters become square-class representatives, and LAlpha{a} with -a a
/// nonzero square becomes HH.
CanonicalLabel expected_classification(const CanonicalLabel& label);

/// Least canonical member of {g^2 a : g != 0}: the least residue over GF(p),
/// the signed squarefree integer over Q.
Scalar square_class_representative(const Scalar& a);

/// Throws WrongStratum unless dim[L,L] = 1; NotNilpotent.
ClassificationReport classify_breadth1(const LieAlgebra& algebra);
/// Throws WrongStratum unless b(L) = 2; NotNilpotent.
ClassificationReport classify_breadth2(const LieAlgebra& algebra);
/// Abelian, breadth 1, breadth 2, or Unclassified for larger breadth.
ClassificationReport classify(const LieAlgebra& algebra);

bool verify_witness(const LieAlgebra& algebra, const ClassificationReport& report);

struct LAlphaEquivalence {
  enum class Outcome { Equivalent, NotBySquareCriterion };
  Outcome outcome = Outcome::NotBySquareCriterion;
  std::optional<Scalar> gamma;  // alpha = gamma^2 beta, gamma != 0
  /// s with s^2 = -alpha; then y = s x2 + x4 has breadth 1 in L_alpha.
  std::optional<Scalar> sqrt_neg_alpha;
  std::optional<Vector> breadth_one_element;

  std::string to_string() const;
};

/// Square criterion for L_alpha versus L_beta. Throws FieldMismatch.
LAlphaEquivalence lalpha_equivalence(const Scalar& alpha, const Scalar& beta);

/// Throws WrongStratum unless L is pure of class 2 with dim 6 and
/// dim Z = dim [L,L] = 2.
PencilInvariant pencil_invariant(const LieAlgebra& algebra);

}  // namespace nilbreadth
