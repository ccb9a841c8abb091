#pragma once

#include <optional>
#include <vector>

#include "fpde/poly2.hpp"

namespace fpde {

// One addend P(z1,z2) * e^{Q(z1,z2)}. In canonical form the exponent
// carries no constant term (e^{Q+c} folds the scalar e^c into P) and the
// coefficient is never the zero polynomial.
struct ExpTerm {
  Poly2 coeff;
  Poly2 exponent;
};

// Canonical finite sum of ExpTerms: exponents pairwise distinct beyond the
// kEpsFreq merge tolerance, sorted by a deterministic exact key. Values are
// immutable once built; every operation returns a fresh canonical value.
//
// The canonical merge is cancellation-aware: when terms with matching
// exponents are combined, the summed coefficient is treated as zero if its
// largest magnitude is <= kEpsZero times the largest input coefficient
// magnitude in the merged run. Solution branches built from floating n-th
// roots cancel only to roundoff, and this rule is what lets their residuals
// reach the canonical zero the verifier reports.
class ExpPoly {
 public:
  ExpPoly() = default;  // the zero function

  static ExpPoly constant(Cx c);
  static ExpPoly from_poly(Poly2 p);
  static ExpPoly exp_of(Poly2 q);  // e^{q}
  static ExpPoly term(Poly2 coeff, Poly2 exponent);
  static ExpPoly from_terms(std::vector<ExpTerm> raw);  // canonicalizes

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Engaged when the value is a plain polynomial (zero terms, or a single
  // term with zero exponent); used to validate exp() arguments.
  std::optional<Poly2> as_polynomial() const;
  std::optional<Cx> as_constant() const;

  ExpPoly operator-() const;
  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(Cx s, const ExpPoly& f);
  ExpPoly pow(int n) const;  // n >= 1, binary exponentiation
  ExpPoly partial_z1() const;

  // Direct evaluation; disengaged when exp() overflows the double range
  // or any intermediate goes non-finite.
  std::optional<Cx> eval(Cx x, Cx y) const;

  // Exact representation equality.
  bool identical(const ExpPoly& o) const;

 private:
  explicit ExpPoly(std::vector<ExpTerm> canonical) : terms_(std::move(canonical)) {}
  std::vector<ExpTerm> terms_;
};

// Tolerant comparison for numeric property tests: same term count, each
// pair of terms has exponents within the merge tolerance and coefficients
// within tol relative to their joint scale.
bool approx_equal(const ExpPoly& a, const ExpPoly& b, double tol);

}  // namespace fpde
