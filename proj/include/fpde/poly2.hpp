#pragma once

#include <map>
#include <utility>

#include "fpde/scalar.hpp"

namespace fpde {

// Sparse bivariate polynomial over complex doubles in z1, z2.
//
// Canonical form: after every operation, coefficients whose magnitude is
// <= kEpsZero times the largest stored magnitude are dropped, and the zero
// polynomial stores nothing. Keys are (power of z1, power of z2) ordered by
// std::map, which makes iteration order (and hence all derived arithmetic)
// deterministic. Non-finite coefficients are rejected at construction.
class Poly2 {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Cx>;

  Poly2() = default;

  static Poly2 constant(Cx c);
  static Poly2 monomial(int i, int j, Cx c);
  static Poly2 z1() { return monomial(1, 0, 1.0); }
  static Poly2 z2() { return monomial(0, 1, 1.0); }

  bool is_zero() const { return terms_.empty(); }
  // Total degree; kZeroPolyDegree for the zero polynomial.
  int total_degree() const;
  bool is_constant() const { return total_degree() <= 0; }
  const Map& terms() const { return terms_; }
  Cx coeff(int i, int j) const;
  Cx constant_term() const { return coeff(0, 0); }
  Poly2 without_constant() const;
  double max_coeff_magnitude() const;

  Poly2 partial_z1() const;
  Cx eval(Cx x, Cx y) const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Cx s, const Poly2& p);

  // Exact representation equality (operator== on every key and value).
  bool identical(const Poly2& o) const;

 private:
  void prune();
  Map terms_;
};

}  // namespace fpde
