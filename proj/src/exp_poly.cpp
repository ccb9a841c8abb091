#include "fpde/exp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fpde {

namespace {

// Exact deterministic ordering on exponent polynomials: lexicographic over
// the flattened (i, j, re, im) stream of the sorted monomial map.
bool exponent_less(const Poly2& a, const Poly2& b) {
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second.real() != ib->second.real())
      return ia->second.real() < ib->second.real();
    if (ia->second.imag() != ib->second.imag())
      return ia->second.imag() < ib->second.imag();
  }
  return ia == ea && ib != eb;
}

// Whether two exponents denote the same frequency under kEpsFreq, relative
// to 1 + the larger coefficient scale of the two.
bool exponent_close(const Poly2& a, const Poly2& b) {
  double scale =
      1.0 + std::max(a.max_coeff_magnitude(), b.max_coeff_magnitude());
  double tol = kEpsFreq * scale;
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      if (std::abs(ia->second) > tol) return false;
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      if (std::abs(ib->second) > tol) return false;
      ++ib;
    } else {
      if (std::abs(ia->second - ib->second) > tol) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

std::vector<ExpTerm> canonicalize(std::vector<ExpTerm> raw) {
  // Fold exponent constants into coefficients: P e^{Q+c} = (e^c P) e^{Q}.
  std::vector<ExpTerm> folded;
  folded.reserve(raw.size());
  for (auto& t : raw) {
    Cx c0 = t.exponent.constant_term();
    if (c0 != Cx(0.0, 0.0)) {
      Cx factor = std::exp(c0);
      if (!is_finite(factor))
        throw std::overflow_error("constant exponential factor overflows");
      t.coeff = factor * t.coeff;
      t.exponent = t.exponent.without_constant();
    }
    if (!t.coeff.is_zero()) folded.push_back(std::move(t));
  }

  std::sort(folded.begin(), folded.end(), [](const ExpTerm& x, const ExpTerm& y) {
    return exponent_less(x.exponent, y.exponent);
  });

  // Merge runs of tolerance-equal exponents, anchored at the first member.
  // A run whose summed coefficient is negligible against the run's own
  // input scale is a cancellation and drops out entirely.
  std::vector<ExpTerm> out;
  size_t i = 0;
  while (i < folded.size()) {
    const Poly2& anchor = folded[i].exponent;
    Poly2 sum = folded[i].coeff;
    double run_scale = folded[i].coeff.max_coeff_magnitude();
    size_t j = i + 1;
    while (j < folded.size() && exponent_close(anchor, folded[j].exponent)) {
      sum += folded[j].coeff;
      run_scale = std::max(run_scale, folded[j].coeff.max_coeff_magnitude());
      ++j;
    }
    if (sum.max_coeff_magnitude() > kEpsZero * run_scale)
      out.push_back(ExpTerm{std::move(sum), anchor});
    i = j;
  }
  return out;
}

}  // namespace

ExpPoly ExpPoly::constant(Cx c) { return from_poly(Poly2::constant(c)); }

ExpPoly ExpPoly::from_poly(Poly2 p) {
  return term(std::move(p), Poly2{});
}

ExpPoly ExpPoly::exp_of(Poly2 q) {
  return term(Poly2::constant(1.0), std::move(q));
}

ExpPoly ExpPoly::term(Poly2 coeff, Poly2 exponent) {
  std::vector<ExpTerm> raw;
  raw.push_back(ExpTerm{std::move(coeff), std::move(exponent)});
  return from_terms(std::move(raw));
}

ExpPoly ExpPoly::from_terms(std::vector<ExpTerm> raw) {
  return ExpPoly(canonicalize(std::move(raw)));
}

std::optional<Poly2> ExpPoly::as_polynomial() const {
  if (terms_.empty()) return Poly2{};
  if (terms_.size() == 1 && terms_[0].exponent.is_zero()) return terms_[0].coeff;
  return std::nullopt;
}

std::optional<Cx> ExpPoly::as_constant() const {
  auto p = as_polynomial();
  if (!p || !p->is_constant()) return std::nullopt;
  return p->constant_term();
}

ExpPoly ExpPoly::operator-() const {
  std::vector<ExpTerm> raw = terms_;
  for (auto& t : raw) t.coeff = -t.coeff;
  return ExpPoly(std::move(raw));  // negation preserves canonical form
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpTerm> raw = a.terms_;
  raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
  return ExpPoly::from_terms(std::move(raw));
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpTerm> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      raw.push_back(ExpTerm{ta.coeff * tb.coeff, ta.exponent + tb.exponent});
    }
  }
  return ExpPoly::from_terms(std::move(raw));
}

ExpPoly operator*(Cx s, const ExpPoly& f) {
  std::vector<ExpTerm> raw = f.terms_;
  for (auto& t : raw) t.coeff = s * t.coeff;
  return ExpPoly::from_terms(std::move(raw));
}

ExpPoly ExpPoly::pow(int n) const {
  if (n < 1) throw std::invalid_argument("pow exponent must be >= 1");
  ExpPoly base = *this;
  ExpPoly acc;
  bool have_acc = false;
  while (n > 0) {
    if (n & 1) {
      acc = have_acc ? acc * base : base;
      have_acc = true;
    }
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

ExpPoly ExpPoly::partial_z1() const {
  std::vector<ExpTerm> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) {
    // d/dz1 (P e^Q) = (P' + P Q') e^Q
    raw.push_back(
        ExpTerm{t.coeff.partial_z1() + t.coeff * t.exponent.partial_z1(),
                t.exponent});
  }
  return from_terms(std::move(raw));
}

std::optional<Cx> ExpPoly::eval(Cx x, Cx y) const {
  Cx acc(0.0, 0.0);
  for (const auto& t : terms_) {
    Cx e = std::exp(t.exponent.eval(x, y));
    Cx v = t.coeff.eval(x, y) * e;
    if (!is_finite(v)) return std::nullopt;
    acc += v;
  }
  if (!is_finite(acc)) return std::nullopt;
  return acc;
}

bool ExpPoly::identical(const ExpPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (!terms_[i].coeff.identical(o.terms_[i].coeff)) return false;
    if (!terms_[i].exponent.identical(o.terms_[i].exponent)) return false;
  }
  return true;
}

bool approx_equal(const ExpPoly& a, const ExpPoly& b, double tol) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return false;
  for (size_t i = 0; i < ta.size(); ++i) {
    if (!exponent_close(ta[i].exponent, tb[i].exponent)) return false;
    Poly2 diff = ta[i].coeff - tb[i].coeff;
    double scale = 1.0 + std::max(ta[i].coeff.max_coeff_magnitude(),
                                  tb[i].coeff.max_coeff_magnitude());
    if (diff.max_coeff_magnitude() > tol * scale) return false;
  }
  return true;
}

}  // namespace fpde
