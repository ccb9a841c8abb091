#include "fpde/poly2.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpde {

namespace {

void check_finite(Cx c) {
  if (!is_finite(c)) throw std::overflow_error("non-finite polynomial coefficient");
}

}  // namespace

Poly2 Poly2::constant(Cx c) { return monomial(0, 0, c); }

Poly2 Poly2::monomial(int i, int j, Cx c) {
  if (i < 0 || j < 0) throw std::invalid_argument("monomial powers must be >= 0");
  check_finite(c);
  Poly2 p;
  if (c != Cx(0.0, 0.0)) p.terms_[{i, j}] = c;
  return p;
}

int Poly2::total_degree() const {
  int d = kZeroPolyDegree;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

Cx Poly2::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Cx(0.0, 0.0) : it->second;
}

Poly2 Poly2::without_constant() const {
  Poly2 p = *this;
  p.terms_.erase({0, 0});
  return p;
}

double Poly2::max_coeff_magnitude() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Poly2 Poly2::partial_z1() const {
  Poly2 out;
  for (const auto& [k, c] : terms_) {
    if (k.first == 0) continue;
    out.terms_[{k.first - 1, k.second}] = c * static_cast<double>(k.first);
  }
  out.prune();
  return out;
}

Cx Poly2::eval(Cx x, Cx y) const {
  if (terms_.empty()) return {0.0, 0.0};
  int mi = 0, mj = 0;
  for (const auto& [k, c] : terms_) {
    mi = std::max(mi, k.first);
    mj = std::max(mj, k.second);
  }
  // Power tables keep the evaluation order independent of term layout.
  std::vector<Cx> px(mi + 1), py(mj + 1);
  px[0] = Cx(1.0, 0.0);
  for (int i = 1; i <= mi; ++i) px[i] = px[i - 1] * x;
  py[0] = Cx(1.0, 0.0);
  for (int j = 1; j <= mj; ++j) py[j] = py[j - 1] * y;
  Cx acc(0.0, 0.0);
  for (const auto& [k, c] : terms_) acc += c * px[k.first] * py[k.second];
  return acc;
}

Poly2 Poly2::operator-() const {
  Poly2 out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) it->second += c;
  }
  prune();
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(k, -c);
    if (!inserted) it->second -= c;
  }
  prune();
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Poly2::Key k{ka.first + kb.first, ka.second + kb.second};
      auto [it, inserted] = out.terms_.emplace(k, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  out.prune();
  return out;
}

Poly2 operator*(Cx s, const Poly2& p) {
  check_finite(s);
  Poly2 out = p;
  for (auto& [k, c] : out.terms_) c *= s;
  out.prune();
  return out;
}

bool Poly2::identical(const Poly2& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [k, c] : terms_) {
    if (k != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

void Poly2::prune() {
  double m = 0.0;
  for (const auto& [k, c] : terms_) {
    check_finite(c);
    m = std::max(m, std::abs(c));
  }
  double cut = kEpsZero * m;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= cut) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace fpde
