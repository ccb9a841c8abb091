#include "fpde/scalar.hpp"

#include <numbers>
#include <stdexcept>

namespace fpde {

Cx principal_root(Cx w, int k) {
  if (k < 1) throw std::invalid_argument("root order must be >= 1");
  if (k == 1) return w;
  if (w == Cx(0.0, 0.0)) return {0.0, 0.0};
  double mag = std::pow(std::abs(w), 1.0 / k);
  double ang = std::arg(w) / k;
  return std::polar(mag, ang);
}

std::vector<Cx> nth_roots(Cx w, int k) {
  if (k < 1) throw std::invalid_argument("root order must be >= 1");
  std::vector<Cx> out;
  out.reserve(k);
  Cx r0 = principal_root(w, k);
  for (int j = 0; j < k; ++j) {
    double ang = 2.0 * std::numbers::pi * j / k;
    out.push_back(r0 * std::polar(1.0, ang));
  }
  return out;
}

Cx ipow(Cx w, int n) {
  if (n < 0) throw std::invalid_argument("ipow exponent must be >= 0");
  Cx acc(1.0, 0.0);
  Cx base = w;
  while (n > 0) {
    if (n & 1) acc *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return acc;
}

}  // namespace fpde
