#pragma once

#include <cmath>
#include <limits>

#include "fpde/kernels/log_abs_eval.hpp"

namespace fpde::kernels::detail {

// Per-lane transcendental stage shared by the scalar and SIMD kernels:
// both call exactly this code on identical inputs, which is what makes
// their outputs bit-identical. Reads lane-strided term values
// (qre[t*stride + lane] etc.); t_scratch must hold nterms doubles.
inline double log_plus_reduce(const double* qre, const double* qim,
                              const double* pre, const double* pim,
                              double* t_scratch, std::size_t nterms,
                              std::size_t stride, std::size_t lane) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  double m = kNegInf;
  for (std::size_t t = 0; t < nterms; ++t) {
    double a = pre[t * stride + lane];
    double b = pim[t * stride + lane];
    double mag = std::hypot(a, b);  // overflow-safe |P|
    double tk = (mag == 0.0) ? kNegInf : qre[t * stride + lane] + std::log(mag);
    t_scratch[t] = tk;
    if (tk > m) m = tk;
  }
  if (m == kNegInf) return 0.0;  // f(z) == 0
  if (std::isinf(m)) return m;   // coefficient magnitude beyond double range
  double acc_re = 0.0, acc_im = 0.0;
  for (std::size_t t = 0; t < nterms; ++t) {
    double tk = t_scratch[t];
    if (tk == kNegInf) continue;
    double w = std::exp(tk - m);
    double ph = std::atan2(pim[t * stride + lane], pre[t * stride + lane]) +
                qim[t * stride + lane];
    acc_re += w * std::cos(ph);
    acc_im += w * std::sin(ph);
  }
  double mag = std::hypot(acc_re, acc_im);
  if (mag == 0.0) return 0.0;
  double v = m + std::log(mag);
  return v > 0.0 ? v : 0.0;
}

// Scalar evaluation of the index range [begin, end); also used by the
// SIMD kernels for their tail points.
void log_abs_eval_scalar_range(const EvalPlan& plan, const PointsSoA& pts,
                               std::size_t begin, std::size_t end, double* out);

}  // namespace fpde::kernels::detail
