#pragma once

#include <cstddef>
#include <vector>

#include "fpde/exp_poly.hpp"

namespace fpde::kernels {

// Flattened, allocation-free-per-point evaluation plan for batches of
// log+|f(z)| = max(0, log|f(z)|), computed in log space so exponentials
// far beyond the double range stay finite:
//   per term:  t_k = Re Q_k(z) + log|P_k(z)|
//   log|f(z)| = m + log|sum_k e^{t_k - m + i (Im Q_k(z) + arg P_k(z))}|,
//   m = max_k t_k.
struct EvalPlan {
  struct Mono {
    double re, im;  // coefficient
    int i, j;       // powers of z1, z2
  };
  struct TermSpan {
    int exp_begin, exp_end;      // range into exp_monos
    int coeff_begin, coeff_end;  // range into coeff_monos
  };
  std::vector<Mono> exp_monos;
  std::vector<Mono> coeff_monos;
  std::vector<TermSpan> terms;
  int max_pow1 = 0, max_pow2 = 0;
};

EvalPlan compile_plan(const ExpPoly& f);

// Structure-of-arrays point batch consumed by the kernels.
struct PointsSoA {
  std::vector<double> z1re, z1im, z2re, z2im;
  std::size_t size() const { return z1re.size(); }
  void push_back(Cx z1, Cx z2) {
    z1re.push_back(z1.real());
    z1im.push_back(z1.imag());
    z2re.push_back(z2.real());
    z2im.push_back(z2.imag());
  }
};

using LogAbsKernel = void (*)(const EvalPlan& plan, const PointsSoA& pts,
                              double* out);

// Scalar reference kernel (always available).
void log_abs_eval_scalar(const EvalPlan& plan, const PointsSoA& pts,
                         double* out);

// AVX2 variant; nullptr when the build or the CPU does not support it.
// When available, it produces bit-identical output to the scalar kernel
// (same operation sequence per point, no fused multiply-add, shared
// transcendental reduction).
LogAbsKernel avx2_log_abs_kernel();

// Runtime-selected kernel: AVX2 when available unless the FPDE_FORCE_SCALAR
// environment variable is set; scalar otherwise. Cached after first use.
LogAbsKernel active_log_abs_kernel();
const char* active_log_abs_kernel_name();

}  // namespace fpde::kernels
