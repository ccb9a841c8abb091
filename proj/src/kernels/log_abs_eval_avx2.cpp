// AVX2 variant of the batched log+|f| kernel. Compiled with -mavx2 in its
// own translation unit; every arithmetic step mirrors the scalar kernel
// one-for-one (explicit mul/add/sub, no FMA), and the transcendental stage
// is the shared log_plus_reduce, so results are bit-identical per point.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernels_internal.h"

namespace fpde::kernels {

namespace {

using detail::log_plus_reduce;

// Power tables are stride-4 double buffers (one __m256d worth of lanes per
// power); keeping vectors as raw doubles sidesteps the attribute loss that
// __m256d suffers as a container template argument.
inline __m256d ld(const double* buf, int idx) {
  return _mm256_loadu_pd(buf + 4 * idx);
}

inline void accumulate_monos_v(const EvalPlan::Mono* monos, int begin, int end,
                               const double* p1re, const double* p1im,
                               const double* p2re, const double* p2im,
                               __m256d& out_re, __m256d& out_im) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  for (int m = begin; m < end; ++m) {
    const EvalPlan::Mono& mono = monos[m];
    __m256d cre = _mm256_set1_pd(mono.re);
    __m256d cim = _mm256_set1_pd(mono.im);
    __m256d pp_re = _mm256_sub_pd(_mm256_mul_pd(ld(p1re, mono.i), ld(p2re, mono.j)),
                                  _mm256_mul_pd(ld(p1im, mono.i), ld(p2im, mono.j)));
    __m256d pp_im = _mm256_add_pd(_mm256_mul_pd(ld(p1re, mono.i), ld(p2im, mono.j)),
                                  _mm256_mul_pd(ld(p1im, mono.i), ld(p2re, mono.j)));
    acc_re = _mm256_add_pd(
        acc_re, _mm256_sub_pd(_mm256_mul_pd(cre, pp_re), _mm256_mul_pd(cim, pp_im)));
    acc_im = _mm256_add_pd(
        acc_im, _mm256_add_pd(_mm256_mul_pd(cre, pp_im), _mm256_mul_pd(cim, pp_re)));
  }
  out_re = acc_re;
  out_im = acc_im;
}

void log_abs_eval_avx2_impl(const EvalPlan& plan, const PointsSoA& pts,
                            double* out) {
  const std::size_t n = pts.size();
  const std::size_t n4 = n & ~std::size_t(3);
  const std::size_t nterms = plan.terms.size();

  std::vector<double> p1re(4 * (plan.max_pow1 + 1)), p1im(4 * (plan.max_pow1 + 1));
  std::vector<double> p2re(4 * (plan.max_pow2 + 1)), p2im(4 * (plan.max_pow2 + 1));
  std::vector<double> qre(nterms * 4), qim(nterms * 4);
  std::vector<double> pre(nterms * 4), pim(nterms * 4);
  std::vector<double> scratch(nterms);

  for (std::size_t k = 0; k < n4; k += 4) {
    __m256d x_re = _mm256_loadu_pd(&pts.z1re[k]);
    __m256d x_im = _mm256_loadu_pd(&pts.z1im[k]);
    __m256d y_re = _mm256_loadu_pd(&pts.z2re[k]);
    __m256d y_im = _mm256_loadu_pd(&pts.z2im[k]);
    _mm256_storeu_pd(&p1re[0], _mm256_set1_pd(1.0));
    _mm256_storeu_pd(&p1im[0], _mm256_setzero_pd());
    for (int i = 1; i <= plan.max_pow1; ++i) {
      __m256d prev_re = ld(p1re.data(), i - 1);
      __m256d prev_im = ld(p1im.data(), i - 1);
      _mm256_storeu_pd(&p1re[4 * i], _mm256_sub_pd(_mm256_mul_pd(prev_re, x_re),
                                                   _mm256_mul_pd(prev_im, x_im)));
      _mm256_storeu_pd(&p1im[4 * i], _mm256_add_pd(_mm256_mul_pd(prev_re, x_im),
                                                   _mm256_mul_pd(prev_im, x_re)));
    }
    _mm256_storeu_pd(&p2re[0], _mm256_set1_pd(1.0));
    _mm256_storeu_pd(&p2im[0], _mm256_setzero_pd());
    for (int j = 1; j <= plan.max_pow2; ++j) {
      __m256d prev_re = ld(p2re.data(), j - 1);
      __m256d prev_im = ld(p2im.data(), j - 1);
      _mm256_storeu_pd(&p2re[4 * j], _mm256_sub_pd(_mm256_mul_pd(prev_re, y_re),
                                                   _mm256_mul_pd(prev_im, y_im)));
      _mm256_storeu_pd(&p2im[4 * j], _mm256_add_pd(_mm256_mul_pd(prev_re, y_im),
                                                   _mm256_mul_pd(prev_im, y_re)));
    }
    for (std::size_t t = 0; t < nterms; ++t) {
      const auto& span = plan.terms[t];
      __m256d v_re, v_im;
      accumulate_monos_v(plan.exp_monos.data(), span.exp_begin, span.exp_end,
                         p1re.data(), p1im.data(), p2re.data(), p2im.data(),
                         v_re, v_im);
      _mm256_storeu_pd(&qre[t * 4], v_re);
      _mm256_storeu_pd(&qim[t * 4], v_im);
      accumulate_monos_v(plan.coeff_monos.data(), span.coeff_begin,
                         span.coeff_end, p1re.data(), p1im.data(), p2re.data(),
                         p2im.data(), v_re, v_im);
      _mm256_storeu_pd(&pre[t * 4], v_re);
      _mm256_storeu_pd(&pim[t * 4], v_im);
    }
    for (std::size_t lane = 0; lane < 4; ++lane) {
      out[k + lane] =
          log_plus_reduce(qre.data(), qim.data(), pre.data(), pim.data(),
                          scratch.data(), nterms, 4, lane);
    }
  }
  if (n4 < n) detail::log_abs_eval_scalar_range(plan, pts, n4, n, out);
}

}  // namespace

LogAbsKernel avx2_kernel_if_supported() {
  if (__builtin_cpu_supports("avx2")) return &log_abs_eval_avx2_impl;
  return nullptr;
}

}  // namespace fpde::kernels

#endif  // x86_64
