#include "kernels_internal.h"

namespace fpde::kernels {

EvalPlan compile_plan(const ExpPoly& f) {
  EvalPlan plan;
  for (const auto& t : f.terms()) {
    EvalPlan::TermSpan span;
    span.exp_begin = static_cast<int>(plan.exp_monos.size());
    for (const auto& [key, c] : t.exponent.terms()) {
      plan.exp_monos.push_back({c.real(), c.imag(), key.first, key.second});
      plan.max_pow1 = std::max(plan.max_pow1, key.first);
      plan.max_pow2 = std::max(plan.max_pow2, key.second);
    }
    span.exp_end = static_cast<int>(plan.exp_monos.size());
    span.coeff_begin = static_cast<int>(plan.coeff_monos.size());
    for (const auto& [key, c] : t.coeff.terms()) {
      plan.coeff_monos.push_back({c.real(), c.imag(), key.first, key.second});
      plan.max_pow1 = std::max(plan.max_pow1, key.first);
      plan.max_pow2 = std::max(plan.max_pow2, key.second);
    }
    span.coeff_end = static_cast<int>(plan.coeff_monos.size());
    plan.terms.push_back(span);
  }
  return plan;
}

namespace detail {

namespace {

// Sum of monomials over one power table pair; the operation sequence here
// is mirrored one-for-one by the SIMD kernels.
inline void accumulate_monos(const EvalPlan::Mono* monos, int begin, int end,
                             const double* p1re, const double* p1im,
                             const double* p2re, const double* p2im,
                             double& out_re, double& out_im) {
  double acc_re = 0.0, acc_im = 0.0;
  for (int m = begin; m < end; ++m) {
    const EvalPlan::Mono& mono = monos[m];
    double pp_re = p1re[mono.i] * p2re[mono.j] - p1im[mono.i] * p2im[mono.j];
    double pp_im = p1re[mono.i] * p2im[mono.j] + p1im[mono.i] * p2re[mono.j];
    acc_re += mono.re * pp_re - mono.im * pp_im;
    acc_im += mono.re * pp_im + mono.im * pp_re;
  }
  out_re = acc_re;
  out_im = acc_im;
}

}  // namespace

void log_abs_eval_scalar_range(const EvalPlan& plan, const PointsSoA& pts,
                               std::size_t begin, std::size_t end,
                               double* out) {
  const std::size_t nterms = plan.terms.size();
  std::vector<double> p1re(plan.max_pow1 + 1), p1im(plan.max_pow1 + 1);
  std::vector<double> p2re(plan.max_pow2 + 1), p2im(plan.max_pow2 + 1);
  std::vector<double> qre(nterms), qim(nterms), pre(nterms), pim(nterms);
  std::vector<double> scratch(nterms);

  for (std::size_t k = begin; k < end; ++k) {
    double x_re = pts.z1re[k], x_im = pts.z1im[k];
    double y_re = pts.z2re[k], y_im = pts.z2im[k];
    p1re[0] = 1.0;
    p1im[0] = 0.0;
    for (int i = 1; i <= plan.max_pow1; ++i) {
      p1re[i] = p1re[i - 1] * x_re - p1im[i - 1] * x_im;
      p1im[i] = p1re[i - 1] * x_im + p1im[i - 1] * x_re;
    }
    p2re[0] = 1.0;
    p2im[0] = 0.0;
    for (int j = 1; j <= plan.max_pow2; ++j) {
      p2re[j] = p2re[j - 1] * y_re - p2im[j - 1] * y_im;
      p2im[j] = p2re[j - 1] * y_im + p2im[j - 1] * y_re;
    }
    for (std::size_t t = 0; t < nterms; ++t) {
      const auto& span = plan.terms[t];
      accumulate_monos(plan.exp_monos.data(), span.exp_begin, span.exp_end,
                       p1re.data(), p1im.data(), p2re.data(), p2im.data(),
                       qre[t], qim[t]);
      accumulate_monos(plan.coeff_monos.data(), span.coeff_begin,
                       span.coeff_end, p1re.data(), p1im.data(), p2re.data(),
                       p2im.data(), pre[t], pim[t]);
    }
    out[k] = log_plus_reduce(qre.data(), qim.data(), pre.data(), pim.data(),
                             scratch.data(), nterms, 1, 0);
  }
}

}  // namespace detail

void log_abs_eval_scalar(const EvalPlan& plan, const PointsSoA& pts,
                         double* out) {
  detail::log_abs_eval_scalar_range(plan, pts, 0, pts.size(), out);
}

}  // namespace fpde::kernels
