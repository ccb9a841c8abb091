#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include "fpde/kernels/log_abs_eval.hpp"
#include "support/generators.hpp"

using namespace fpde;
using namespace fpde::kernels;

namespace {

PointsSoA disk_points(std::uint64_t seed, std::size_t count, double radius) {
  SplitMix64 rng(seed);
  PointsSoA pts;
  for (std::size_t k = 0; k < count; ++k) {
    double r1 = radius * std::sqrt(rng.uniform01());
    double a1 = 2.0 * std::numbers::pi * rng.uniform01();
    double r2 = radius * std::sqrt(rng.uniform01());
    double a2 = 2.0 * std::numbers::pi * rng.uniform01();
    pts.push_back(std::polar(r1, a1), std::polar(r2, a2));
  }
  return pts;
}

}  // namespace

TEST_CASE("plan layout matches the expression") {
  ExpPoly f = ExpPoly::term(Poly2::z1() + Poly2::constant(2.0),
                            Poly2::monomial(1, 2, Cx(0.0, 1.0))) +
              ExpPoly::from_poly(Poly2::monomial(3, 0, 1.0));
  EvalPlan plan = compile_plan(f);
  REQUIRE(plan.terms.size() == 2);
  CHECK(plan.max_pow1 >= 3);
  CHECK(plan.max_pow2 >= 2);
  for (const auto& span : plan.terms) {
    CHECK(span.exp_begin <= span.exp_end);
    CHECK(span.coeff_begin < span.coeff_end);  // coefficients are nonzero
  }
}

TEST_CASE("scalar kernel matches direct evaluation on moderate data") {
  SplitMix64 rng(90210);
  for (int iter = 0; iter < 60; ++iter) {
    ExpPoly f = testgen::cont_exp_poly(rng);
    if (f.is_zero()) continue;
    EvalPlan plan = compile_plan(f);
    PointsSoA pts = disk_points(mix_seed(1, iter), 64, 2.0);
    std::vector<double> out(pts.size());
    log_abs_eval_scalar(plan, pts, out.data());
    for (std::size_t k = 0; k < pts.size(); ++k) {
      CHECK(std::isfinite(out[k]));
      auto v = f.eval(Cx(pts.z1re[k], pts.z1im[k]), Cx(pts.z2re[k], pts.z2im[k]));
      REQUIRE(v.has_value());
      double direct = std::max(0.0, std::log(std::abs(*v)));
      CHECK(std::abs(out[k] - direct) <= 1e-9 * (1.0 + std::abs(direct)));
    }
  }
}

TEST_CASE("log-space evaluation survives exponent overflow") {
  // e^{1000 z1} at z1 = 2 has log+|f| = 2000 even though e^{2000}
  // overflows every double.
  ExpPoly f = ExpPoly::exp_of(Poly2::monomial(1, 0, 1000.0));
  EvalPlan plan = compile_plan(f);
  PointsSoA pts;
  pts.push_back(Cx(2.0, 0.0), Cx(0.0, 0.0));
  pts.push_back(Cx(-2.0, 0.0), Cx(0.0, 0.0));
  pts.push_back(Cx(0.0, 2.0), Cx(0.0, 0.0));
  std::vector<double> out(pts.size());
  log_abs_eval_scalar(plan, pts, out.data());
  CHECK(out[0] == doctest::Approx(2000.0).epsilon(1e-12));
  CHECK(out[1] == 0.0);  // log|f| = -2000, clamped by log+
  CHECK(out[2] == 0.0);  // purely imaginary exponent, |f| = 1

  // Opposite giant waves at a purely imaginary point reduce to 2 cos.
  ExpPoly g = f + ExpPoly::exp_of(Poly2::monomial(1, 0, -1000.0));
  EvalPlan gplan = compile_plan(g);
  PointsSoA ipts;
  ipts.push_back(Cx(0.0, 2.0), Cx(0.0, 0.0));
  double gout = 0.0;
  log_abs_eval_scalar(gplan, ipts, &gout);
  double expect = std::max(0.0, std::log(std::abs(2.0 * std::cos(2000.0))));
  CHECK(gout == doctest::Approx(expect).epsilon(1e-10));

  // The zero function reports log+ = 0 everywhere.
  EvalPlan zplan = compile_plan(ExpPoly{});
  double zout = -1.0;
  log_abs_eval_scalar(zplan, ipts, &zout);
  CHECK(zout == 0.0);
}

TEST_CASE("vector kernel is bit-identical to the scalar kernel") {
  LogAbsKernel vk = avx2_log_abs_kernel();
  if (vk == nullptr) {
    MESSAGE("no AVX2 kernel on this build/CPU; equivalence vacuous");
    return;
  }
  SplitMix64 rng(20260814);
  const std::size_t sizes[] = {1, 2, 3, 4, 5, 7, 8, 64, 101, 1001};
  int checked = 0;
  for (int iter = 0; iter < 40; ++iter) {
    ExpPoly f = testgen::cont_exp_poly(rng);
    // Every third round, push the exponents far into overflow country.
    if (iter % 3 == 0)
      f = f + ExpPoly::exp_of(Poly2::monomial(1, 0, 1000.0)) +
          Cx(1e300, -1e300) * ExpPoly::exp_of(Poly2::monomial(1, 0, -500.0));
    EvalPlan plan = compile_plan(f);
    std::size_t n = sizes[iter % (sizeof(sizes) / sizeof(sizes[0]))];
    PointsSoA pts = disk_points(mix_seed(2, iter), n, 2.0);
    std::vector<double> a(n, -7.0), b(n, 7.0);
    log_abs_eval_scalar(plan, pts, a.data());
    vk(plan, pts, b.data());
    CHECK(std::memcmp(a.data(), b.data(), n * sizeof(double)) == 0);
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("kernel dispatch is stable and honestly named") {
  LogAbsKernel k1 = active_log_abs_kernel();
  LogAbsKernel k2 = active_log_abs_kernel();
  CHECK(k1 == k2);
  std::string name = active_log_abs_kernel_name();
  bool force_scalar = std::getenv("FPDE_FORCE_SCALAR") != nullptr;
  if (avx2_log_abs_kernel() != nullptr && !force_scalar) {
    CHECK(name == "avx2");
    CHECK(k1 == avx2_log_abs_kernel());
  } else {
    CHECK(name == "scalar");
    CHECK(k1 == &log_abs_eval_scalar);
  }
}
