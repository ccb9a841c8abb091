#include "fpde/nevanlinna.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fpde/kernels/log_abs_eval.hpp"
#include "fpde/rng.hpp"

namespace fpde {

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

std::vector<SpherePoint> sample_sphere(double r, int count, std::uint64_t seed) {
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::vector<SpherePoint> out;
  out.reserve(count);
  SplitMix64 rng(seed);
  for (int k = 0; k < count; ++k) {
    double g0, g1, g2, g3, n2;
    do {
      rng.gaussian_pair(g0, g1);
      rng.gaussian_pair(g2, g3);
      n2 = g0 * g0 + g1 * g1 + g2 * g2 + g3 * g3;
    } while (!(n2 > 0.0) || !std::isfinite(n2));
    double s = r / std::sqrt(n2);
    out.push_back(SpherePoint{Cx(g0 * s, g1 * s), Cx(g2 * s, g3 * s), r});
  }
  return out;
}

namespace {

Estimate mean_log_plus(const ExpPoly& f, double r, int count,
                       std::uint64_t seed) {
  if (f.is_zero())
    throw std::invalid_argument("proximity of the zero function is undefined");
  auto pts = sample_sphere(r, count, seed);
  kernels::PointsSoA soa;
  soa.z1re.reserve(count);
  soa.z1im.reserve(count);
  soa.z2re.reserve(count);
  soa.z2im.reserve(count);
  for (const auto& p : pts) soa.push_back(p.z1, p.z2);

  kernels::EvalPlan plan = kernels::compile_plan(f);
  std::vector<double> w(count);
  kernels::active_log_abs_kernel()(plan, soa, w.data());

  Estimate e;
  e.value = pairwise_sum(w.data(), w.size()) / count;
  if (count > 1) {
    std::vector<double> dev(count);
    for (int i = 0; i < count; ++i) {
      double d = w[i] - e.value;
      dev[i] = d * d;
    }
    double ssd = pairwise_sum(dev.data(), dev.size());
    e.std_error = std::sqrt(ssd / (count - 1) / count);
  }
  return e;
}

}  // namespace

Estimate proximity(const ExpPoly& f, double r, int count, std::uint64_t seed) {
  return mean_log_plus(f, r, count, seed);
}

Estimate characteristic(const ExpPoly& f, double r, int count,
                        std::uint64_t seed) {
  // Entire functions have no poles: N(r, f) = 0 and T = m.
  return mean_log_plus(f, r, count, seed);
}

GrowthCurve order_fit(const ExpPoly& f, const std::vector<double>& r_grid,
                      int count, std::uint64_t seed) {
  if (r_grid.size() < 6)
    throw std::invalid_argument("r grid needs at least 6 points");
  for (std::size_t i = 0; i + 1 < r_grid.size(); ++i) {
    if (!(r_grid[i] < r_grid[i + 1]))
      throw std::invalid_argument("r grid must be strictly increasing");
  }
  if (!(r_grid.front() > 0.0) ||
      r_grid.back() / r_grid.front() < 10.0)
    throw std::invalid_argument("r grid must span at least a decade");

  GrowthCurve curve;
  curve.points.reserve(r_grid.size());
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    Estimate e = characteristic(f, r_grid[i], count, mix_seed(seed, i));
    curve.points.push_back(GrowthPoint{r_grid[i], e.value, e.std_error});
  }

  // Upper half of the grid, T > 0 only.
  std::vector<double> xs, ys;
  for (std::size_t i = r_grid.size() / 2; i < r_grid.size(); ++i) {
    if (curve.points[i].m_estimate > 0.0) {
      xs.push_back(std::log(curve.points[i].r));
      ys.push_back(std::log(curve.points[i].m_estimate));
    }
  }
  const double inf = std::numeric_limits<double>::infinity();
  if (xs.size() < 2) {
    curve.order_estimate = 0.0;
    curve.order_ci_halfwidth = inf;
    return curve;
  }
  std::size_t n = xs.size();
  double xbar = 0.0, ybar = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= n;
  ybar /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  double slope = sxy / sxx;
  curve.order_estimate = slope;
  if (n < 3) {
    curve.order_ci_halfwidth = inf;
    return curve;
  }
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double resid = ys[i] - ybar - slope * (xs[i] - xbar);
    ssr += resid * resid;
  }
  double se = std::sqrt(ssr / (n - 2) / sxx);
  curve.order_ci_halfwidth = 1.96 * se;
  return curve;
}

}  // namespace fpde
