#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "dlcat/smoothnum.hpp"

namespace dlc::smooth {

namespace {

// Newton iteration on P_n from the Chebyshev-like initial guess; the
// derivative comes from the standard three-term recurrence.
GaussLegendreRule build_rule(unsigned n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const unsigned half = (n + 1) / 2;
  for (unsigned i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (unsigned k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(unsigned order) {
  if (order == 0) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  static std::mutex mu;
  static std::map<unsigned, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

Point integrate_unit_interval(const std::function<Point(double)>& h, std::size_t dim, unsigned order) {
  const auto& rule = gauss_legendre(order);
  Point total(dim, 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = 0.5 * (rule.nodes[i] + 1.0);
    const Point v = h(t);
    if (v.size() != dim) throw DimensionMismatch("integrand returned wrong dimension");
    for (std::size_t k = 0; k < dim; ++k) total[k] += 0.5 * rule.weights[i] * v[k];
  }
  return total;
}

}  // namespace dlc::smooth
