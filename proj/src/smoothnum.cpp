#include <algorithm>
#include <cmath>

#include "dlcat/smoothnum.hpp"

namespace dlc::smooth {

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::polynomial:
      return "polynomial";
    case MapKind::transcendental:
      return "transcendental";
    case MapKind::linear:
      return "linear";
    case MapKind::constant:
      return "constant";
  }
  return "unknown";
}

namespace {

void check_finite(const Point& p, const std::string& label) {
  for (double v : p)
    if (!std::isfinite(v)) throw NonFinite("non-finite value from '" + label + "'");
}

void check_dim(const Point& p, std::size_t dim, const std::string& what) {
  if (p.size() != dim)
    throw DimensionMismatch(what + ": expected dimension " + std::to_string(dim) + ", got " + std::to_string(p.size()));
}

Point concat(const Point& a, const Point& b) {
  Point out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

Point SmoothMap::operator()(const Point& x) const {
  check_dim(x, in_dim, label);
  Point y = evaluator(x);
  check_dim(y, out_dim, label + " (output)");
  check_finite(y, label);
  return y;
}

Point BilinearizedMap::operator()(const Point& x, const Point& y) const { return joint(concat(x, y)); }

void QuadratureConfig::validate() const {
  if (order < 2) throw std::invalid_argument("quadrature order must be >= 2");
  if (!(fd_step > 0) || !(tol_abs > 0) || !(tol_rel > 0) || !(tol_transcendental > 0) || !(tol_derivative > 0) ||
      !(tol_second_order > 0) || !(tol_poincare > 0))
    throw std::invalid_argument("fd_step and tolerances must be positive");
}

double inf_norm(const Point& p) {
  double m = 0.0;
  for (double v : p) m = std::max(m, std::abs(v));
  return m;
}

Point axpy(double a, const Point& x, const Point& y) {
  check_dim(y, x.size(), "axpy");
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + y[i];
  return out;
}

Point sub(const Point& a, const Point& b) { return axpy(-1.0, b, a); }

bool within(double err, double scale, double tol_abs, double tol_rel) {
  return err <= std::max(tol_abs, tol_rel * (1.0 + scale));
}

Point fd_directional(const SmoothMap& f, const Point& x, const Point& v, const QuadratureConfig& cfg) {
  check_dim(x, f.in_dim, "fd_directional point");
  check_dim(v, f.in_dim, "fd_directional direction");
  const double h0 = cfg.fd_step * (1.0 + inf_norm(x));
  auto central = [&](double h) {
    const Point fp = f(axpy(h, v, x));
    const Point fm = f(axpy(-h, v, x));
    Point d(f.out_dim);
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = (fp[k] - fm[k]) / (2.0 * h);
    return d;
  };
  // table[j] holds the level-j extrapolation at successively halved steps.
  std::vector<Point> table;
  for (unsigned i = 0; i <= cfg.richardson_levels; ++i) table.push_back(central(h0 / std::pow(2.0, i)));
  for (unsigned level = 1; level <= cfg.richardson_levels; ++level) {
    const double factor = std::pow(4.0, level);
    for (std::size_t i = table.size() - 1; i >= level; --i)
      for (std::size_t k = 0; k < f.out_dim; ++k)
        table[i][k] = (factor * table[i][k] - table[i - 1][k]) / (factor - 1.0);
  }
  return table.back();
}

DerivativeEstimate directional_derivative(const SmoothMap& f, const Point& x, const Point& v,
                                          const QuadratureConfig& cfg) {
  DerivativeEstimate est;
  const Point fd = fd_directional(f, x, v, cfg);
  if (f.exact_derivative) {
    est.value = (*f.exact_derivative)(x, v);
    check_dim(est.value, f.out_dim, f.label + " derivative");
    check_finite(est.value, f.label + " derivative");
    est.exact = true;
    est.fd_residual = inf_norm(sub(est.value, fd));
  } else {
    est.value = fd;
  }
  return est;
}

BilinearizedMap derivative_map(const SmoothMap& f, const QuadratureConfig& cfg) {
  const std::size_t n = f.in_dim;
  SmoothMap joint;
  joint.in_dim = 2 * n;
  joint.out_dim = f.out_dim;
  joint.label = "D[" + f.label + "]";
  joint.kind = f.kind;
  joint.evaluator = [f, cfg, n](const Point& xy) {
    const Point x(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(n));
    const Point v(xy.begin() + static_cast<std::ptrdiff_t>(n), xy.end());
    if (f.exact_derivative) return (*f.exact_derivative)(x, v);
    return fd_directional(f, x, v, cfg);
  };
  return BilinearizedMap{std::move(joint)};
}

Point line_integral_S(const BilinearizedMap& g, const Point& x, const QuadratureConfig& cfg) {
  check_dim(x, g.base_dim(), "line_integral_S");
  return integrate_unit_interval(
      [&](double t) {
        Point tx = x;
        for (double& c : tx) c *= t;
        return g(tx, x);
      },
      g.joint.out_dim, cfg.order);
}

SmoothMap integral_map(const BilinearizedMap& g, const QuadratureConfig& cfg) {
  SmoothMap s;
  s.in_dim = g.base_dim();
  s.out_dim = g.joint.out_dim;
  s.label = "S[" + g.joint.label + "]";
  s.kind = g.joint.kind;
  s.evaluator = [g, cfg](const Point& x) { return line_integral_S(g, x, cfg); };
  return s;
}

double ftc2_residual(const SmoothMap& f, const Point& x, const QuadratureConfig& cfg) {
  const Point integral = line_integral_S(derivative_map(f, cfg), x, cfg);
  const Point at_zero = f(Point(f.in_dim, 0.0));
  const Point at_x = f(x);
  double r = 0.0;
  for (std::size_t k = 0; k < at_x.size(); ++k) r = std::max(r, std::abs(integral[k] + at_zero[k] - at_x[k]));
  return r;
}

double poincare_residual(const BilinearizedMap& F, const Point& x, const Point& v, const QuadratureConfig& cfg) {
  const SmoothMap s = integral_map(F, cfg);
  const Point lhs = fd_directional(s, x, v, cfg);
  return inf_norm(sub(lhs, F(x, v)));
}

SmoothMap compose(const SmoothMap& g, const SmoothMap& f) {
  if (g.in_dim != f.out_dim) throw DimensionMismatch("compose: " + g.label + " after " + f.label);
  SmoothMap h;
  h.in_dim = f.in_dim;
  h.out_dim = g.out_dim;
  h.label = g.label + "." + f.label;
  h.kind = (g.kind == MapKind::transcendental || f.kind == MapKind::transcendental) ? MapKind::transcendental
                                                                                    : MapKind::polynomial;
  h.evaluator = [g, f](const Point& x) { return g(f(x)); };
  if (g.exact_derivative && f.exact_derivative)
    h.exact_derivative = [g, f](const Point& x, const Point& v) {
      return (*g.exact_derivative)(f(x), (*f.exact_derivative)(x, v));
    };
  return h;
}

SmoothMap product(const SmoothMap& f, const SmoothMap& g) {
  if (f.in_dim != g.in_dim || f.out_dim != 1 || g.out_dim != 1)
    throw DimensionMismatch("product: needs two scalar maps on one domain");
  SmoothMap h;
  h.in_dim = f.in_dim;
  h.out_dim = 1;
  h.label = f.label + "*" + g.label;
  h.kind = (f.kind == MapKind::transcendental || g.kind == MapKind::transcendental) ? MapKind::transcendental
                                                                                    : MapKind::polynomial;
  h.evaluator = [f, g](const Point& x) { return Point{f(x)[0] * g(x)[0]}; };
  return h;
}

}  // namespace dlc::smooth
