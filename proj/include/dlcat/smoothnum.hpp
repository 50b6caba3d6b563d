#pragma once

/*
 * Finite-dimensional smooth maps with numerical derivative and integral.
 *
 * A linear map !E (x) E -> F is handled as a function E x E -> F that is
 * linear in its second argument ("bilinearized"). The integral of such a map
 * is the line integral
 *
 *     S[g](x) = integral_0^1 g(t x, x) dt,
 *
 * evaluated by fixed-order Gauss-Legendre quadrature.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlc::smooth {

using Point = std::vector<double>;
using Evaluator = std::function<Point(const Point&)>;
using DerivativeFn = std::function<Point(const Point&, const Point&)>;

class NonFinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MapKind { polynomial, transcendental, linear, constant };

std::string to_string(MapKind kind);

struct SmoothMap {
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  Evaluator evaluator;
  std::string label;
  std::optional<DerivativeFn> exact_derivative;
  MapKind kind = MapKind::transcendental;

  /// Evaluates with dimension checks; throws NonFinite on NaN or infinity.
  Point operator()(const Point& x) const;
};

/// g(x, y), linear in y; stored as a map on 2n inputs (x first, then y).
struct BilinearizedMap {
  SmoothMap joint;

  std::size_t base_dim() const noexcept { return joint.in_dim / 2; }
  Point operator()(const Point& x, const Point& y) const;
};

struct QuadratureConfig {
  unsigned order = 32;
  double fd_step = 1e-5;
  unsigned richardson_levels = 2;
  double tol_abs = 1e-8;
  double tol_rel = 1e-8;             // fundamental theorem, polynomial maps
  double tol_transcendental = 1e-7;  // fundamental theorem, other maps
  double tol_derivative = 1e-6;      // first-order identities and FD probes
  double tol_second_order = 1e-5;    // mixed second differences
  double tol_poincare = 1e-6;

  /// Throws std::invalid_argument unless order >= 2 and tolerances > 0.
  void validate() const;
};

/// Nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rule of the given order (>= 1), cached per order.
const GaussLegendreRule& gauss_legendre(unsigned order);

/// integral_0^1 h(t) dt, componentwise.
Point integrate_unit_interval(const std::function<Point(double)>& h, std::size_t dim, unsigned order);

double inf_norm(const Point& p);
Point axpy(double a, const Point& x, const Point& y);  // a x + y
Point sub(const Point& a, const Point& b);

struct DerivativeEstimate {
  Point value;
  std::optional<double> fd_residual;  // |exact - fd|_inf when an exact derivative exists
  bool exact = false;
};

/// Central differences along v with Richardson extrapolation. The base step
/// is fd_step * (1 + |x|_inf); each level halves it.
Point fd_directional(const SmoothMap& f, const Point& x, const Point& v, const QuadratureConfig& cfg);

/// D[f](x, v). Uses the exact derivative when present and records the FD
/// residual against it; otherwise returns the FD estimate.
DerivativeEstimate directional_derivative(const SmoothMap& f, const Point& x, const Point& v,
                                          const QuadratureConfig& cfg);

/// D[f] as a bilinearized map (exact derivative preferred).
BilinearizedMap derivative_map(const SmoothMap& f, const QuadratureConfig& cfg);

/// S[g](x) = integral_0^1 g(t x, x) dt.
Point line_integral_S(const BilinearizedMap& g, const Point& x, const QuadratureConfig& cfg);

/// S[g] as a smooth map of x.
SmoothMap integral_map(const BilinearizedMap& g, const QuadratureConfig& cfg);

/// |S[D f](x) + f(0) - f(x)|_inf.
double ftc2_residual(const SmoothMap& f, const Point& x, const QuadratureConfig& cfg);

/// |D[S[F]](x, v) - F(x, v)|_inf. The caller guarantees the symmetry premise
/// (for instance F is the derivative of a scalar potential).
double poincare_residual(const BilinearizedMap& F, const Point& x, const Point& v, const QuadratureConfig& cfg);

/// g o f.
SmoothMap compose(const SmoothMap& g, const SmoothMap& f);
/// Pointwise product of two scalar maps on the same domain.
SmoothMap product(const SmoothMap& f, const SmoothMap& g);

/// Deterministic test corpus, every member with an exact derivative.
std::vector<SmoothMap> builtin_corpus();

/// Mixed tolerance test: |err| <= max(tol_abs, tol_rel * (1 + scale)).
bool within(double err, double scale, double tol_abs, double tol_rel);

}  // namespace dlc::smooth
