#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "dlcat/random.hpp"
#include "dlcat/smoothnum.hpp"

using namespace dlc;
using namespace dlc::smooth;

namespace {

Point random_point(Rng& rng, std::size_t n) {
  Point p(n);
  for (double& v : p) v = uniform_real(rng, -2.0, 2.0);
  return p;
}

SmoothMap scalar(std::string label, std::function<double(double)> f) {
  SmoothMap m;
  m.in_dim = 1;
  m.out_dim = 1;
  m.label = std::move(label);
  m.evaluator = [f](const Point& x) { return Point{f(x[0])}; };
  return m;
}

}  // namespace

TEST_CASE("two-point rule has nodes at +-1/sqrt(3)") {
  const auto& r = gauss_legendre(2);
  REQUIRE(r.nodes.size() == 2);
  CHECK(std::abs(std::abs(r.nodes[0]) - 1.0 / std::sqrt(3.0)) < 1e-15);
  CHECK(std::abs(r.weights[0] - 1.0) < 1e-15);
}

TEST_CASE("order-n rule integrates t^k exactly for k < 2n") {
  for (unsigned n : {1u, 3u, 8u, 32u}) {
    const auto& r = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    CHECK(std::abs(wsum - 2.0) < 1e-13);
    for (unsigned k = 0; k < 2 * n && k < 40; ++k) {
      const Point v = integrate_unit_interval([k](double t) { return Point{std::pow(t, k)}; }, 1, n);
      CHECK(std::abs(v[0] - 1.0 / (k + 1)) < 1e-13);
    }
  }
}

TEST_CASE("order 32 integrates exp and sin to double precision") {
  const Point e = integrate_unit_interval([](double t) { return Point{std::exp(t), std::sin(t)}; }, 2, 32);
  CHECK(std::abs(e[0] - (std::exp(1.0) - 1.0)) < 1e-14);
  CHECK(std::abs(e[1] - (1.0 - std::cos(1.0))) < 1e-14);
}

TEST_CASE("Richardson extrapolation beats a plain central difference") {
  const SmoothMap f = scalar("exp", [](double x) { return std::exp(x); });
  QuadratureConfig plain;
  plain.richardson_levels = 0;
  plain.fd_step = 1e-2;
  QuadratureConfig rich = plain;
  rich.richardson_levels = 2;
  const double exact = std::exp(0.7);
  const double e0 = std::abs(fd_directional(f, {0.7}, {1.0}, plain)[0] - exact);
  const double e2 = std::abs(fd_directional(f, {0.7}, {1.0}, rich)[0] - exact);
  CHECK(e0 > 1e-6);
  CHECK(e2 < 1e-9);
}

TEST_CASE("exact derivatives of the corpus match finite differences") {
  const QuadratureConfig q;
  Rng rng(17);
  for (const auto& f : builtin_corpus()) {
    REQUIRE(f.exact_derivative);
    for (int i = 0; i < 50; ++i) {
      const Point x = random_point(rng, f.in_dim), v = random_point(rng, f.in_dim);
      const auto est = directional_derivative(f, x, v, q);
      REQUIRE(est.fd_residual);
      INFO(f.label);
      CHECK(within(*est.fd_residual, inf_norm(est.value), q.tol_abs, q.tol_derivative));
    }
  }
}

TEST_CASE("a wrong exact derivative is caught by the finite-difference probe") {
  SmoothMap f = scalar("cube", [](double x) { return x * x * x; });
  f.exact_derivative = [](const Point& x, const Point& v) { return Point{2.0 * x[0] * v[0]}; };
  const auto est = directional_derivative(f, {1.5}, {1.0}, QuadratureConfig{});
  CHECK(*est.fd_residual > 1.0);
}

TEST_CASE("derivative maps are linear in the direction") {
  const QuadratureConfig q;
  Rng rng(2);
  for (const auto& f : builtin_corpus()) {
    const BilinearizedMap D = derivative_map(f, q);
    for (int i = 0; i < 20; ++i) {
      const Point x = random_point(rng, f.in_dim), u = random_point(rng, f.in_dim), w = random_point(rng, f.in_dim);
      const double a = uniform_real(rng, -2, 2), b = uniform_real(rng, -2, 2);
      const Point combo = axpy(a, u, axpy(b, w, Point(f.in_dim, 0.0)));
      const Point lhs = D(x, combo);
      const Point rhs = axpy(a, D(x, u), axpy(b, D(x, w), Point(f.out_dim, 0.0)));
      CHECK(inf_norm(sub(lhs, rhs)) <= 1e-12 * (1.0 + inf_norm(lhs)));
    }
  }
}

TEST_CASE("a linear map passes through the integral") {
  const QuadratureConfig q;
  Rng rng(6);
  // L(y) = (2 y0 - y1, y0 + 3 y1), applied after D of a 2-output member
  const auto corpus = builtin_corpus();
  for (const auto& f : corpus) {
    if (f.out_dim != 2) continue;
    const BilinearizedMap g = derivative_map(f, q);
    BilinearizedMap lg = g;
    lg.joint.evaluator = [g](const Point& xy) {
      const Point y = g.joint.evaluator(xy);
      return Point{2 * y[0] - y[1], y[0] + 3 * y[1]};
    };
    for (int i = 0; i < 20; ++i) {
      const Point x = random_point(rng, f.in_dim);
      const Point s = line_integral_S(g, x, q);
      const Point ls = line_integral_S(lg, x, q);
      CHECK(std::abs(ls[0] - (2 * s[0] - s[1])) < 1e-12 * (1 + inf_norm(ls)));
      CHECK(std::abs(ls[1] - (s[0] + 3 * s[1])) < 1e-12 * (1 + inf_norm(ls)));
    }
  }
}

TEST_CASE("second fundamental theorem residuals on the corpus") {
  const QuadratureConfig q;
  Rng rng(42);
  for (const auto& f : builtin_corpus()) {
    const double tol = f.kind == MapKind::transcendental ? q.tol_transcendental : q.tol_rel;
    for (int i = 0; i < 100; ++i) {
      const Point x = random_point(rng, f.in_dim);
      INFO(f.label);
      CHECK(ftc2_residual(f, x, q) <= tol * (1.0 + inf_norm(f(x))));
    }
  }
}

TEST_CASE("Poincare residual for the gradient of x^2 y + y") {
  const QuadratureConfig q;
  const auto corpus = builtin_corpus();
  const auto it = std::find_if(corpus.begin(), corpus.end(), [](const SmoothMap& m) { return m.label == "poly2"; });
  REQUIRE(it != corpus.end());
  const BilinearizedMap F = derivative_map(*it, q);
  CHECK(poincare_residual(F, {0.3, -1.1}, {1.0, 0.5}, q) < 1e-6);
  // S[D f](x) = f(x) - f(0) here: f(0.3, -1.1) - f(0, 0) = 0.09 * -1.1 - 1.1
  const Point s = line_integral_S(F, {0.3, -1.1}, q);
  CHECK(std::abs(s[0] - (0.09 * -1.1 - 1.1)) < 1e-13);
}

TEST_CASE("non-symmetric fields fail the Poincare identity") {
  // F(x, v) = x1 v0: not a gradient, so D S[F] != F.
  SmoothMap joint;
  joint.in_dim = 4;
  joint.out_dim = 1;
  joint.label = "x1 dx0";
  joint.evaluator = [](const Point& xv) { return Point{xv[1] * xv[2]}; };
  CHECK(poincare_residual(BilinearizedMap{joint}, {1.0, 1.0}, {1.0, 0.0}, QuadratureConfig{}) > 0.1);
}

TEST_CASE("composition and product carry derivatives") {
  const auto corpus = builtin_corpus();
  const auto find = [&](const std::string& l) {
    return *std::find_if(corpus.begin(), corpus.end(), [&](const SmoothMap& m) { return m.label == l; });
  };
  const SmoothMap gf = compose(find("sin1"), find("square1"));
  CHECK(std::abs(gf({1.2})[0] - std::sin(1.44)) < 1e-15);
  REQUIRE(gf.exact_derivative);
  CHECK(std::abs((*gf.exact_derivative)({1.2}, {1.0})[0] - std::cos(1.44) * 2.4) < 1e-14);
  CHECK_THROWS_AS(compose(find("sin1"), find("lin2")), DimensionMismatch);
  CHECK_THROWS_AS(product(find("sin1"), find("poly2")), DimensionMismatch);
}

TEST_CASE("evaluation errors") {
  const SmoothMap bad = scalar("log", [](double x) { return std::log(x); });
  CHECK_THROWS_AS(bad({-1.0}), NonFinite);
  CHECK_THROWS_AS(bad({1.0, 2.0}), DimensionMismatch);
  QuadratureConfig q;
  q.order = 1;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  q = QuadratureConfig{};
  q.tol_rel = 0;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
}

TEST_CASE("corpus covers dimensions one to three") {
  std::size_t dims[4] = {0, 0, 0, 0};
  for (const auto& f : builtin_corpus()) ++dims[f.in_dim];
  CHECK(dims[1] >= 4);
  CHECK(dims[2] >= 4);
  CHECK(dims[3] >= 4);
}
