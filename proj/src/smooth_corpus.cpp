#include <cmath>

#include "dlcat/smoothnum.hpp"

namespace dlc::smooth {

namespace {

SmoothMap make(std::string label, std::size_t in, std::size_t out, MapKind kind, Evaluator f, DerivativeFn df) {
  SmoothMap m;
  m.in_dim = in;
  m.out_dim = out;
  m.label = std::move(label);
  m.kind = kind;
  m.evaluator = std::move(f);
  m.exact_derivative = std::move(df);
  return m;
}

}  // namespace

std::vector<SmoothMap> builtin_corpus() {
  using P = Point;
  using K = MapKind;
  std::vector<SmoothMap> c;

  // dimension 1
  c.push_back(make("id1", 1, 1, K::linear, [](const P& x) { return x; }, [](const P&, const P& v) { return v; }));
  c.push_back(make(
      "const1", 1, 1, K::constant, [](const P&) { return P{3.5}; }, [](const P&, const P&) { return P{0.0}; }));
  c.push_back(make(
      "square1", 1, 1, K::polynomial, [](const P& x) { return P{x[0] * x[0]}; },
      [](const P& x, const P& v) { return P{2.0 * x[0] * v[0]}; }));
  c.push_back(make(
      "cubic1", 1, 1, K::polynomial, [](const P& x) { return P{x[0] * x[0] * x[0] - 2.0 * x[0] + 1.0}; },
      [](const P& x, const P& v) { return P{(3.0 * x[0] * x[0] - 2.0) * v[0]}; }));
  c.push_back(make(
      "sin1", 1, 1, K::transcendental, [](const P& x) { return P{std::sin(x[0])}; },
      [](const P& x, const P& v) { return P{std::cos(x[0]) * v[0]}; }));
  c.push_back(make(
      "exp1", 1, 1, K::transcendental, [](const P& x) { return P{std::exp(x[0])}; },
      [](const P& x, const P& v) { return P{std::exp(x[0]) * v[0]}; }));

  // dimension 2
  c.push_back(make(
      "lin2", 2, 2, K::linear, [](const P& x) { return P{2.0 * x[0] - x[1], x[0] + 3.0 * x[1]}; },
      [](const P&, const P& v) { return P{2.0 * v[0] - v[1], v[0] + 3.0 * v[1]}; }));
  c.push_back(make(
      "const2", 2, 2, K::constant, [](const P&) { return P{1.0, -2.0}; },
      [](const P&, const P&) { return P{0.0, 0.0}; }));
  c.push_back(make(
      "poly2", 2, 1, K::polynomial, [](const P& x) { return P{x[0] * x[0] * x[1] + x[1]}; },
      [](const P& x, const P& v) { return P{2.0 * x[0] * x[1] * v[0] + (x[0] * x[0] + 1.0) * v[1]}; }));
  c.push_back(make(
      "quartic2", 2, 1, K::polynomial,
      [](const P& x) { return P{std::pow(x[0], 4) - std::pow(x[1], 4) + x[0] * std::pow(x[1], 3)}; },
      [](const P& x, const P& v) {
        return P{(4.0 * std::pow(x[0], 3) + std::pow(x[1], 3)) * v[0] +
                 (-4.0 * std::pow(x[1], 3) + 3.0 * x[0] * x[1] * x[1]) * v[1]};
      }));
  c.push_back(make(
      "trig2", 2, 1, K::transcendental, [](const P& x) { return P{std::sin(x[0]) * std::cos(x[1])}; },
      [](const P& x, const P& v) {
        return P{std::cos(x[0]) * std::cos(x[1]) * v[0] - std::sin(x[0]) * std::sin(x[1]) * v[1]};
      }));

  // dimension 3
  c.push_back(make(
      "lin3", 3, 1, K::linear, [](const P& x) { return P{x[0] - 2.0 * x[1] + 0.5 * x[2]}; },
      [](const P&, const P& v) { return P{v[0] - 2.0 * v[1] + 0.5 * v[2]}; }));
  c.push_back(make(
      "const3", 3, 1, K::constant, [](const P&) { return P{0.25}; }, [](const P&, const P&) { return P{0.0}; }));
  c.push_back(make(
      "poly3", 3, 1, K::polynomial, [](const P& x) { return P{x[0] * x[1] * x[2] + std::pow(x[0], 4)}; },
      [](const P& x, const P& v) {
        return P{(x[1] * x[2] + 4.0 * std::pow(x[0], 3)) * v[0] + x[0] * x[2] * v[1] + x[0] * x[1] * v[2]};
      }));
  c.push_back(make(
      "exp3", 3, 1, K::transcendental,
      [](const P& x) { return P{std::exp(0.3 * x[0] + 0.2 * x[1] - 0.1 * x[2])}; },
      [](const P& x, const P& v) {
        const double e = std::exp(0.3 * x[0] + 0.2 * x[1] - 0.1 * x[2]);
        return P{e * (0.3 * v[0] + 0.2 * v[1] - 0.1 * v[2])};
      }));
  c.push_back(make(
      "mix3", 3, 2, K::transcendental, [](const P& x) { return P{x[0] * x[1], std::sin(x[2]) + x[0]}; },
      [](const P& x, const P& v) { return P{x[1] * v[0] + x[0] * v[1], v[0] + std::cos(x[2]) * v[2]}; }));

  return c;
}

}  // namespace dlc::smooth
