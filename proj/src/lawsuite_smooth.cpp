// Law checks for the numeric smooth model. Each check visits every corpus
// member (or pair) that fits the configured dimension at `cases` random
// points in [-2, 2]^n; the reported case count is the number of evaluations.

#include <cmath>
#include <cstdio>

#include "dlcat/lawsuite.hpp"
#include "dlcat/random.hpp"
#include "dlcat/smoothnum.hpp"

namespace dlc::laws {

namespace {

using namespace dlc::smooth;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string vec(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + num(p[i]);
  return s + ")";
}

Point random_point(Rng& rng, std::size_t n) {
  Point p(n);
  for (double& v : p) v = uniform_real(rng, -2.0, 2.0);
  return p;
}

double fd_tol_for(const SmoothMap& f, const QuadratureConfig& q, const std::optional<double>& override_tol) {
  if (override_tol) return *override_tol;
  return f.kind == MapKind::transcendental ? q.tol_transcendental : q.tol_rel;
}

struct SmoothContext {
  std::vector<SmoothMap> members;
  QuadratureConfig q;
  std::optional<double> ftc_tol;
};

/// Compares two vectors under the mixed tolerance; fills a counterexample on failure.
std::optional<Counterexample> close(const Point& lhs, const Point& rhs, double tol_abs, double tol_rel,
                                    const std::string& input) {
  const double err = inf_norm(sub(lhs, rhs));
  if (within(err, std::max(inf_norm(lhs), inf_norm(rhs)), tol_abs, tol_rel)) return std::nullopt;
  return Counterexample{input + " (error " + num(err) + ")", vec(lhs), vec(rhs)};
}

/// Runs `body(member, x, rng)` on every member accepted by `keep`, `cases` points each.
template <class Keep, class Body>
LawOutcome over_members(const SmoothContext& ctx, std::size_t cases, std::uint64_t seed, Keep&& keep, Body&& body) {
  Rng rng(seed);
  LawOutcome out;
  for (const auto& f : ctx.members) {
    if (!keep(f)) continue;
    for (std::size_t i = 0; i < cases; ++i) {
      ++out.cases;
      if (auto cx = body(f, random_point(rng, f.in_dim), rng)) {
        out.counterexample = std::move(cx);
        return out;
      }
    }
  }
  return out;
}

std::string at(const SmoothMap& f, const Point& x) { return f.label + " at x = " + vec(x); }
std::string at(const SmoothMap& f, const Point& x, const Point& v) { return at(f, x) + ", v = " + vec(v); }

ModelBinding build_smooth(const SmoothConfig& cfg) {
  ModelBinding b;
  b.model = "smooth";
  b.semiring = "real";
  b.params = {{"dim", cfg.dim}, {"order", cfg.order}};
  if (cfg.tol) b.params["tol"] = *cfg.tol;
  b.exact = false;
  b.default_cases = 100;

  SmoothContext ctx;
  ctx.q.order = cfg.order;
  ctx.ftc_tol = cfg.tol;
  ctx.q.validate();
  if (cfg.tol && !(*cfg.tol > 0)) throw std::invalid_argument("--tol must be positive");
  for (auto& m : builtin_corpus())
    if (m.in_dim <= cfg.dim) ctx.members.push_back(std::move(m));
  const auto& q = ctx.q;
  auto& c = b.checks;

  c[LawId::L2] = [ctx, q](std::size_t cases, std::uint64_t seed) {
    return over_members(
        ctx, cases, seed, [](const SmoothMap& f) { return f.kind == MapKind::constant; },
        [&](const SmoothMap& f, const Point& x, Rng& rng) -> std::optional<Counterexample> {
          const Point v = random_point(rng, f.in_dim);
          const auto est = directional_derivative(f, x, v, q);
          const Point zero(f.out_dim, 0.0);
          if (auto cx = close(est.value, zero, q.tol_abs, q.tol_derivative, "exact D " + at(f, x, v))) return cx;
          return close(fd_directional(f, x, v, q), zero, q.tol_abs, q.tol_derivative, "fd D " + at(f, x, v));
        });
  };

  c[LawId::L3] = [ctx, q](std::size_t cases, std::uint64_t seed) {
    Rng rng(seed);
    LawOutcome out;
    for (const auto& f : ctx.members)
      for (const auto& g : ctx.members) {
        if (f.out_dim != 1 || g.out_dim != 1 || f.in_dim != g.in_dim) continue;
        const SmoothMap fg = product(f, g);
        for (std::size_t i = 0; i < cases; ++i) {
          ++out.cases;
          const Point x = random_point(rng, f.in_dim), v = random_point(rng, f.in_dim);
          const Point lhs = fd_directional(fg, x, v, q);
          const Point rhs{f(x)[0] * (*g.exact_derivative)(x, v)[0] + g(x)[0] * (*f.exact_derivative)(x, v)[0]};
          if (auto cx = close(lhs, rhs, q.tol_abs, q.tol_derivative, "D[f*g] with " + at(fg, x, v))) {
            out.counterexample = std::move(cx);
            return out;
          }
        }
      }
    return out;
  };

  c[LawId::L4] = [ctx, q](std::size_t cases, std::uint64_t seed) {
    return over_members(
        ctx, cases, seed, [](const SmoothMap& f) { return f.kind == MapKind::linear; },
        [&](const SmoothMap& f, const Point& x, Rng& rng) -> std::optional<Counterexample> {
          const Point v = random_point(rng, f.in_dim);
          const Point expected = sub(f(v), f(Point(f.in_dim, 0.0)));
          if (auto cx = close((*f.exact_derivative)(x, v), expected, q.tol_abs, q.tol_derivative, "exact D " + at(f, x, v)))
            return cx;
          return close(fd_directional(f, x, v, q), expected, q.tol_abs, q.tol_derivative, "fd D " + at(f, x, v));
        });
  };

  c[LawId::L5] = [ctx, q](std::size_t cases, std::uint64_t seed) {
    Rng rng(seed);
    LawOutcome out;
    for (const auto& f : ctx.members)
      for (const auto& g : ctx.members) {
        if (g.in_dim != f.out_dim) continue;
        const SmoothMap gf = compose(g, f);
        for (std::size_t i = 0; i < cases; ++i) {
          ++out.cases;
          const Point x = random_point(rng, f.in_dim), v = random_point(rng, f.in_dim);
          const Point lhs = fd_directional(gf, x, v, q);
          const Point rhs = (*g.exact_derivative)(f(x), (*f.exact_derivative)(x, v));
          if (auto cx = close(lhs, rhs, q.tol_abs, q.tol_derivative, "D[g o f] with " + at(gf, x, v))) {
            out.counterexample = std::move(cx);
            return out;
          }
        }
      }
    return out;
  };

  c[LawId::L6] = [ctx, q](std::size_t cases, std::uint64_t seed) {
    return over_members(
        ctx, cases, seed, [](const SmoothMap&) { return true; },
        [&](const SmoothMap& f, const Point& x, Rng& rng) -> std::optional<Counterexample> {
          const Point u = random_point(rng, f.in_dim), w = random_point(rng, f.in_dim);
          // Outer derivative by differences of the exact inner one.
          auto along = [&](const Point& inner) {
            SmoothMap g;
            g.in_dim = f.in_dim;
            g.out_dim = f.out_dim;
            g.label = "D[" + f.label + "](-, u)";
            g.evaluator = [&f, inner](const Point& y) { return (*f.exact_derivative)(y, inner); };
            return g;
          };
          const Point lhs = fd_directional(along(u), x, w, q);
          const Point rhs = fd_directional(along(w), x, u, q);
          return close(lhs, rhs, q.tol_abs, q.tol_second_order,
                       "D_w D_u vs D_u D_w for " + at(f, x) + ", u = " + vec(u) + ", w = " + vec(w));
        });
  };

  c[LawId::L18] = [ctx, q](std::size_t cases, std::uint64_t seed) {
    return over_members(
        ctx, cases, seed, [](const SmoothMap&) { return true; },
        [&](const SmoothMap& f, const Point& x, Rng&) -> std::optional<Counterexample> {
          const Point lhs = axpy(1.0, line_integral_S(derivative_map(f, q), x, q), f(Point(f.in_dim, 0.0)));
          return close(lhs, f(x), q.tol_abs, fd_tol_for(f, q, ctx.ftc_tol), "S[D f] + f(0) vs f for " + at(f, x));
        });
  };

  c[LawId::L19] = [ctx, q](std::size_t cases, std::uint64_t seed) {
    return over_members(
        ctx, cases, seed, [](const SmoothMap& f) { return f.in_dim == 1; },
        [&](const SmoothMap& f, const Point& x, Rng& rng) -> std::optional<Counterexample> {
          // F(x, v) = f(x) v; S[F] is an antiderivative of f.
          SmoothMap joint;
          joint.in_dim = 2;
          joint.out_dim = f.out_dim;
          joint.label = f.label + " dx";
          joint.kind = f.kind;
          joint.evaluator = [&f](const Point& xv) {
            Point y = f(Point{xv[0]});
            for (double& c : y) c *= xv[1];
            return y;
          };
          const BilinearizedMap F{joint};
          const Point v = random_point(rng, 1);
          const Point lhs = fd_directional(integral_map(F, q), x, v, q);
          return close(lhs, F(x, v), q.tol_abs, q.tol_poincare, "D[S[f dx]] vs f dx for " + at(f, x, v));
        });
  };

  c[LawId::L20] = [ctx, q](std::size_t cases, std::uint64_t seed) {
    return over_members(
        ctx, cases, seed, [](const SmoothMap& f) { return f.out_dim == 1 && f.in_dim >= 2; },
        [&](const SmoothMap& f, const Point& x, Rng& rng) -> std::optional<Counterexample> {
          const BilinearizedMap F = derivative_map(f, q);
          const Point u = random_point(rng, f.in_dim), v = random_point(rng, f.in_dim);
          // Premise: D[F(-, u)](x, v) = D[F(-, v)](x, u).
          auto slice = [&](const Point& dir) {
            SmoothMap g;
            g.in_dim = f.in_dim;
            g.out_dim = 1;
            g.label = "F(-, dir)";
            g.evaluator = [&F, dir](const Point& y) { return F(y, dir); };
            return g;
          };
          if (auto cx = close(fd_directional(slice(u), x, v, q), fd_directional(slice(v), x, u, q), q.tol_abs,
                              q.tol_second_order, "premise for F = D[" + at(f, x) + "], u = " + vec(u) + ", v = " + vec(v)))
            return cx;
          const Point lhs = fd_directional(integral_map(F, q), x, v, q);
          return close(lhs, F(x, v), q.tol_abs, q.tol_poincare, "D[S[F]] vs F for F = D[" + at(f, x, v) + "]");
        });
  };

  c[LawId::L21] = [ctx, q](std::size_t cases, std::uint64_t seed) {
    return over_members(
        ctx, cases, seed, [](const SmoothMap&) { return true; },
        [&](const SmoothMap& f, const Point& x, Rng& rng) -> std::optional<Counterexample> {
          const Point shift = random_point(rng, f.out_dim);
          SmoothMap g = f;
          g.label = f.label + "+c";
          g.evaluator = [&f, shift](const Point& y) { return axpy(1.0, f(y), shift); };
          const Point v = random_point(rng, f.in_dim);
          const std::string in = at(f, x, v) + ", c = " + vec(shift);
          if (auto cx = close(fd_directional(f, x, v, q), fd_directional(g, x, v, q), q.tol_abs, q.tol_derivative,
                              "premise D f = D g for " + in))
            return cx;
          const Point zero(f.in_dim, 0.0);
          return close(axpy(1.0, f(x), g(zero)), axpy(1.0, g(x), f(zero)), q.tol_abs, q.tol_rel,
                       "f + g(0) vs g + f(0) for " + in);
        });
  };

  for (const auto& [id, _] : c) b.mask.insert(id);
  for (LawId id : all_laws())
    if (!b.mask.count(id))
      b.unsupported[id] =
          "stated on the exponential or at the monoidal unit; the numeric model only has maps between Euclidean "
          "spaces";
  return b;
}

}  // namespace

ModelBinding make_smooth_binding(const SmoothConfig& cfg) {
  if (cfg.dim == 0) throw std::invalid_argument("--dim must be at least 1");
  return build_smooth(cfg);
}

}  // namespace dlc::laws
