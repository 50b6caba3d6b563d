// Law checks for the polynomial model. Every law is stated in module
// application order: a diagrammatic composite "A B" is evaluated as A(B(p)).

#include <algorithm>

#include "dlcat/lawsuite.hpp"
#include "dlcat/polyform.hpp"
#include "dlcat/random.hpp"

namespace dlc::laws {

namespace {

using namespace dlc::poly;

template <Rig R>
struct PolyOps {
  std::function<PolyBundle<R>(const Polynomial<R>&)> grad;
  std::function<Polynomial<R>(const PolyBundle<R>&)> mul_in;
  std::function<Polynomial<R>(const Polynomial<R>&)> eval0;
  std::function<Polynomial<R>(const Polynomial<R>&)> integrate1;
  std::function<Polynomial<R>(const PolyBundle<R>&)> antiderivative;
  std::function<Polynomial<R>(const Polynomial<R>&)> k_inverse;
  std::function<Polynomial<R>(const Polynomial<R>&)> j_inverse;

  Polynomial<R> k(const Polynomial<R>& p) const { return mul_in(grad(p)) + eval0(p); }
  Polynomial<R> j(const Polynomial<R>& p) const { return mul_in(grad(p)) + p; }
  Polynomial<R> d1(const Polynomial<R>& p) const { return grad(p)[0]; }
  Polynomial<R> x_times(const Polynomial<R>& p) const { return mul_in(PolyBundle<R>(std::vector{p})); }
};

template <Rig R>
PolyOps<R> standard_ops() {
  return {[](const Polynomial<R>& p) { return grad(p); },
          [](const PolyBundle<R>& b) { return mul_in(b); },
          [](const Polynomial<R>& p) { return eval0(p); },
          [](const Polynomial<R>& p) { return integrate1(p); },
          [](const PolyBundle<R>& b) { return antiderivative(b); },
          [](const Polynomial<R>& p) { return k_inverse(p); },
          [](const Polynomial<R>& p) { return j_inverse(p); }};
}

/// d with the constant term copied into every component.
template <Rig R>
PolyOps<R> sabotaged_ops() {
  PolyOps<R> ops = standard_ops<R>();
  ops.grad = [](const Polynomial<R>& p) {
    PolyBundle<R> b = grad(p);
    for (auto& c : b.components) c += eval0(p);
    return b;
  };
  return ops;
}

template <Rig R>
struct PolyGen {
  std::size_t vars;
  unsigned max_degree;
  bool allow_zero_arity;

  std::size_t arity(Rng& rng) const {
    return static_cast<std::size_t>(uniform_int(rng, allow_zero_arity ? 0 : 1, static_cast<std::int64_t>(vars)));
  }

  R coeff(Rng& rng) const {
    for (int tries = 0; tries < 8; ++tries) {
      R c = R::sample(rng);
      if (!(c == R::zero())) return c;
    }
    return R::one();
  }

  MultiIndex index(Rng& rng, std::size_t n, unsigned max_deg) const {
    MultiIndex m(n);
    if (n == 0) return m;
    const auto d = static_cast<unsigned>(uniform_int(rng, 0, max_deg));
    for (unsigned k = 0; k < d; ++k) {
      const auto i = static_cast<std::size_t>(uniform_below(rng, n));
      m.set(i, m[i] + 1);
    }
    return m;
  }

  Polynomial<R> poly(Rng& rng, std::size_t n, unsigned max_deg, unsigned max_terms = 6) const {
    Polynomial<R> p(n);
    const auto terms = uniform_int(rng, 0, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) p.add_term(index(rng, n, max_deg), coeff(rng));
    return p;
  }
  Polynomial<R> poly(Rng& rng, std::size_t n) const { return poly(rng, n, max_degree); }
  Polynomial<R> poly(Rng& rng) const { return poly(rng, arity(rng)); }

  PolyBundle<R> bundle(Rng& rng, std::size_t n) const {
    PolyBundle<R> b(n);
    for (auto& c : b.components) c = poly(rng, n, max_degree, 4);
    return b;
  }

  PolyMap<R> map(Rng& rng, std::size_t in, std::size_t out, unsigned deg, unsigned terms) const {
    std::vector<Polynomial<R>> coords;
    for (std::size_t i = 0; i < out; ++i) coords.push_back(poly(rng, in, deg, terms));
    return PolyMap<R>(in, std::move(coords));
  }
};

template <class T>
std::optional<Counterexample> differ(const T& lhs, const T& rhs, const std::string& input) {
  if (lhs == rhs) return std::nullopt;
  return Counterexample{input, lhs.render(), rhs.render()};
}

template <Rig R>
std::string show(const Polynomial<R>& p) {
  return "p = " + p.render();
}

/// Points on one variable, for unit-level laws.
template <Rig R>
Polynomial<R> unit_poly(const PolyGen<R>& gen, Rng& rng) {
  return gen.poly(rng, 1);
}

template <Rig R>
Polynomial<R> one_var_eval_at_one(const Polynomial<R>& p) {
  return eval_at_one(PolyTensor<R>{1, p});
}

/// Lifts q(x) to a polynomial in (x, v) with 2n variables.
template <Rig R>
Polynomial<R> lift_x(const Polynomial<R>& q, std::size_t n) {
  std::vector<Polynomial<R>> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial<R>::variable(2 * n, i));
  return substitute(q, images, 2 * n);
}

template <Rig R>
ModelBinding build_poly(const PolyConfig& cfg) {
  ModelBinding b;
  b.model = "poly";
  b.semiring = R::descriptor().name;
  b.params = {{"vars", cfg.vars}, {"max_degree", cfg.max_degree}};
  if (cfg.sabotage_constants) b.params["sabotage"] = "d-keeps-constants";
  b.exact = true;
  b.default_cases = 200;

  const PolyGen<R> gen{cfg.vars, cfg.max_degree, cfg.allow_zero_arity};
  const PolyOps<R> ops = cfg.sabotage_constants ? sabotaged_ops<R>() : standard_ops<R>();
  auto& c = b.checks;

  c[LawId::L1] = [gen](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const std::size_t n = uniform_int(rng, 1, 3), m = uniform_int(rng, 1, 3), k = uniform_int(rng, 1, 3),
                        l = uniform_int(rng, 1, 3);
      const PolyMap<R> f = gen.map(rng, n, m, 2, 3), g = gen.map(rng, m, k, 2, 3), h = gen.map(rng, k, l, 2, 3);
      const std::string in = "f = " + f.render() + ", g = " + g.render() + ", h = " + h.render();
      if (auto cx = differ(cokleisli_compose(h, cokleisli_compose(g, f)), cokleisli_compose(cokleisli_compose(h, g), f),
                           in))
        return cx;
      if (auto cx = differ(cokleisli_compose(PolyMap<R>::identity(m), f), f, in)) return cx;
      if (auto cx = differ(cokleisli_compose(f, PolyMap<R>::identity(n)), f, in)) return cx;
      // Comonoid structure, read through its dual: multiplication is
      // associative and commutative with unit 1.
      const std::size_t a = gen.arity(rng);
      const Polynomial<R> p = gen.poly(rng, a, 3), q = gen.poly(rng, a, 3), r = gen.poly(rng, a, 3);
      const std::string in2 = "p = " + p.render() + ", q = " + q.render() + ", r = " + r.render();
      if (auto cx = differ(poly_mul(poly_mul(p, q), r), poly_mul(p, poly_mul(q, r)), in2)) return cx;
      if (auto cx = differ(poly_mul(p, q), poly_mul(q, p), in2)) return cx;
      return differ(poly_mul(p, Polynomial<R>::constant(a, R::one())), p, in2);
    });
  };

  c[LawId::L2] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = gen.poly(rng);
      const Polynomial<R> constant = eval0(p);
      return differ(ops.grad(constant), PolyBundle<R>(p.arity()), "p = " + constant.render());
    });
  };

  c[LawId::L3] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const std::size_t n = gen.arity(rng);
      const Polynomial<R> p = gen.poly(rng, n), q = gen.poly(rng, n);
      const PolyBundle<R> gp = ops.grad(p), gq = ops.grad(q);
      PolyBundle<R> rhs(n);
      for (std::size_t i = 0; i < n; ++i) rhs[i] = p * gq[i] + q * gp[i];
      return differ(ops.grad(p * q), rhs, "p = " + p.render() + ", q = " + q.render());
    });
  };

  c[LawId::L4] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = gen.poly(rng);
      const std::size_t n = p.arity();
      Polynomial<R> linear(n);
      PolyBundle<R> expected(n);
      for (const auto& [m, v] : p.terms()) {
        if (m.degree() > 1) continue;
        linear.add_term(m, v);
        if (m.degree() == 1)
          for (std::size_t i = 0; i < n; ++i)
            if (m[i] == 1) expected[i] = Polynomial<R>::constant(n, v);
      }
      return differ(ops.grad(linear), expected, show(linear));
    });
  };

  c[LawId::L5] = [gen](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const std::size_t n = uniform_int(rng, 1, 3), m = uniform_int(rng, 1, 3), k = uniform_int(rng, 1, 3);
      const PolyMap<R> f = gen.map(rng, n, m, 3, 3), g = gen.map(rng, m, k, 3, 3);
      // <f o pi_0, D[f]> : R^{2n} -> R^{2m}
      const PolyMap<R> df = cartesian_derivative(f);
      std::vector<Polynomial<R>> pair;
      for (const auto& fc : f.coordinates) pair.push_back(lift_x(fc, n));
      for (const auto& dc : df.coordinates) pair.push_back(dc);
      const PolyMap<R> rhs = cokleisli_compose(cartesian_derivative(g), PolyMap<R>(2 * n, std::move(pair)));
      const PolyMap<R> lhs = cartesian_derivative(cokleisli_compose(g, f));
      return differ(lhs, rhs, "f = " + f.render() + ", g = " + g.render());
    });
  };

  c[LawId::L6] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = gen.poly(rng);
      const PolyBundle<R> g = ops.grad(p);
      for (std::size_t i = 0; i < p.arity(); ++i)
        for (std::size_t j = i + 1; j < p.arity(); ++j)
          if (auto cx = differ(ops.grad(g[j])[i], ops.grad(g[i])[j], show(p))) return cx;
      return std::nullopt;
    });
  };

  c[LawId::L7] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const std::size_t n = gen.arity(rng);
      const PolyBundle<R> bundle = gen.bundle(rng, n);
      // (d° x 1)(1 x sigma)(d x 1): component j is sum_i x_i d_j b_i.
      std::vector<PolyBundle<R>> grads;
      for (const auto& comp : bundle.components) grads.push_back(ops.grad(comp));
      PolyBundle<R> rhs(n);
      for (std::size_t j = 0; j < n; ++j) {
        PolyBundle<R> swapped(n);
        for (std::size_t i = 0; i < n; ++i) swapped[i] = grads[i][j];
        rhs[j] = ops.mul_in(swapped) + bundle[j];
      }
      return differ(ops.grad(ops.mul_in(bundle)), rhs, "b = " + bundle.render());
    });
  };

  c[LawId::L8] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = gen.poly(rng);
      const auto euler_k = scale_by_degree(p, [](unsigned n) { return n == 0 ? R::one() : nat_value<R>(n); });
      const auto euler_j = scale_by_degree(p, [](unsigned n) { return nat_value<R>(n + 1); });
      if (auto cx = differ(ops.k(p), euler_k, show(p))) return cx;
      return differ(ops.j(p), euler_j, show(p));
    });
  };

  c[LawId::L9] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = gen.poly(rng);
      const std::string in = show(p);
      const Polynomial<R> z = ops.eval0(p);
      if (auto cx = differ(ops.k(z), z, in)) return cx;
      if (auto cx = differ(ops.eval0(ops.k(p)), z, in)) return cx;
      if (auto cx = differ(ops.j(z), z, in)) return cx;
      if (auto cx = differ(ops.eval0(ops.j(p)), z, in)) return cx;
      // K o d° = d° o (J x 1) on a bundle, and d o K = (J x 1) o d.
      const PolyBundle<R> b = gen.bundle(rng, p.arity());
      PolyBundle<R> jb(b.arity());
      for (std::size_t i = 0; i < b.arity(); ++i) jb[i] = ops.j(b[i]);
      if (auto cx = differ(ops.k(ops.mul_in(b)), ops.mul_in(jb), "b = " + b.render())) return cx;
      const PolyBundle<R> g = ops.grad(p);
      PolyBundle<R> jg(g.arity());
      for (std::size_t i = 0; i < g.arity(); ++i) jg[i] = ops.j(g[i]);
      return differ(ops.grad(ops.k(p)), jg, in);
    });
  };

  c[LawId::L10] = [gen](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = gen.poly(rng);
      if (auto cx = differ(eval_at_one(t_grade(p)), p, show(p))) return cx;
      // m_R eps_R = 1 and m_R e_R = 1 on a scalar r.
      const R r = gen.coeff(rng);
      const Polynomial<R> scalar = Polynomial<R>::constant(0, r);
      if (auto cx = differ(one_var_eval_at_one(Polynomial<R>::variable(1, 0).scaled(r)), scalar, "r = " + to_string(r)))
        return cx;
      if (auto cx = differ(one_var_eval_at_one(Polynomial<R>::constant(1, r)), scalar, "r = " + to_string(r))) return cx;
      // m_R Delta_R = m_R x m_R and m_R d°_R = m_R.
      const Polynomial<R> q = unit_poly(gen, rng), s = unit_poly(gen, rng);
      const std::string in = "q = " + q.render() + ", s = " + s.render();
      if (auto cx = differ(one_var_eval_at_one(q * s), one_var_eval_at_one(q) * one_var_eval_at_one(s), in)) return cx;
      return differ(one_var_eval_at_one(mul_x(q)), one_var_eval_at_one(q), in);
    });
  };

  c[LawId::L11] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = gen.poly(rng);
      const auto k = [&](const Polynomial<R>& q) { return ops.k(q); };
      const PolyTensor<R> graded = t_grade(p);
      const std::string in = show(p);
      auto render = [](const PolyTensor<R>& t) { return t.render({"t"}, default_names(t.right_arity())); };
      const PolyTensor<R> left = graded.map_left(k), middle = t_grade(ops.k(p)), right = graded.map_right(k);
      if (!(left == middle)) return Counterexample{in, render(left), render(middle)};
      if (!(middle == right)) return Counterexample{in, render(middle), render(right)};
      return std::nullopt;
    });
  };

  c[LawId::L12] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = unit_poly(gen, rng);
      return differ(ops.integrate1(ops.d1(p)) + ops.eval0(p), p, show(p));
    });
  };

  c[LawId::L13] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = unit_poly(gen, rng);
      return differ(ops.integrate1(ops.j(p)), ops.x_times(p), show(p));
    });
  };

  c[LawId::L14] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = unit_poly(gen, rng);
      const std::string in = show(p);
      const UnitIntegral<R> s = ops.integrate1;
      const Polynomial<R> formula = from_unit_j_inverse(p, s);
      if (auto cx = differ(formula, ops.j_inverse(p), in)) return cx;
      if (auto cx = differ(ops.j(formula), p, in)) return cx;
      if (auto cx = differ(from_unit_j_inverse(ops.j(p), s), p, in)) return cx;
      return differ(s(p), ops.x_times(from_unit_j_inverse(p, s)), in);
    });
  };

  c[LawId::L15] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = unit_poly(gen, rng);
      const std::string in = show(p);
      const Polynomial<R> formula = ops.integrate1(ops.j_inverse(ops.d1(p))) + ops.eval0(p);
      if (auto cx = differ(formula, ops.k_inverse(p), in)) return cx;
      if (auto cx = differ(ops.k(formula), p, in)) return cx;
      return differ(ops.integrate1(p), ops.k_inverse(ops.x_times(p)), in);
    });
  };

  c[LawId::L16] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = unit_poly(gen, rng);
      const std::string in = show(p);
      // Given s_R: K^{-1}_R := s_R J^{-1}_R d_R + !(0), with J^{-1}_R itself built from s_R.
      const UnitIntegral<R> s = ops.integrate1;
      auto k_inv = [&](const Polynomial<R>& q) { return s(from_unit_j_inverse(ops.d1(q), s)) + ops.eval0(q); };
      if (auto cx = differ(ops.k(k_inv(p)), p, in)) return cx;
      if (auto cx = differ(k_inv(ops.k(p)), p, in)) return cx;
      // Given K^{-1}: s_R := K^{-1}_R d°_R satisfies s_R d_R + !(0) = 1, at the unit
      // and, through the reconstruction, on every arity.
      const UnitIntegral<R> extracted = [&](const Polynomial<R>& q) { return ops.k_inverse(ops.x_times(q)); };
      if (auto cx = differ(extracted(ops.d1(p)) + ops.eval0(p), p, in)) return cx;
      const Polynomial<R> q = gen.poly(rng);
      return differ(ops.k(from_unit_k_inverse(q, extracted)), q, show(q));
    });
  };

  c[LawId::L17] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = gen.poly(rng);
      const UnitIntegral<R> s = ops.integrate1;
      if (auto cx = differ(from_unit_k_inverse(p, s), ops.k_inverse(p), show(p))) return cx;
      if (auto cx = differ(from_unit_j_inverse(p, s), ops.j_inverse(p), show(p))) return cx;
      const PolyBundle<R> b = gen.bundle(rng, p.arity());
      return differ(from_unit_integral(b, s), ops.antiderivative(b), "b = " + b.render());
    });
  };

  c[LawId::L18] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = gen.poly(rng);
      return differ(ops.antiderivative(ops.grad(p)) + ops.eval0(p), p, show(p));
    });
  };

  c[LawId::L19] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = unit_poly(gen, rng);
      return differ(ops.d1(ops.integrate1(p)), p, show(p));
    });
  };

  c[LawId::L20] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      // Exact bundles satisfy the symmetry premise; check it rather than assume it.
      const Polynomial<R> q = gen.poly(rng);
      const PolyBundle<R> b = ops.grad(q);
      const std::string in = "b = " + b.render();
      for (std::size_t i = 0; i < b.arity(); ++i)
        for (std::size_t j = i + 1; j < b.arity(); ++j)
          if (!(partial(b[i], j) == partial(b[j], i)))
            return Counterexample{in + " (premise)", partial(b[i], j).render(), partial(b[j], i).render()};
      return differ(ops.grad(ops.antiderivative(b)), b, in);
    });
  };

  c[LawId::L21] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = gen.poly(rng);
      const Polynomial<R> q = p + Polynomial<R>::constant(p.arity(), gen.coeff(rng));
      const std::string in = "p = " + p.render() + ", q = " + q.render();
      if (!(ops.grad(p) == ops.grad(q))) return Counterexample{in + " (premise)", ops.grad(p).render(), ops.grad(q).render()};
      if (auto cx = differ(p + ops.eval0(q), q + ops.eval0(p), in)) return cx;
      if constexpr (RigWithNegation<R>) {
        if (auto cx = differ(p - ops.eval0(p), q - ops.eval0(q), in)) return cx;
      }
      return std::nullopt;
    });
  };

  c[LawId::L22] = [gen](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = gen.poly(rng);
      const auto left = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(p.arity())));
      if (auto cx = differ(seely_merge(seely_split(p, left)), p, show(p))) return cx;
      const PolyTensor<R> t{left, gen.poly(rng, p.arity())};
      const PolyTensor<R> back = seely_split(seely_merge(t), left);
      if (back == t) return std::nullopt;
      return Counterexample{"t = " + t.joint.render(), back.joint.render(), t.joint.render()};
    });
  };

  c[LawId::L23] = [gen, ops](std::size_t cases, std::uint64_t seed) {
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const Polynomial<R> p = gen.poly(rng);
      const std::size_t n = p.arity();
      const std::size_t m = uniform_int(rng, 1, static_cast<std::int64_t>(gen.vars));
      std::vector<std::vector<R>> M(m, std::vector<R>(n, R::zero()));
      std::string in = show(p) + ", M = [";
      for (std::size_t i = 0; i < m; ++i) {
        in += i ? "; " : "";
        for (std::size_t j = 0; j < n; ++j) {
          M[i][j] = R::sample(rng);
          in += (j ? " " : "") + to_string(M[i][j]);
        }
      }
      in += "]";
      const PolyBundle<R> g = ops.grad(p);
      PolyBundle<R> rhs(m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) rhs[i] += apply_linear(M, g[j]).scaled(M[i][j]);
      return differ(ops.grad(apply_linear(M, p)), rhs, in);
    });
  };

  for (const auto& [id, _] : c) b.mask.insert(id);
  b.unsupported[LawId::L24] =
      "the idempotent specialization is a statement about the relational model; the polynomial model does not "
      "bind it";
  return b;
}

}  // namespace

ModelBinding make_poly_binding(const PolyConfig& cfg) {
  if (cfg.vars == 0) throw std::invalid_argument("--vars must be at least 1");
  if (cfg.semiring == "nonneg-rational") return build_poly<NonNegRational>(cfg);
  if (cfg.semiring == "rational") return build_poly<Rational>(cfg);
  if (cfg.semiring == "boolean") return build_poly<Boolean>(cfg);
  if (cfg.semiring == "natural") return build_poly<Natural>(cfg);
  throw std::invalid_argument("unknown semiring '" + cfg.semiring + "'");
}

}  // namespace dlc::laws
