// One PASS/FAIL line per acceptance criterion. Tolerances and time limits
// are pinned here, not taken from the library defaults.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlcat/cli.hpp"
#include "dlcat/lawsuite.hpp"
#include "dlcat/polyform.hpp"
#include "dlcat/random.hpp"
#include "dlcat/smoothnum.hpp"
#include "dlcat/wrel.hpp"

using namespace dlc;
using nlohmann::json;

namespace {

using Q = NonNegRational;

constexpr double kFtcPolyTol = 1e-8;
constexpr double kFtcTranscendentalTol = 1e-7;
constexpr double kDerivativeTol = 1e-6;
constexpr double kPoincareTol = 1e-6;

struct Verdict {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

template <Rig R>
poly::Polynomial<R> random_poly(Rng& rng, std::size_t n, unsigned max_deg) {
  poly::Polynomial<R> p(n);
  const auto terms = uniform_int(rng, 1, 6);
  for (std::int64_t t = 0; t < terms; ++t) {
    poly::MultiIndex m(n);
    const auto d = uniform_int(rng, 0, max_deg);
    for (std::int64_t k = 0; k < d; ++k) {
      const auto i = uniform_below(rng, n);
      m.set(i, m[i] + 1);
    }
    p.add_term(m, R::sample(rng));
  }
  return p;
}

Verdict ac1() {
  Verdict v;
  Rng rng(101);
  int checked = 0;
  for (; checked < 250; ++checked) {
    const std::size_t n = uniform_int(rng, 1, 4);
    const auto p = random_poly<Q>(rng, n, 6);
    if (poly::antiderivative(poly::grad(p)) + poly::eval0(p) != p) v.fail("s(d(p)) + p(0) != p for p = " + p.render());
  }
  v.note = v.ok ? std::to_string(checked) + " polynomials, exact" : v.note;
  return v;
}

Verdict ac2() {
  using namespace rel;
  Verdict v;
  const Truncation t(8, 2);
  const auto sd = compose(unit_integral<Q>(t), unit_deriving<Q>(t));
  const auto lhs = sd + unit_bang_zero<Q>(t);
  // case analysis: n = 0 is carried by !(0) alone, n != 0 by n^-1 * n
  if (!(lhs.at(0, 0) == Q::one()) || !(sd.at(0, 0) == Q::zero())) v.fail("entry n = 0");
  for (unsigned n = 1; n <= t.safe_size(); ++n)
    if (!(sd.at(n, n) == Q::one())) v.fail("entry n = " + std::to_string(n));
  const auto cmp = compare_on_band(lhs, identity<Q>(unit_bags(t)), t);
  if (!cmp.equal()) v.fail("band mismatch at row " + std::to_string(cmp.mismatch->row));
  if (v.ok) v.note = "D = 8, safe band n <= " + std::to_string(t.safe_size());
  return v;
}

Verdict ac3() {
  using namespace rel;
  Verdict v;
  const Truncation t(5, 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    const BaseSet X = BaseSet::letters(n);
    const auto id = identity<Q>(IndexSpace::bags(X, t.D));
    const auto ftc = compose(integral<Q>(X, t), deriving<Q>(X, t)) + bang_zero<Q>(X, t);
    if (!compare_on_band(ftc, id, t).equal()) v.fail("s;d + !(0) != 1 at |X| = " + std::to_string(n));
    if (!compare_on_band(compose(k_inverse<Q>(X, t), k_matrix<Q>(X, t)), id, t).equal())
      v.fail("K^-1;K != 1 at |X| = " + std::to_string(n));
  }
  if (v.ok) v.note = "|X| = 1..3, D = 5";
  return v;
}

Verdict ac4() {
  using namespace rel;
  Verdict v;
  for (std::size_t n = 1; n <= 3; ++n) {
    const BaseSet X = BaseSet::letters(n);
    const Truncation t(5, 2);
    if (!(integral<Boolean>(X, t) == coderiving<Boolean>(X, t))) v.fail("s != d° at |X| = " + std::to_string(n));
  }
  if (v.ok) v.note = "full truncated matrices, |X| = 1..3";
  return v;
}

Verdict ac5() {
  Verdict v;
  {
    using namespace poly;
    Rng rng(55);
    const UnitIntegral<Q> s_unit = default_unit_integral<Q>();
    // s_R recovered from K^-1 at the unit: K^-1 after multiplication by x
    const UnitIntegral<Q> s_from_k = [](const Polynomial<Q>& p) { return k_inverse(mul_x(p)); };
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = uniform_int(rng, 1, 3);
      const auto p = random_poly<Q>(rng, n, 6);
      PolyBundle<Q> b(n);
      for (auto& c : b.components) c = random_poly<Q>(rng, n, 5);
      if (from_unit_k_inverse(p, s_unit) != k_inverse(p)) v.fail("poly K^-1 at " + p.render());
      if (from_unit_j_inverse(p, s_unit) != j_inverse(p)) v.fail("poly J^-1 at " + p.render());
      if (from_unit_integral(b, s_unit) != antiderivative(b)) v.fail("poly s at " + b.render());
      if (from_unit_integral(b, s_from_k) != antiderivative(b)) v.fail("poly s via K^-1 at " + b.render());
      const auto u = random_poly<Q>(rng, 1, 8);
      if (s_from_k(grad1(u)) + eval0(u) != u) v.fail("poly s_R d_R + !(0) != 1 with s_R from K^-1 at " + u.render());
    }
  }
  {
    using namespace rel;
    const Truncation t(5, 2);
    const BaseSet unit = BaseSet::unit();
    const auto s_from_k = compose(k_inverse<Q>(unit, t), unit_coderiving<Q>(t));
    const auto ftc = compose(s_from_k, unit_deriving<Q>(t)) + unit_bang_zero<Q>(t);
    if (!compare_on_band(ftc, identity<Q>(unit_bags(t)), t).equal()) v.fail("rel s_R;d_R + !(0) != 1 with s_R from K^-1");
    for (std::size_t n = 1; n <= 3; ++n) {
      const BaseSet X = BaseSet::letters(n);
      for (const auto& s_unit : {unit_integral<Q>(t), s_from_k}) {
        const auto rec = reconstruct_from_unit<Q>(X, t, s_unit);
        if (!compare_on_band(rec.k_inv, k_inverse<Q>(X, t), t).equal()) v.fail("rel K^-1 at |X| = " + std::to_string(n));
        if (!compare_on_band(rec.j_inv, j_inverse<Q>(X, t), t).equal()) v.fail("rel J^-1 at |X| = " + std::to_string(n));
        if (!compare_on_band(rec.s, integral<Q>(X, t), t).equal()) v.fail("rel s at |X| = " + std::to_string(n));
      }
    }
  }
  if (v.ok) v.note = "200 polynomial inputs; |X| = 1..3 at D = 5";
  return v;
}

Verdict ac6() {
  Verdict v;
  std::size_t passed = 0, skipped = 0;
  const auto check = [&](const laws::ModelBinding& b) {
    for (const auto& r : laws::run_suite(b, b.default_cases, 42)) {
      if (r.status == LawStatus::pass) ++passed;
      if (r.status == LawStatus::skipped) ++skipped;
      if (r.status == LawStatus::fail) {
        std::cout << "    " << b.model << " " << r.id << " counterexample: " << r.counterexample->input
                  << "\n      lhs = " << r.counterexample->lhs << "\n      rhs = " << r.counterexample->rhs << "\n";
        v.fail(b.model + " " + r.id);
      }
    }
  };
  check(laws::make_poly_binding({}));
  check(laws::make_rel_binding({}));
  if (v.ok) v.note = std::to_string(passed) + " pass, " + std::to_string(skipped) + " outside the masks";
  return v;
}

Verdict ac7() {
  using namespace smooth;
  Verdict v;
  QuadratureConfig q;
  q.order = 32;
  Rng rng(7);
  double worst_ftc = 0, worst_fd = 0, worst_poincare = 0;
  const auto corpus = builtin_corpus();
  for (const auto& f : corpus) {
    const double ftc_tol = f.kind == MapKind::transcendental ? kFtcTranscendentalTol : kFtcPolyTol;
    const BilinearizedMap F = derivative_map(f, q);
    for (int i = 0; i < 100; ++i) {
      Point x(f.in_dim), dir(f.in_dim);
      for (auto& c : x) c = uniform_real(rng, -2, 2);
      for (auto& c : dir) c = uniform_real(rng, -2, 2);
      const double r = ftc2_residual(f, x, q) / (1.0 + inf_norm(f(x)));
      worst_ftc = std::max(worst_ftc, r / ftc_tol);
      if (r > ftc_tol) v.fail("ftc2 on " + f.label);

      const auto est = directional_derivative(f, x, dir, q);
      const double fd = *est.fd_residual / (1.0 + inf_norm(est.value));
      worst_fd = std::max(worst_fd, fd);
      if (fd > kDerivativeTol) v.fail("finite differences on " + f.label);

      const double p = poincare_residual(F, x, dir, q);
      worst_poincare = std::max(worst_poincare, p);
      if (p > kPoincareTol) v.fail("Poincare on " + f.label);
    }
  }
  if (v.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu maps; worst ftc2 %.2g of tol, fd %.2g, poincare %.2g", corpus.size(),
                  worst_ftc, worst_fd, worst_poincare);
    v.note = buf;
  }
  return v;
}

Verdict ac8() {
  using namespace poly;
  Verdict v;
  Rng rng(88);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = uniform_int(rng, 1, 4);
    {
      const auto p = random_poly<Rational>(rng, n, 6);
      const auto q = p + Polynomial<Rational>::constant(n, Rational::sample(rng));
      if (grad(p) != grad(q)) v.fail("constructed rational pair has different gradients");
      if (p - eval0(p) != q - eval0(q)) v.fail("p - p(0) != q - q(0) at " + p.render());
    }
    {
      const auto p = random_poly<Q>(rng, n, 6);
      const auto q = p + Polynomial<Q>::constant(n, Q::sample(rng));
      if (grad(p) != grad(q)) v.fail("constructed pair has different gradients");
      if (p + eval0(q) != q + eval0(p)) v.fail("p + q(0) != q + p(0) at " + p.render());
    }
  }
  if (v.ok) v.note = "100 pairs over each of Q and Q>=0";
  return v;
}

json run_json(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run_cli(args, out, err);
  json j = json::parse(out.str());
  j["total_ms"] = 0;
  for (auto& l : j["laws"]) l["ms"] = 0;
  return j;
}

Verdict ac9() {
  Verdict v;
  const std::string dir = DLCAT_GOLDEN_DIR;
  const std::vector<std::pair<std::vector<std::string>, std::string>> goldens{
      {{"check", "poly", "--seed", "42", "--format", "json"}, "check_poly_seed42.json"},
      {{"check", "rel", "--seed", "42", "--semiring", "boolean", "--format", "json"}, "check_rel_boolean_seed42.json"},
  };
  for (const auto& [args, file] : goldens) {
    std::ifstream in(dir + "/" + file);
    if (!in) {
      v.fail("missing golden " + file);
      continue;
    }
    int code = -1;
    const json got = run_json(args, code);
    if (code != 0) v.fail(file + ": exit " + std::to_string(code));
    if (got != json::parse(in)) v.fail(file + ": report differs from golden");
  }
  int code = -1;
  run_json({"check", "poly", "--sabotage", "--cases", "20", "--format", "json"}, code);
  if (code != 1) v.fail("sabotaged model exited " + std::to_string(code));
  std::ostringstream sink;
  if (cli::run_cli({"check", "nonsense"}, sink, sink) != 2) v.fail("usage error did not exit 2");
  if (cli::run_cli({"list-laws"}, sink, sink) != 0) v.fail("list-laws did not exit 0");
  if (v.ok) v.note = "2 goldens; exits 0 / 1 (sabotage) / 2 (usage)";
  return v;
}

struct Criterion {
  const char* id;
  double limit_s;  // 0: no runtime bound
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", 10, ac1}, {"AC2", 1, ac2},  {"AC3", 30, ac3}, {"AC4", 5, ac4}, {"AC5", 30, ac5},
      {"AC6", 60, ac6}, {"AC7", 20, ac7}, {"AC8", 0, ac8},  {"AC9", 0, ac9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "over the %.0f s limit", c.limit_s);
      v.fail(buf);
    }
    failures += !v.ok;
    std::printf("%s %s  %.2fs  %s\n", c.id, v.ok ? "PASS" : "FAIL", secs, v.note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
