// Law checks for weighted relations. Composites are diagrammatic, so a law
// "A B = C" is compose(A, B) == C. Equations are compared on the safe band
// only; a law's case count is the number of band rows it compared plus the
// number of random samples it drew.

#include <sstream>

#include "dlcat/lawsuite.hpp"
#include "dlcat/random.hpp"
#include "dlcat/wrel.hpp"

namespace dlc::laws {

namespace {

using namespace dlc::rel;

template <Rig R>
using M = WeightedMatrix<R>;

template <Rig R>
std::string render_entries(const M<R>& m, std::size_t limit = 12) {
  std::ostringstream os;
  os << "{";
  std::size_t n = 0;
  for (const auto& [r, row] : m.entries())
    for (const auto& [c, v] : row) {
      if (n++ == limit) {
        os << ", ...";
        return os.str() + "}";
      }
      os << (n > 1 ? ", " : "") << m.rows().render_point(r) << "->" << m.cols().render_point(c) << ": " << to_string(v);
    }
  os << "}";
  return os.str();
}

/// Accumulates band comparisons for one law.
template <Rig R>
struct BandCheck {
  const Truncation& t;
  LawOutcome out;

  /// Returns true on mismatch (and records it).
  bool differ(const M<R>& lhs, const M<R>& rhs, const std::string& what, BandRule rule = BandRule::per_factor,
              const std::string& context = "") {
    const auto cmp = compare_on_band(lhs, rhs, t, rule);
    out.cases += cmp.rows_checked;
    if (cmp.equal()) return false;
    const auto& mm = *cmp.mismatch;
    std::string input = what + " at (" + lhs.rows().render_point(mm.row) + ", " + lhs.cols().render_point(mm.col) + ")";
    if (!context.empty()) input += "; " + context;
    out.counterexample = Counterexample{input, to_string(mm.lhs), to_string(mm.rhs)};
    return true;
  }
};

template <Rig R>
M<R> random_matrix(Rng& rng, const IndexSpace& rows, const IndexSpace& cols) {
  M<R> m(rows, cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (uniform_below(rng, 2) == 0) m.set(r, c, R::sample(rng));
  return m;
}

template <Rig R>
ModelBinding build_rel(const RelConfig& cfg) {
  ModelBinding b;
  b.model = "rel";
  b.semiring = R::descriptor().name;
  b.params = {{"base_size", cfg.base_size}, {"truncation", cfg.truncation}, {"margin", cfg.margin}};
  b.exact = true;
  b.default_cases = 25;

  const BaseSet X = BaseSet::letters(cfg.base_size);
  const Truncation t(cfg.truncation, cfg.margin);
  const IndexSpace B = IndexSpace::bags(X, t.D);
  const IndexSpace A = IndexSpace::atoms(X);
  auto& c = b.checks;

  c[LawId::L1] = [=](std::size_t cases, std::uint64_t seed) {
    BandCheck<R> bc{t, {}};
    const Comonoid<R> cm = comonoid<R>(X, t);
    const M<R> idB = identity<R>(B);
    if (bc.differ(compose(cm.delta, tensor(cm.delta, idB)), compose(cm.delta, tensor(idB, cm.delta)),
                  "Delta;(Delta x 1) = Delta;(1 x Delta)"))
      return bc.out;
    if (bc.differ(compose(cm.delta, tensor(cm.counit, idB)), idB, "Delta;(e x 1) = 1")) return bc.out;
    if (bc.differ(compose(cm.delta, tensor(idB, cm.counit)), idB, "Delta;(1 x e) = 1")) return bc.out;
    if (bc.differ(compose(cm.delta, symmetry<R>(B, B)), cm.delta, "Delta;sigma = Delta")) return bc.out;
    if (bc.differ(bang_map(identity<R>(A), t), idB, "!1 = 1")) return bc.out;
    // Functoriality of ! and naturality of the comonoid on random relations.
    const LawOutcome sampled = for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const BaseSet Y = BaseSet::letters(uniform_int(rng, 1, 2));
      const BaseSet Z = BaseSet::letters(uniform_int(rng, 1, 2));
      const M<R> f = random_matrix<R>(rng, A, IndexSpace::atoms(Y));
      const M<R> g = random_matrix<R>(rng, IndexSpace::atoms(Y), IndexSpace::atoms(Z));
      const std::string ctx = "f = " + render_entries(f) + ", g = " + render_entries(g);
      BandCheck<R> inner{t, {}};
      const M<R> bf = bang_map(f, t);
      const Comonoid<R> cy = comonoid<R>(Y, t);
      if (inner.differ(bang_map(compose(f, g), t), compose(bf, bang_map(g, t)), "!(f;g) = !f;!g",
                       BandRule::per_factor, ctx) ||
          inner.differ(compose(bf, cy.delta), compose(cm.delta, tensor(bf, bf)), "!f;Delta = Delta;(!f x !f)",
                       BandRule::per_factor, ctx) ||
          inner.differ(compose(bf, cy.counit), cm.counit, "!f;e = e", BandRule::per_factor, ctx))
        return inner.out.counterexample;
      return std::nullopt;
    });
    bc.out.cases += sampled.cases;
    bc.out.counterexample = sampled.counterexample;
    return bc.out;
  };

  c[LawId::L2] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    bc.differ(compose(deriving<R>(X, t), comonoid<R>(X, t).counit), M<R>(B * A, IndexSpace::unit()), "d;e = 0");
    return bc.out;
  };

  c[LawId::L3] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    const M<R> d = deriving<R>(X, t);
    const M<R> delta = comonoid<R>(X, t).delta;
    const M<R> idA = identity<R>(A), idB = identity<R>(B);
    const M<R> split = tensor(delta, idA);
    const M<R> rhs = compose(split, tensor(idB, d)) +
                     compose(compose(split, tensor(idB, symmetry<R>(B, A))), tensor(d, idB));
    bc.differ(compose(d, delta), rhs, "Leibniz");
    return bc.out;
  };

  c[LawId::L4] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    const Comonoid<R> cm = comonoid<R>(X, t);
    bc.differ(compose(deriving<R>(X, t), cm.epsilon), tensor(cm.counit, identity<R>(A)), "d;eps = e x 1");
    return bc.out;
  };

  c[LawId::L6] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    const M<R> d = deriving<R>(X, t);
    const M<R> dd = compose(tensor(d, identity<R>(A)), d);
    bc.differ(dd, compose(tensor(identity<R>(B), symmetry<R>(A, A)), dd), "interchange");
    return bc.out;
  };

  c[LawId::L7] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    const M<R> d = deriving<R>(X, t), dco = coderiving<R>(X, t);
    const M<R> idA = identity<R>(A);
    const M<R> rhs = compose(compose(tensor(dco, idA), tensor(identity<R>(B), symmetry<R>(A, A))), tensor(d, idA)) +
                     identity<R>(B * A);
    bc.differ(compose(d, dco), rhs, "d;d° = (d° x 1);(1 x sigma);(d x 1) + 1");
    return bc.out;
  };

  c[LawId::L8] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    const auto k_diag = size_diagonal<R>(X, t, [](unsigned n) { return n == 0 ? R::one() : nat_value<R>(n); });
    const auto j_diag = size_diagonal<R>(X, t, [](unsigned n) { return nat_value<R>(n + 1); });
    if (bc.differ(k_matrix<R>(X, t), k_diag, "K = size (1 on the empty bag)")) return bc.out;
    bc.differ(j_matrix<R>(X, t), j_diag, "J = size + 1");
    return bc.out;
  };

  c[LawId::L9] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    const M<R> K = k_matrix<R>(X, t), J = j_matrix<R>(X, t), z = bang_zero<R>(X, t);
    const M<R> d = deriving<R>(X, t), dco = coderiving<R>(X, t);
    const M<R> JA = tensor(J, identity<R>(A));
    (void)(bc.differ(compose(K, z), z, "K;!(0) = !(0)") || bc.differ(compose(z, K), z, "!(0);K = !(0)") ||
        bc.differ(compose(J, z), z, "J;!(0) = !(0)") || bc.differ(compose(z, J), z, "!(0);J = !(0)") ||
        bc.differ(compose(K, dco), compose(dco, JA), "K;d° = d°;(J x 1)") ||
        bc.differ(compose(d, K), compose(JA, d), "d;K = (J x 1);d"));
    return bc.out;
  };

  c[LawId::L10] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    const BaseSet U = BaseSet::unit();
    const MonoidalUnit<R> mx = monoidal_unit<R>(X, t);
    const Comonoid<R> cu = comonoid<R>(U, t);
    const M<R> m_r = mx.m_r;
    const M<R> one = identity<R>(IndexSpace::unit());
    (void)(bc.differ(compose(tensor(m_r, identity<R>(B)), mx.m_ra), identity<R>(B), "(m_R x 1);m_{R,A} = 1") ||
        bc.differ(compose(m_r, cu.epsilon).strictify(), one, "m_R;eps_R = 1") ||
        bc.differ(compose(m_r, cu.counit), one, "m_R;e_R = 1") ||
        bc.differ(compose(m_r, cu.delta), tensor(m_r, m_r), "m_R;Delta_R = m_R x m_R", BandRule::total) ||
        bc.differ(compose(m_r, coderiving<R>(U, t).strictify()), m_r, "m_R;d°_R = m_R"));
    return bc.out;
  };

  c[LawId::L11] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    const MonoidalUnit<R> mx = monoidal_unit<R>(X, t);
    const M<R> KR = k_matrix<R>(BaseSet::unit(), t), KA = k_matrix<R>(X, t);
    const M<R> middle = compose(mx.m_ra, KA);
    if (bc.differ(compose(tensor(KR, identity<R>(B)), mx.m_ra), middle, "(K_R x 1);m_{R,A} = m_{R,A};K_A")) return bc.out;
    bc.differ(middle, compose(tensor(identity<R>(unit_bags(t)), KA), mx.m_ra), "m_{R,A};K_A = (1 x K_A);m_{R,A}");
    return bc.out;
  };

  c[LawId::L12] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    const BaseSet U = BaseSet::unit();
    const M<R> s = unit_integral<R>(t), d = unit_deriving<R>(t);
    // The unit formulas are the general operators over {*}, strictified.
    if (bc.differ(d, deriving<R>(U, t).strictify(), "unit d = d over {*}") ||
        bc.differ(s, integral<R>(U, t).strictify(), "unit s = s over {*}") ||
        bc.differ(unit_coderiving<R>(t), coderiving<R>(U, t).strictify(), "unit d° = d° over {*}"))
      return bc.out;
    bc.differ(compose(s, d) + unit_bang_zero<R>(t), identity<R>(unit_bags(t)), "s_R;d_R + !(0) = 1");
    return bc.out;
  };

  c[LawId::L13] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    bc.differ(compose(unit_integral<R>(t), j_matrix<R>(BaseSet::unit(), t).strictify()), unit_coderiving<R>(t),
              "s_R;J_R = d°_R");
    return bc.out;
  };

  c[LawId::L14] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    const BaseSet U = BaseSet::unit();
    const M<R> jinv = reconstruct_from_unit<R>(U, t, unit_integral<R>(t)).j_inv;
    const M<R> J = j_matrix<R>(U, t);
    const M<R> id = identity<R>(unit_bags(t));
    if (bc.differ(jinv, j_inverse<R>(U, t), "(m_R x 1);(s_R x 1);m_{R,R} = J^-1_R") ||
        bc.differ(compose(J, jinv), id, "J_R;J^-1_R = 1") || bc.differ(compose(jinv, J), id, "J^-1_R;J_R = 1"))
      return bc.out;
    bc.differ(compose(unit_coderiving<R>(t), jinv), unit_integral<R>(t), "s_R = d°_R;J^-1_R");
    return bc.out;
  };

  c[LawId::L15] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    const BaseSet U = BaseSet::unit();
    const M<R> s = unit_integral<R>(t), d = unit_deriving<R>(t);
    const M<R> kinv = compose(compose(s, j_inverse<R>(U, t)), d) + unit_bang_zero<R>(t);
    const M<R> K = k_matrix<R>(U, t);
    const M<R> id = identity<R>(unit_bags(t));
    if (bc.differ(kinv, k_inverse<R>(U, t), "s_R;J^-1_R;d_R + !(0) = K^-1_R") ||
        bc.differ(compose(K, kinv), id, "K_R;K^-1_R = 1") || bc.differ(compose(kinv, K), id, "K^-1_R;K_R = 1"))
      return bc.out;
    bc.differ(compose(kinv, unit_coderiving<R>(t)), s, "s_R = K^-1_R;d°_R");
    return bc.out;
  };

  c[LawId::L16] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    // From s_R to inverses of K on every object.
    const Reconstruction<R> rec = reconstruct_from_unit<R>(X, t, unit_integral<R>(t));
    const M<R> K = k_matrix<R>(X, t);
    if (bc.differ(compose(K, rec.k_inv), identity<R>(B), "K_A;K^-1_A = 1 (K^-1_A built from s_R)") ||
        bc.differ(compose(rec.k_inv, K), identity<R>(B), "K^-1_A;K_A = 1 (K^-1_A built from s_R)"))
      return bc.out;
    // From an inverse of K_R to an s_R satisfying the unit equation.
    const BaseSet U = BaseSet::unit();
    const M<R> s = compose(k_inverse<R>(U, t), unit_coderiving<R>(t));
    bc.differ(compose(s, unit_deriving<R>(t)) + unit_bang_zero<R>(t), identity<R>(unit_bags(t)),
              "(K^-1_R;d°_R);d_R + !(0) = 1");
    return bc.out;
  };

  c[LawId::L17] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    const Reconstruction<R> rec = reconstruct_from_unit<R>(X, t, unit_integral<R>(t));
    if (bc.differ(rec.k_inv, k_inverse<R>(X, t), "reconstructed K^-1 = K^-1") ||
        bc.differ(rec.j_inv, j_inverse<R>(X, t), "reconstructed J^-1 = J^-1"))
      return bc.out;
    bc.differ(rec.s, integral<R>(X, t), "reconstructed s = s");
    return bc.out;
  };

  c[LawId::L18] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    bc.differ(compose(integral<R>(X, t), deriving<R>(X, t)) + bang_zero<R>(X, t), identity<R>(B), "s;d + !(0) = 1");
    return bc.out;
  };

  c[LawId::L19] = [=](std::size_t, std::uint64_t) {
    BandCheck<R> bc{t, {}};
    bc.differ(compose(unit_deriving<R>(t), unit_integral<R>(t)), identity<R>(unit_bags(t)), "d_R;s_R = 1");
    return bc.out;
  };

  c[LawId::L20] = [=](std::size_t cases, std::uint64_t seed) {
    const M<R> d = deriving<R>(X, t), s = integral<R>(X, t);
    const M<R> swap = tensor(identity<R>(B), symmetry<R>(A, A));
    const M<R> dA = tensor(d, identity<R>(A));
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      // f = d;phi satisfies the premise by the interchange law; check it anyway.
      const M<R> phi = random_matrix<R>(rng, B, IndexSpace::atoms(BaseSet::letters(uniform_int(rng, 1, 2))));
      const M<R> f = compose(d, phi);
      const std::string ctx = "f = d;phi, phi = " + render_entries(phi);
      BandCheck<R> bc{t, {}};
      const M<R> premise = compose(dA, f);
      if (bc.differ(premise, compose(swap, premise), "premise (d x 1);f = (1 x sigma);(d x 1);f", BandRule::per_factor,
                    ctx) ||
          bc.differ(compose(compose(d, s), f), f, "d;s;f = f", BandRule::per_factor, ctx))
        return bc.out.counterexample;
      return std::nullopt;
    });
  };

  c[LawId::L21] = [=](std::size_t cases, std::uint64_t seed) {
    const M<R> d = deriving<R>(X, t), z = bang_zero<R>(X, t);
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const IndexSpace Y = IndexSpace::atoms(BaseSet::letters(uniform_int(rng, 1, 2)));
      const M<R> f = random_matrix<R>(rng, B, Y);
      // g - f lives on the empty bag, which d never reaches.
      M<R> h(B, Y);
      for (std::size_t y = 0; y < Y.size(); ++y)
        if (uniform_below(rng, 2) == 0) h.set(0, y, R::sample(rng));
      const M<R> g = f + h;
      const std::string ctx = "f = " + render_entries(f) + ", g = " + render_entries(g);
      BandCheck<R> bc{t, {}};
      if (bc.differ(compose(d, f), compose(d, g), "premise d;f = d;g", BandRule::per_factor, ctx) ||
          bc.differ(f + compose(z, g), g + compose(z, f), "f + !(0);g = g + !(0);f", BandRule::per_factor, ctx))
        return bc.out.counterexample;
      return std::nullopt;
    });
  };

  c[LawId::L22] = [=](std::size_t cases, std::uint64_t seed) {
    BandCheck<R> bc{t, {}};
    const BaseSet Y = BaseSet::letters(cfg.base_size);
    const BaseSet XY = BaseSet::disjoint_union(X, Y);
    const Seely<R> sy = seely<R>(X, Y, t);
    const IndexSpace bxy = IndexSpace::bags(XY, t.D);
    const IndexSpace bx = IndexSpace::bags(X, t.D), by = IndexSpace::bags(Y, t.D);
    if (bc.differ(compose(sy.chi, sy.chi_inv), identity<R>(bxy), "chi;chi^-1 = 1", BandRule::total) ||
        bc.differ(compose(sy.chi_inv, sy.chi), identity<R>(bx * by), "chi^-1;chi = 1", BandRule::total))
      return bc.out;
    // chi = Delta;(!pi0 x !pi1).
    M<R> pi0(IndexSpace::atoms(XY), IndexSpace::atoms(X)), pi1(IndexSpace::atoms(XY), IndexSpace::atoms(Y));
    for (std::size_t i = 0; i < X.size(); ++i) pi0.set(i, i, R::one());
    for (std::size_t i = 0; i < Y.size(); ++i) pi1.set(X.size() + i, i, R::one());
    if (bc.differ(sy.chi, compose(comonoid<R>(XY, t).delta, tensor(bang_map(pi0, t), bang_map(pi1, t))),
                  "chi = Delta;(!pi0 x !pi1)"))
      return bc.out;
    // Naturality: !(f + g);chi = chi;(!f x !g).
    const LawOutcome sampled = for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const BaseSet X2 = BaseSet::letters(uniform_int(rng, 1, 2)), Y2 = BaseSet::letters(uniform_int(rng, 1, 2));
      const M<R> f = random_matrix<R>(rng, IndexSpace::atoms(X), IndexSpace::atoms(X2));
      const M<R> g = random_matrix<R>(rng, IndexSpace::atoms(Y), IndexSpace::atoms(Y2));
      const BaseSet XY2 = BaseSet::disjoint_union(X2, Y2);
      M<R> fg(IndexSpace::atoms(XY), IndexSpace::atoms(XY2));
      for (const auto& [r, row] : f.entries())
        for (const auto& [col, v] : row) fg.set(r, col, v);
      for (const auto& [r, row] : g.entries())
        for (const auto& [col, v] : row) fg.set(X.size() + r, X2.size() + col, v);
      const std::string ctx = "f = " + render_entries(f) + ", g = " + render_entries(g);
      BandCheck<R> inner{t, {}};
      if (inner.differ(compose(bang_map(fg, t), seely<R>(X2, Y2, t).chi),
                       compose(sy.chi, tensor(bang_map(f, t), bang_map(g, t))), "!(f + g);chi = chi;(!f x !g)",
                       BandRule::per_factor, ctx))
        return inner.out.counterexample;
      return std::nullopt;
    });
    bc.out.cases += sampled.cases;
    bc.out.counterexample = sampled.counterexample;
    return bc.out;
  };

  c[LawId::L23] = [=](std::size_t cases, std::uint64_t seed) {
    const M<R> dX = deriving<R>(X, t);
    return for_cases(cases, seed, [&](Rng& rng) -> std::optional<Counterexample> {
      const BaseSet Y = BaseSet::letters(uniform_int(rng, 1, 3));
      const M<R> f = random_matrix<R>(rng, A, IndexSpace::atoms(Y));
      const M<R> bf = bang_map(f, t);
      BandCheck<R> bc{t, {}};
      if (bc.differ(compose(dX, bf), compose(tensor(bf, f), deriving<R>(Y, t)), "d;!f = (!f x f);d",
                    BandRule::per_factor, "f = " + render_entries(f)))
        return bc.out.counterexample;
      return std::nullopt;
    });
  };

  for (const auto& [id, _] : c) b.mask.insert(id);
  b.unsupported[LawId::L5] =
      "the chain rule is stated on coKleisli maps; it is checked in the polynomial and smooth models";

  if (R::descriptor().idempotent) {
    c[LawId::L24] = [=](std::size_t, std::uint64_t) {
      BandCheck<R> bc{t, {}};
      bc.differ(integral<R>(X, t), coderiving<R>(X, t), "s = d°");
      return bc.out;
    };
    b.mask.insert(LawId::L24);
  } else {
    b.unsupported[LawId::L24] = "not additively idempotent: 1 + 1 != 1 in " + b.semiring;
  }
  return b;
}

}  // namespace

ModelBinding make_rel_binding(const RelConfig& cfg) {
  if (cfg.base_size == 0) throw std::invalid_argument("--base-size must be at least 1");
  if (cfg.margin < 2) throw std::invalid_argument("--margin must be at least 2");
  if (cfg.truncation < cfg.margin) throw std::invalid_argument("--truncation must be at least --margin");
  if (cfg.semiring == "nonneg-rational") return build_rel<NonNegRational>(cfg);
  if (cfg.semiring == "rational") return build_rel<Rational>(cfg);
  if (cfg.semiring == "boolean") return build_rel<Boolean>(cfg);
  if (cfg.semiring == "natural") return build_rel<Natural>(cfg);
  throw std::invalid_argument("unknown semiring '" + cfg.semiring + "'");
}

}  // namespace dlc::laws
