#pragma once

/*
 * Weighted relations over a semiring, with the bag exponential.
 *
 * A morphism X -> Y is a matrix X x Y -> R and composition is matrix
 * product in diagrammatic order: compose(f, g)(x, z) = sum_y f(x,y) g(y,z).
 * The exponential !X is the set of finite bags over X, enumerated here up to
 * a maximum size D (see Truncation in wrel_space.hpp).
 *
 * Coefficient conventions:
 *   Delta(b, (b1, b2)) = [b1 + b2 = b]        coefficient-free splitting
 *   e(b)               = [b = []]
 *   eps(b, x)          = [b = [x]]
 *   d((b, x), b')      = (b(x) + 1) [b + x = b']   multiplicity of x in b'
 *   d°(b, (b', x))     = [b' + x = b]
 *
 * The deriving coefficient is the multiplicity of the inserted atom in the
 * result. Over the singleton base this is the size of the result bag, so the
 * unit formula d(n, m) = m [n + 1 = m] is recovered. On larger bases the
 * size of the result does not satisfy the Leibniz rule under coefficient-free
 * Delta: with b = [y], x and target [x, y] the left side d;Delta has weight 2
 * on the split ([x], [y]) while the right side has weight 1.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlcat/rig.hpp"
#include "dlcat/wrel_space.hpp"

namespace dlc::rel {

template <Rig R>
class WeightedMatrix {
 public:
  using Row = std::map<std::size_t, R>;

  WeightedMatrix() = default;
  WeightedMatrix(IndexSpace rows, IndexSpace cols) : rows_(std::move(rows)), cols_(std::move(cols)) {}

  static WeightedMatrix identity(const IndexSpace& space) {
    WeightedMatrix m(space, space);
    for (std::size_t i = 0; i < space.size(); ++i) m.set(i, i, R::one());
    return m;
  }

  const IndexSpace& rows() const noexcept { return rows_; }
  const IndexSpace& cols() const noexcept { return cols_; }
  const std::map<std::size_t, Row>& entries() const noexcept { return entries_; }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& [_, row] : entries_) n += row.size();
    return n;
  }

  R at(std::size_t r, std::size_t c) const {
    auto it = entries_.find(r);
    if (it == entries_.end()) return R::zero();
    auto jt = it->second.find(c);
    return jt == it->second.end() ? R::zero() : jt->second;
  }

  const Row* row(std::size_t r) const {
    auto it = entries_.find(r);
    return it == entries_.end() ? nullptr : &it->second;
  }

  void set(std::size_t r, std::size_t c, const R& v) {
    check_bounds(r, c);
    if (v == R::zero()) {
      auto it = entries_.find(r);
      if (it == entries_.end()) return;
      it->second.erase(c);
      if (it->second.empty()) entries_.erase(it);
      return;
    }
    entries_[r][c] = v;
  }

  void add(std::size_t r, std::size_t c, const R& v) {
    if (v == R::zero()) return;
    set(r, c, at(r, c) + v);
  }

  WeightedMatrix transpose() const {
    WeightedMatrix t(cols_, rows_);
    for (const auto& [r, row] : entries_)
      for (const auto& [c, v] : row) t.entries_[c][r] = v;
    return t;
  }

  /// Same entries, relabelled spaces of equal size (used to identify R (x) A with A).
  WeightedMatrix with_spaces(IndexSpace rows, IndexSpace cols) const {
    if (rows.size() != rows_.size() || cols.size() != cols_.size())
      throw SpaceMismatch("with_spaces: sizes differ");
    WeightedMatrix m(std::move(rows), std::move(cols));
    m.entries_ = entries_;
    return m;
  }

  WeightedMatrix strictify() const { return with_spaces(rows_.strictify(), cols_.strictify()); }

  friend WeightedMatrix operator+(const WeightedMatrix& a, const WeightedMatrix& b) {
    if (!(a.rows_ == b.rows_) || !(a.cols_ == b.cols_))
      throw SpaceMismatch("matrix +: " + a.shape() + " vs " + b.shape());
    WeightedMatrix out = a;
    for (const auto& [r, row] : b.entries_)
      for (const auto& [c, v] : row) out.add(r, c, v);
    return out;
  }

  friend bool operator==(const WeightedMatrix& a, const WeightedMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string shape() const { return "[" + rows_.describe() + " -> " + cols_.describe() + "]"; }

 private:
  void check_bounds(std::size_t r, std::size_t c) const {
    if (r >= rows_.size() || c >= cols_.size()) throw SpaceMismatch("entry outside " + shape());
  }

  IndexSpace rows_;
  IndexSpace cols_;
  std::map<std::size_t, Row> entries_;
};

/// f then g: (fg)(x, z) = sum_y f(x, y) g(y, z).
template <Rig R>
WeightedMatrix<R> compose(const WeightedMatrix<R>& f, const WeightedMatrix<R>& g) {
  if (!(f.cols() == g.rows())) throw SpaceMismatch("compose: " + f.shape() + " ; " + g.shape());
  WeightedMatrix<R> out(f.rows(), g.cols());
  for (const auto& [r, frow] : f.entries()) {
    std::map<std::size_t, R> acc;
    for (const auto& [y, fv] : frow) {
      const auto* grow = g.row(y);
      if (!grow) continue;
      for (const auto& [z, gv] : *grow) {
        auto [it, inserted] = acc.try_emplace(z, fv * gv);
        if (!inserted) it->second = it->second + fv * gv;
      }
    }
    for (const auto& [z, v] : acc) out.set(r, z, v);
  }
  return out;
}

template <Rig R>
WeightedMatrix<R> tensor(const WeightedMatrix<R>& f, const WeightedMatrix<R>& g) {
  WeightedMatrix<R> out(f.rows() * g.rows(), f.cols() * g.cols());
  const std::size_t gr = g.rows().size();
  const std::size_t gc = g.cols().size();
  for (const auto& [r1, row1] : f.entries())
    for (const auto& [c1, v1] : row1)
      for (const auto& [r2, row2] : g.entries())
        for (const auto& [c2, v2] : row2) out.set(r1 * gr + r2, c1 * gc + c2, v1 * v2);
  return out;
}

/// sigma: S1 (x) S2 -> S2 (x) S1.
template <Rig R>
WeightedMatrix<R> symmetry(const IndexSpace& s1, const IndexSpace& s2) {
  WeightedMatrix<R> out(s1 * s2, s2 * s1);
  for (std::size_t a = 0; a < s1.size(); ++a)
    for (std::size_t b = 0; b < s2.size(); ++b) out.set(a * s2.size() + b, b * s1.size() + a, R::one());
  return out;
}

template <Rig R>
WeightedMatrix<R> identity(const IndexSpace& s) {
  return WeightedMatrix<R>::identity(s);
}

// ---------------------------------------------------------------------------
// Safe-band comparison
// ---------------------------------------------------------------------------

template <Rig R>
struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  R lhs;
  R rhs;
};

template <Rig R>
struct BandComparison {
  std::size_t rows_checked = 0;
  std::optional<Mismatch<R>> mismatch;

  bool equal() const noexcept { return !mismatch; }
};

/// Compares two matrices on entries whose row and column both lie in the
/// safe band. Stops at the first differing entry (canonical order).
template <Rig R>
BandComparison<R> compare_on_band(const WeightedMatrix<R>& a, const WeightedMatrix<R>& b, const Truncation& t,
                                  BandRule rule = BandRule::per_factor) {
  if (!(a.rows() == b.rows()) || !(a.cols() == b.cols()))
    throw SpaceMismatch("compare_on_band: " + a.shape() + " vs " + b.shape());
  BandComparison<R> out;
  std::map<std::size_t, bool> col_ok;
  auto col_in_band = [&](std::size_t c) {
    auto [it, inserted] = col_ok.try_emplace(c, false);
    if (inserted) it->second = in_band(a.cols(), c, t, rule);
    return it->second;
  };
  static const typename WeightedMatrix<R>::Row empty;
  for (std::size_t r = 0; r < a.rows().size(); ++r) {
    if (!in_band(a.rows(), r, t, rule)) continue;
    ++out.rows_checked;
    const auto* ra = a.row(r);
    const auto* rb = b.row(r);
    const auto& rowa = ra ? *ra : empty;
    const auto& rowb = rb ? *rb : empty;
    auto ia = rowa.begin();
    auto ib = rowb.begin();
    while (ia != rowa.end() || ib != rowb.end()) {
      std::size_t c;
      R va = R::zero();
      R vb = R::zero();
      if (ib == rowb.end() || (ia != rowa.end() && ia->first < ib->first)) {
        c = ia->first;
        va = ia->second;
        ++ia;
      } else if (ia == rowa.end() || ib->first < ia->first) {
        c = ib->first;
        vb = ib->second;
        ++ib;
      } else {
        c = ia->first;
        va = ia->second;
        vb = ib->second;
        ++ia;
        ++ib;
      }
      if (!(va == vb) && col_in_band(c)) {
        out.mismatch = Mismatch<R>{r, c, va, vb};
        return out;
      }
    }
  }
  return out;
}

/// If every entry moves total bag size by the same amount (column size minus
/// row size), returns that amount; nullopt for mixed shifts or no entries.
template <Rig R>
std::optional<int> size_shift(const WeightedMatrix<R>& m) {
  std::optional<int> shift;
  for (const auto& [r, row] : m.entries()) {
    const int rs = static_cast<int>(total_bag_size(m.rows(), r));
    for (const auto& [c, _] : row) {
      const int s = static_cast<int>(total_bag_size(m.cols(), c)) - rs;
      if (shift && *shift != s) return std::nullopt;
      shift = s;
    }
  }
  return shift;
}

// ---------------------------------------------------------------------------
// The exponential and its structure maps
// ---------------------------------------------------------------------------

/// !X (x) X, the domain of d.
inline IndexSpace bags_times_atoms(const BaseSet& x, const Truncation& t) {
  return IndexSpace::bags(x, t.D) * IndexSpace::atoms(x);
}

template <Rig R>
WeightedMatrix<R> deriving(const BaseSet& x, const Truncation& t) {
  const IndexSpace bags = IndexSpace::bags(x, t.D);
  const Factor& bf = bags.factors()[0];
  WeightedMatrix<R> out(bags_times_atoms(x, t), bags);
  for (std::size_t i = 0; i < bf.size(); ++i) {
    const Bag& b = bf.bag(i);
    if (b.size() >= t.D) continue;
    for (std::size_t a = 0; a < x.size(); ++a) {
      const Bag target = b.plus(a);
      out.set(i * x.size() + a, bf.index_of(target), nat_value<R>(target.count(a)));
    }
  }
  return out;
}

/// Entry (b, (b', x)) = w(|b|) [b' + x = b].
template <Rig R, class W>
WeightedMatrix<R> scaled_coderiving(const BaseSet& x, const Truncation& t, W&& weight) {
  const IndexSpace bags = IndexSpace::bags(x, t.D);
  const Factor& bf = bags.factors()[0];
  WeightedMatrix<R> out(bags, bags_times_atoms(x, t));
  for (std::size_t i = 0; i < bf.size(); ++i) {
    const Bag& b = bf.bag(i);
    if (b.empty()) continue;
    const R w = weight(b.size());
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (b.count(a) == 0) continue;
      std::vector<unsigned> counts = b.counts();
      --counts[a];
      out.set(i, bf.index_of(Bag(counts)) * x.size() + a, w);
    }
  }
  return out;
}

template <Rig R>
WeightedMatrix<R> coderiving(const BaseSet& x, const Truncation& t) {
  return scaled_coderiving<R>(x, t, [](unsigned) { return R::one(); });
}

/// The antiderivative integral s = K^{-1}; d°, in closed form.
template <Rig R>
WeightedMatrix<R> integral(const BaseSet& x, const Truncation& t) {
  require_nat_inverses<R>();
  return scaled_coderiving<R>(x, t, [](unsigned n) { return nat_inverse<R>(n); });
}

template <Rig R>
WeightedMatrix<R> bang_zero(const BaseSet& x, const Truncation& t) {
  WeightedMatrix<R> out(IndexSpace::bags(x, t.D), IndexSpace::bags(x, t.D));
  out.set(0, 0, R::one());  // the empty bag is enumerated first
  return out;
}

template <Rig R>
WeightedMatrix<R> k_matrix(const BaseSet& x, const Truncation& t) {
  return compose(coderiving<R>(x, t), deriving<R>(x, t)) + bang_zero<R>(x, t);
}

template <Rig R>
WeightedMatrix<R> j_matrix(const BaseSet& x, const Truncation& t) {
  return compose(coderiving<R>(x, t), deriving<R>(x, t)) + identity<R>(IndexSpace::bags(x, t.D));
}

/// Diagonal matrix on !X with entry w(|b|).
template <Rig R, class W>
WeightedMatrix<R> size_diagonal(const BaseSet& x, const Truncation& t, W&& weight) {
  const IndexSpace bags = IndexSpace::bags(x, t.D);
  const Factor& bf = bags.factors()[0];
  WeightedMatrix<R> out(bags, bags);
  for (std::size_t i = 0; i < bf.size(); ++i) out.set(i, i, weight(bf.bag(i).size()));
  return out;
}

template <Rig R>
WeightedMatrix<R> k_inverse(const BaseSet& x, const Truncation& t) {
  require_nat_inverses<R>();
  return size_diagonal<R>(x, t, [](unsigned n) { return n == 0 ? R::one() : nat_inverse<R>(n); });
}

template <Rig R>
WeightedMatrix<R> j_inverse(const BaseSet& x, const Truncation& t) {
  require_nat_inverses<R>();
  return size_diagonal<R>(x, t, [](unsigned n) { return nat_inverse<R>(n + 1); });
}

template <Rig R>
struct Comonoid {
  WeightedMatrix<R> delta;    // !X -> !X (x) !X
  WeightedMatrix<R> counit;   // e: !X -> I
  WeightedMatrix<R> epsilon;  // !X -> X
};

template <Rig R>
Comonoid<R> comonoid(const BaseSet& x, const Truncation& t) {
  const IndexSpace bags = IndexSpace::bags(x, t.D);
  const Factor& bf = bags.factors()[0];
  Comonoid<R> c{WeightedMatrix<R>(bags, bags * bags), WeightedMatrix<R>(bags, IndexSpace::unit()),
                WeightedMatrix<R>(bags, IndexSpace::atoms(x))};
  for (std::size_t i = 0; i < bf.size(); ++i) {
    const Bag& b = bf.bag(i);
    // Every sub-bag b1 <= b, paired with its complement.
    std::vector<unsigned> sub(x.size(), 0);
    while (true) {
      std::vector<unsigned> rest = b.counts();
      for (std::size_t a = 0; a < sub.size(); ++a) rest[a] -= sub[a];
      c.delta.set(i, bf.index_of(Bag(sub)) * bf.size() + bf.index_of(Bag(rest)), R::one());
      std::size_t a = 0;
      while (a < sub.size() && sub[a] == b.count(a)) sub[a++] = 0;
      if (a == sub.size()) break;
      ++sub[a];
    }
    if (b.empty()) c.counit.set(i, 0, R::one());
    if (b.size() == 1) c.epsilon.set(i, b.elements()[0], R::one());
  }
  return c;
}

// ---------------------------------------------------------------------------
// The monoidal unit. !{*} is identified with the naturals 0..D.
// ---------------------------------------------------------------------------

inline IndexSpace unit_bags(const Truncation& t) { return IndexSpace::bags(BaseSet::unit(), t.D); }

/// d at the unit: d(n, m) = m [n + 1 = m].
template <Rig R>
WeightedMatrix<R> unit_deriving(const Truncation& t) {
  WeightedMatrix<R> out(unit_bags(t), unit_bags(t));
  for (unsigned n = 0; n < t.D; ++n) out.set(n, n + 1, nat_value<R>(n + 1));
  return out;
}

/// d° at the unit: d°(n, m) = [n = m + 1].
template <Rig R>
WeightedMatrix<R> unit_coderiving(const Truncation& t) {
  WeightedMatrix<R> out(unit_bags(t), unit_bags(t));
  for (unsigned n = 1; n <= t.D; ++n) out.set(n, n - 1, R::one());
  return out;
}

/// s at the unit: s(0, m) = 0 and s(n, m) = n^{-1} [n = m + 1] for n >= 1.
template <Rig R>
WeightedMatrix<R> unit_integral(const Truncation& t) {
  require_nat_inverses<R>();
  WeightedMatrix<R> out(unit_bags(t), unit_bags(t));
  for (unsigned n = 1; n <= t.D; ++n) out.set(n, n - 1, nat_inverse<R>(n));
  return out;
}

template <Rig R>
WeightedMatrix<R> unit_bang_zero(const Truncation& t) {
  return bang_zero<R>(BaseSet::unit(), t);
}

template <Rig R>
struct MonoidalUnit {
  WeightedMatrix<R> m_r;   // I -> !I, all ones
  WeightedMatrix<R> m_ra;  // !I (x) !X -> !X, ((n, b), b) = [n = |b|]
};

template <Rig R>
MonoidalUnit<R> monoidal_unit(const BaseSet& x, const Truncation& t) {
  const IndexSpace nat = unit_bags(t);
  const IndexSpace bags = IndexSpace::bags(x, t.D);
  const Factor& bf = bags.factors()[0];
  MonoidalUnit<R> m{WeightedMatrix<R>(IndexSpace::unit(), nat), WeightedMatrix<R>(nat * bags, bags)};
  for (std::size_t n = 0; n < nat.size(); ++n) m.m_r.set(0, n, R::one());
  for (std::size_t i = 0; i < bf.size(); ++i) m.m_ra.set(bf.bag(i).size() * bf.size() + i, i, R::one());
  return m;
}

// ---------------------------------------------------------------------------
// Seely isomorphism and functoriality
// ---------------------------------------------------------------------------

template <Rig R>
struct Seely {
  WeightedMatrix<R> chi;      // !(X ⊔ Y) -> !X (x) !Y
  WeightedMatrix<R> chi_inv;  // !X (x) !Y -> !(X ⊔ Y)
};

template <Rig R>
Seely<R> seely(const BaseSet& x, const BaseSet& y, const Truncation& t) {
  const BaseSet xy = BaseSet::disjoint_union(x, y);
  const IndexSpace src = IndexSpace::bags(xy, t.D);
  const IndexSpace bx = IndexSpace::bags(x, t.D);
  const IndexSpace by = IndexSpace::bags(y, t.D);
  const Factor& fs = src.factors()[0];
  const Factor& fx = bx.factors()[0];
  const Factor& fy = by.factors()[0];
  WeightedMatrix<R> chi(src, bx * by);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& counts = fs.bag(i).counts();
    Bag left(std::vector<unsigned>(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(x.size())));
    Bag right(std::vector<unsigned>(counts.begin() + static_cast<std::ptrdiff_t>(x.size()), counts.end()));
    chi.set(i, fx.index_of(left) * fy.size() + fy.index_of(right), R::one());
  }
  return {chi, chi.transpose()};
}

/// !f for f: X -> Y. The entry (mu, nu) sums, over the distinct orderings
/// (x_1..x_n) of mu, the products f(x_1, y_1) ... f(x_n, y_n), where
/// y_1 <= ... <= y_n lists nu.
template <Rig R>
WeightedMatrix<R> bang_map(const WeightedMatrix<R>& f, const Truncation& t) {
  if (f.rows().factors().size() != 1 || f.rows().factors()[0].kind() != Factor::Kind::atoms ||
      f.cols().factors().size() != 1 || f.cols().factors()[0].kind() != Factor::Kind::atoms)
    throw SpaceMismatch("bang_map: expects a matrix between base sets, got " + f.shape());
  const BaseSet& x = f.rows().factors()[0].base();
  const BaseSet& y = f.cols().factors()[0].base();
  const IndexSpace bx = IndexSpace::bags(x, t.D);
  const IndexSpace by = IndexSpace::bags(y, t.D);
  const Factor& fx = bx.factors()[0];
  const Factor& fy = by.factors()[0];
  WeightedMatrix<R> out(bx, by);
  for (std::size_t i = 0; i < fx.size(); ++i) {
    const auto mu = fx.bag(i).elements();
    for (std::size_t j = 0; j < fy.size(); ++j) {
      if (fy.bag(j).size() != mu.size()) continue;
      const auto nu = fy.bag(j).elements();
      std::vector<std::size_t> order = mu;  // sorted, so next_permutation visits each once
      R total = R::zero();
      do {
        R term = R::one();
        for (std::size_t k = 0; k < order.size() && !(term == R::zero()); ++k) term = term * f.at(order[k], nu[k]);
        total = total + term;
      } while (std::next_permutation(order.begin(), order.end()));
      out.set(i, j, total);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reconstruction of K^{-1}, J^{-1} and s from an integral at the unit
// ---------------------------------------------------------------------------

template <Rig R>
struct Reconstruction {
  WeightedMatrix<R> k_inv;
  WeightedMatrix<R> j_inv;
  WeightedMatrix<R> s;
};

/// Builds, from s_unit together with the unit d, d° and the unit monoidal maps:
///   K^{-1} = (m_R (x) m_R (x) 1)(s_R (x) s_R (x) 1)(m_{R,R} (x) 1)(d_R (x) 1) m_{R,X} + !(0)
///   J^{-1} = (m_R (x) 1)(s_R (x) 1) m_{R,X}
///   s      = (m_R (x) 1)(s_R (x) d°)(m_{R,X} (x) 1)
template <Rig R>
Reconstruction<R> reconstruct_from_unit(const BaseSet& x, const Truncation& t, const WeightedMatrix<R>& s_unit) {
  const IndexSpace bags = IndexSpace::bags(x, t.D);
  const IndexSpace nat = unit_bags(t);
  const MonoidalUnit<R> mx = monoidal_unit<R>(x, t);
  const MonoidalUnit<R> mr = monoidal_unit<R>(BaseSet::unit(), t);
  const WeightedMatrix<R> id_x = identity<R>(bags);
  const WeightedMatrix<R> d_unit = unit_deriving<R>(t);
  const WeightedMatrix<R> s_r = s_unit.with_spaces(nat, nat);

  // I (x) !X is !X on the nose, so m_R (x) 1 already has rows !X.
  const WeightedMatrix<R> mr_x = tensor(mx.m_r, id_x);
  const WeightedMatrix<R> mr_mr_x = tensor(mx.m_r, mr_x);

  Reconstruction<R> out;
  {
    WeightedMatrix<R> m = compose(mr_mr_x, tensor(s_r, tensor(s_r, id_x)));
    m = compose(m, tensor(mr.m_ra, id_x));
    m = compose(m, tensor(d_unit, id_x));
    m = compose(m, mx.m_ra);
    out.k_inv = m + bang_zero<R>(x, t);
  }
  out.j_inv = compose(compose(mr_x, tensor(s_r, id_x)), mx.m_ra);
  {
    const WeightedMatrix<R> d_co = coderiving<R>(x, t);
    WeightedMatrix<R> m = compose(mr_x, tensor(s_r, d_co));
    out.s = compose(m, tensor(mx.m_ra, identity<R>(IndexSpace::atoms(x))));
  }
  return out;
}

}  // namespace dlc::rel
