#pragma once

/*
 * The symmetric-algebra model: Sym(R^n) as R[x_1..x_n].
 *
 * Operators are written in the application order of ordinary modules. The
 * differential category is the opposite category, so a composite "A B C"
 * written diagrammatically there is evaluated here as A(B(C(p))). For
 * example the second fundamental theorem at the unit reads
 * integrate1(grad1(p)) + eval0(p) = p.
 *
 * Representation choices:
 *   - Sym(M) (x) M, the codomain of grad, is a PolyBundle: component i is the
 *     coefficient polynomial of the basis vector e_i.
 *   - Sym(A) (x) Sym(B) is a PolyTensor, which stores a single polynomial in
 *     arity(A) + arity(B) variables and remembers where the split is. This is
 *     the Seely isomorphism made literal, and it lets operators act on either
 *     side without a separate tensor container.
 *   - The unit-component monoidal maps are fixed concretely. The dual of
 *     m_{R,A} is t_grade, x^a |-> t^{|a|} (x) x^a, and the dual of m_R is
 *     evaluation of the t-side at 1.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dlcat/rig.hpp"

namespace dlc::poly {

class ArityMismatch : public std::invalid_argument {
 public:
  ArityMismatch(const std::string& where, std::size_t expected, std::size_t got)
      : std::invalid_argument(where + ": arity mismatch (expected " + std::to_string(expected) + ", got " +
                              std::to_string(got) + ")") {}
};

/// Exponent vector with cached total degree. Ordered graded-lexicographically:
/// total degree first, then exponents compared left to right.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t arity) : exps_(arity, 0) {}
  explicit MultiIndex(std::vector<unsigned> exps);

  static MultiIndex unit(std::size_t arity, std::size_t i);

  std::size_t arity() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }

  void set(std::size_t i, unsigned e);
  MultiIndex operator+(const MultiIndex& o) const;

  /// Concatenation; the result has arity() + o.arity() variables.
  MultiIndex join(const MultiIndex& o) const;
  MultiIndex slice(std::size_t from, std::size_t to) const;
  MultiIndex erase(std::size_t i) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Default variable names: x, y, z, w up to four variables, else x1..xn.
std::vector<std::string> default_names(std::size_t arity);

std::string render_monomial(const MultiIndex& m, const std::vector<std::string>& names);

/// Joins rendered terms with " + ", turning a leading '-' into " - ".
std::string join_terms(const std::vector<std::string>& terms);

template <Rig R>
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, R>;

  explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}

  static Polynomial constant(std::size_t arity, const R& c) { return monomial(MultiIndex(arity), c); }
  static Polynomial variable(std::size_t arity, std::size_t i) { return monomial(MultiIndex::unit(arity, i), R::one()); }
  static Polynomial monomial(const MultiIndex& m, const R& c) {
    Polynomial p(m.arity());
    p.add_term(m, c);
    return p;
  }

  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Highest total degree; 0 for the zero polynomial.
  unsigned degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  R coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? R::zero() : it->second;
  }

  /// Accumulates c into the coefficient of m, dropping it if it becomes zero.
  void add_term(const MultiIndex& m, const R& c) {
    if (m.arity() != arity_) throw ArityMismatch("add_term", arity_, m.arity());
    if (c == R::zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second == R::zero()) terms_.erase(it);
    }
  }

  Polynomial scaled(const R& c) const {
    Polynomial out(arity_);
    for (const auto& [m, v] : terms_) out.add_term(m, c * v);
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.arity_ != arity_) throw ArityMismatch("+", arity_, o.arity_);
    for (const auto& [m, v] : o.terms_) add_term(m, v);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("*", a.arity_, b.arity_);
    Polynomial out(a.arity_);
    for (const auto& [ma, va] : a.terms_)
      for (const auto& [mb, vb] : b.terms_) out.add_term(ma + mb, va * vb);
    return out;
  }

  friend Polynomial operator-(const Polynomial& a)
    requires RigWithNegation<R>
  {
    return a.scaled(-R::one());
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b)
    requires RigWithNegation<R>
  {
    return a + (-b);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Canonical text, highest graded-lex term first, e.g. "x^2 + 2*x*y + 1/3".
  std::string render(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> parts;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const std::string c = to_string(it->second);
      if (it->first.degree() == 0) {
        parts.push_back(c);
        continue;
      }
      const std::string mono = render_monomial(it->first, names);
      if (c == "1")
        parts.push_back(mono);
      else if (c == "-1")
        parts.push_back("-" + mono);
      else
        parts.push_back(c + "*" + mono);
    }
    return join_terms(parts);
  }
  std::string render() const { return render(default_names(arity_)); }

 private:
  std::size_t arity_ = 0;
  Terms terms_;
};

/// An element sum_i p_i (x) e_i of Sym(M) (x) M.
template <Rig R>
struct PolyBundle {
  std::vector<Polynomial<R>> components;

  PolyBundle() = default;
  explicit PolyBundle(std::size_t arity) : components(arity, Polynomial<R>(arity)) {}
  explicit PolyBundle(std::vector<Polynomial<R>> comps) : components(std::move(comps)) {
    for (const auto& c : components)
      if (c.arity() != components.size()) throw ArityMismatch("PolyBundle", components.size(), c.arity());
  }

  std::size_t arity() const noexcept { return components.size(); }
  const Polynomial<R>& operator[](std::size_t i) const { return components.at(i); }
  Polynomial<R>& operator[](std::size_t i) { return components.at(i); }

  bool is_zero() const {
    for (const auto& c : components)
      if (!c.is_zero()) return false;
    return true;
  }

  friend PolyBundle operator+(PolyBundle a, const PolyBundle& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("bundle +", a.arity(), b.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) a.components[i] += b.components[i];
    return a;
  }

  friend bool operator==(const PolyBundle& a, const PolyBundle& b) = default;

  std::string render() const {
    std::string out = "[";
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i) out += ", ";
      out += components[i].render();
    }
    return out + "]";
  }
};

/// A coKleisli map R^in -> R^out, one polynomial per output coordinate.
template <Rig R>
struct PolyMap {
  std::size_t in_arity = 0;
  std::vector<Polynomial<R>> coordinates;

  PolyMap() = default;
  PolyMap(std::size_t in, std::vector<Polynomial<R>> coords) : in_arity(in), coordinates(std::move(coords)) {
    for (const auto& c : coordinates)
      if (c.arity() != in_arity) throw ArityMismatch("PolyMap", in_arity, c.arity());
  }

  static PolyMap identity(std::size_t n) {
    std::vector<Polynomial<R>> coords;
    for (std::size_t i = 0; i < n; ++i) coords.push_back(Polynomial<R>::variable(n, i));
    return PolyMap(n, std::move(coords));
  }

  std::size_t out_arity() const noexcept { return coordinates.size(); }

  friend bool operator==(const PolyMap& a, const PolyMap& b) = default;

  std::string render() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coordinates.size(); ++i) {
      if (i) out += ", ";
      out += coordinates[i].render();
    }
    return out + ")";
  }
};

/// An element of Sym(A) (x) Sym(B), stored as one polynomial over the
/// concatenated variables; the first `left_arity` variables belong to A.
template <Rig R>
struct PolyTensor {
  std::size_t left_arity = 0;
  Polynomial<R> joint;

  std::size_t right_arity() const noexcept { return joint.arity() - left_arity; }

  /// Applies a linear operator to the left factor: (f (x) 1).
  template <class F>
  PolyTensor map_left(F&& f) const {
    return regroup(std::forward<F>(f), true);
  }
  /// Applies a linear operator to the right factor: (1 (x) f).
  template <class F>
  PolyTensor map_right(F&& f) const {
    return regroup(std::forward<F>(f), false);
  }

  friend bool operator==(const PolyTensor& a, const PolyTensor& b) = default;

  /// Renders as a sum of "left (x) right" pure tensors, grouped by right factor.
  std::string render(const std::vector<std::string>& left_names, const std::vector<std::string>& right_names) const {
    if (joint.is_zero()) return "0";
    std::map<MultiIndex, Polynomial<R>> groups;
    for (const auto& [m, c] : joint.terms()) {
      auto [it, _] = groups.try_emplace(m.slice(left_arity, m.arity()), Polynomial<R>(left_arity));
      it->second.add_term(m.slice(0, left_arity), c);
    }
    std::vector<std::string> parts;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
      const std::string right = it->first.degree() == 0 ? "1" : render_monomial(it->first, right_names);
      const auto& left = it->second;
      const std::string l = left.size() == 1 ? left.render(left_names) : "(" + left.render(left_names) + ")";
      parts.push_back(l + " (x) " + right);
    }
    return join_terms(parts);
  }

 private:
  template <class F>
  PolyTensor regroup(F&& f, bool left) const {
    const std::size_t n = joint.arity();
    const std::size_t cut = left_arity;
    std::map<MultiIndex, Polynomial<R>> groups;  // fixed side -> acted side
    for (const auto& [m, c] : joint.terms()) {
      MultiIndex fixed = left ? m.slice(cut, n) : m.slice(0, cut);
      MultiIndex acted = left ? m.slice(0, cut) : m.slice(cut, n);
      auto [it, _] = groups.try_emplace(fixed, Polynomial<R>(acted.arity()));
      it->second.add_term(acted, c);
    }
    std::size_t new_left = left_arity;
    bool first = true;
    Polynomial<R> out;
    for (const auto& [fixed, acted] : groups) {
      Polynomial<R> image = f(acted);
      if (first) {
        new_left = left ? image.arity() : left_arity;
        out = Polynomial<R>(image.arity() + fixed.arity());
        first = false;
      }
      for (const auto& [m, c] : image.terms()) out.add_term(left ? m.join(fixed) : fixed.join(m), c);
    }
    if (first) {
      // Empty tensor: push a zero through f to learn the new arity.
      Polynomial<R> image = f(Polynomial<R>(left ? cut : n - cut));
      new_left = left ? image.arity() : left_arity;
      out = Polynomial<R>(image.arity() + (left ? n - cut : cut));
    }
    return PolyTensor{new_left, std::move(out)};
  }
};

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

template <Rig R>
Polynomial<R> poly_mul(const Polynomial<R>& p, const Polynomial<R>& q) {
  return p * q;
}

template <Rig R>
Polynomial<R> partial(const Polynomial<R>& p, std::size_t i) {
  if (i >= p.arity()) throw ArityMismatch("partial", p.arity(), i + 1);
  Polynomial<R> out(p.arity());
  for (const auto& [m, c] : p.terms()) {
    if (m[i] == 0) continue;
    MultiIndex lowered = m;
    lowered.set(i, m[i] - 1);
    out.add_term(lowered, nat_value<R>(m[i]) * c);
  }
  return out;
}

/// d: component i is the partial derivative in x_i.
template <Rig R>
PolyBundle<R> grad(const Polynomial<R>& p) {
  PolyBundle<R> out(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) out.components[i] = partial(p, i);
  return out;
}

/// Coderiving map: sum_i x_i * b_i.
template <Rig R>
Polynomial<R> mul_in(const PolyBundle<R>& b) {
  const std::size_t n = b.arity();
  Polynomial<R> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [m, c] : b.components[i].terms()) out.add_term(m + MultiIndex::unit(n, i), c);
  return out;
}

/// !(0): keep only the constant term.
template <Rig R>
Polynomial<R> eval0(const Polynomial<R>& p) {
  return Polynomial<R>::constant(p.arity(), p.coefficient(MultiIndex(p.arity())));
}

/// K = d°;d + !(0), built literally from the composite.
template <Rig R>
Polynomial<R> k_op(const Polynomial<R>& p) {
  return mul_in(grad(p)) + eval0(p);
}

/// J = d°;d + 1, built literally from the composite.
template <Rig R>
Polynomial<R> j_op(const Polynomial<R>& p) {
  return mul_in(grad(p)) + p;
}

/// Scales each degree-n block by f(n).
template <Rig R, class F>
Polynomial<R> scale_by_degree(const Polynomial<R>& p, F&& f) {
  Polynomial<R> out(p.arity());
  for (const auto& [m, c] : p.terms()) out.add_term(m, f(m.degree()) * c);
  return out;
}

template <Rig R>
Polynomial<R> k_inverse(const Polynomial<R>& p) {
  require_nat_inverses<R>();
  return scale_by_degree(p, [](unsigned n) { return n == 0 ? R::one() : nat_inverse<R>(n); });
}

template <Rig R>
Polynomial<R> j_inverse(const Polynomial<R>& p) {
  require_nat_inverses<R>();
  return scale_by_degree(p, [](unsigned n) { return nat_inverse<R>(n + 1); });
}

/// Integration in one variable: x_i^k |-> x_i^{k+1} / (k+1).
template <Rig R>
Polynomial<R> integrate_var(const Polynomial<R>& p, std::size_t i) {
  if (i >= p.arity()) throw ArityMismatch("integrate_var", p.arity(), i + 1);
  require_nat_inverses<R>();
  Polynomial<R> out(p.arity());
  for (const auto& [m, c] : p.terms()) {
    MultiIndex raised = m;
    raised.set(i, m[i] + 1);
    out.add_term(raised, nat_inverse<R>(m[i] + 1) * c);
  }
  return out;
}

/// s_R, the integral at the monoidal unit (arity 1 only).
template <Rig R>
Polynomial<R> integrate1(const Polynomial<R>& p) {
  if (p.arity() != 1) throw ArityMismatch("integrate1", 1, p.arity());
  return integrate_var(p, 0);
}

/// d at the unit, returning the single component.
template <Rig R>
Polynomial<R> grad1(const Polynomial<R>& p) {
  if (p.arity() != 1) throw ArityMismatch("grad1", 1, p.arity());
  return partial(p, 0);
}

/// Multiplication by the unit generator (d° at the unit).
template <Rig R>
Polynomial<R> mul_x(const Polynomial<R>& p) {
  if (p.arity() != 1) throw ArityMismatch("mul_x", 1, p.arity());
  return mul_in(PolyBundle<R>(std::vector{p}));
}

/// s = K^{-1} ; d°. Closed form: x^a (x) e_i |-> x_i x^a / (|a| + 1).
template <Rig R>
Polynomial<R> antiderivative(const PolyBundle<R>& b) {
  require_nat_inverses<R>();
  const std::size_t n = b.arity();
  Polynomial<R> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [m, c] : b.components[i].terms())
      out.add_term(m + MultiIndex::unit(n, i), nat_inverse<R>(m.degree() + 1) * c);
  return out;
}

/// Dual of m_{R,A}: x^a |-> t^{|a|} (x) x^a.
template <Rig R>
PolyTensor<R> t_grade(const Polynomial<R>& p) {
  Polynomial<R> joint(p.arity() + 1);
  for (const auto& [m, c] : p.terms()) joint.add_term(MultiIndex(std::vector<unsigned>{m.degree()}).join(m), c);
  return PolyTensor<R>{1, std::move(joint)};
}

/// Dual of m_R on the left factor: substitutes 1 for every left variable.
template <Rig R>
Polynomial<R> eval_at_one(const PolyTensor<R>& q) {
  Polynomial<R> out(q.right_arity());
  for (const auto& [m, c] : q.joint.terms()) out.add_term(m.slice(q.left_arity, m.arity()), c);
  return out;
}

/// Sym(M x N) -> Sym(M) (x) Sym(N), the first left_vars variables going left.
template <Rig R>
PolyTensor<R> seely_split(const Polynomial<R>& p, std::size_t left_vars) {
  if (left_vars > p.arity()) throw ArityMismatch("seely_split", p.arity(), left_vars);
  return PolyTensor<R>{left_vars, p};
}

template <Rig R>
Polynomial<R> seely_merge(const PolyTensor<R>& t) {
  return t.joint;
}

/// Evaluates p at a point of R^arity.
template <Rig R>
R evaluate(const Polynomial<R>& p, const std::vector<R>& point) {
  if (point.size() != p.arity()) throw ArityMismatch("evaluate", p.arity(), point.size());
  R total = R::zero();
  for (const auto& [m, c] : p.terms()) {
    R term = c;
    for (std::size_t i = 0; i < m.arity(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) term = term * point[i];
    total = total + term;
  }
  return total;
}

/// Replaces x_i by images[i]; all images share one arity.
template <Rig R>
Polynomial<R> substitute(const Polynomial<R>& p, const std::vector<Polynomial<R>>& images, std::size_t image_arity) {
  if (images.size() != p.arity()) throw ArityMismatch("substitute", p.arity(), images.size());
  for (const auto& q : images)
    if (q.arity() != image_arity) throw ArityMismatch("substitute", image_arity, q.arity());
  // powers[i][k] = images[i]^k, filled on demand.
  std::vector<std::vector<Polynomial<R>>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial<R>& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(Polynomial<R>::constant(image_arity, R::one()));
    while (row.size() <= k) row.push_back(row.back() * images[i]);
    return row[k];
  };
  Polynomial<R> out(image_arity);
  for (const auto& [m, c] : p.terms()) {
    Polynomial<R> term = Polynomial<R>::constant(image_arity, c);
    for (std::size_t i = 0; i < m.arity(); ++i)
      if (m[i] != 0) term = term * power(i, m[i]);
    out += term;
  }
  return out;
}

/// Sym applied to a linear map. M has one row per new variable y_i and one
/// column per old variable x_j, and x_j |-> sum_i M[i][j] y_i. With this
/// convention grad(apply_linear(M, p))_i = sum_j M[i][j] apply_linear(M, d_j p).
/// For M = [[1, 2], [0, 1]]: x |-> y1, y |-> 2 y1 + y2, so x*y |-> 2 y1^2 + y1 y2.
template <Rig R>
Polynomial<R> apply_linear(const std::vector<std::vector<R>>& M, const Polynomial<R>& p) {
  const std::size_t m = M.size();
  for (const auto& row : M)
    if (row.size() != p.arity()) throw ArityMismatch("apply_linear", p.arity(), row.size());
  if (m == 0 && p.arity() != 0) {
    // No new variables: every x_j goes to 0.
    Polynomial<R> out(0);
    out.add_term(MultiIndex(0), p.coefficient(MultiIndex(p.arity())));
    return out;
  }
  std::vector<Polynomial<R>> images;
  for (std::size_t j = 0; j < p.arity(); ++j) {
    Polynomial<R> image(m);
    for (std::size_t i = 0; i < m; ++i) image.add_term(MultiIndex::unit(m, i), M[i][j]);
    images.push_back(std::move(image));
  }
  return substitute(p, images, m);
}

/// (g o f)(x) = g(f(x)); f: R^n -> R^m, g: R^m -> R^k.
template <Rig R>
PolyMap<R> cokleisli_compose(const PolyMap<R>& g, const PolyMap<R>& f) {
  if (g.in_arity != f.out_arity()) throw ArityMismatch("cokleisli_compose", g.in_arity, f.out_arity());
  std::vector<Polynomial<R>> coords;
  for (const auto& gc : g.coordinates) coords.push_back(substitute(gc, f.coordinates, f.in_arity));
  return PolyMap<R>(f.in_arity, std::move(coords));
}

/// D[f](x, v) = Jf(x) v, as a map on 2n variables (x first, then v).
template <Rig R>
PolyMap<R> cartesian_derivative(const PolyMap<R>& f) {
  const std::size_t n = f.in_arity;
  std::vector<Polynomial<R>> lift;  // x_i as polynomials in (x, v)
  for (std::size_t i = 0; i < n; ++i) lift.push_back(Polynomial<R>::variable(2 * n, i));
  std::vector<Polynomial<R>> coords;
  for (const auto& fc : f.coordinates) {
    Polynomial<R> out(2 * n);
    for (std::size_t j = 0; j < n; ++j)
      out += substitute(partial(fc, j), lift, 2 * n) * Polynomial<R>::variable(2 * n, n + j);
    coords.push_back(std::move(out));
  }
  return PolyMap<R>(2 * n, std::move(coords));
}

// ---------------------------------------------------------------------------
// Reconstructions from an integral at the monoidal unit
// ---------------------------------------------------------------------------

template <Rig R>
using UnitIntegral = std::function<Polynomial<R>(const Polynomial<R>&)>;

template <Rig R>
UnitIntegral<R> default_unit_integral() {
  return [](const Polynomial<R>& p) { return integrate1(p); };
}

/// J^{-1}_A = (m_R (x) 1)(s_R (x) 1) m_{R,A}.
template <Rig R>
Polynomial<R> from_unit_j_inverse(const Polynomial<R>& p, const UnitIntegral<R>& s_unit) {
  return eval_at_one(t_grade(p).map_left(s_unit));
}

/// K^{-1}_A = (m_R (x) m_R (x) 1)(s_R (x) s_R (x) 1)(m_{R,R} (x) 1)(d_R (x) 1) m_{R,A} + !(0).
template <Rig R>
Polynomial<R> from_unit_k_inverse(const Polynomial<R>& p, const UnitIntegral<R>& s_unit) {
  PolyTensor<R> graded = t_grade(p).map_left([](const Polynomial<R>& q) { return grad1(q); });
  // m_{R,R} on the unit factor: t^n |-> u^n v^n, leaving two unit factors.
  PolyTensor<R> doubled = graded.map_left([](const Polynomial<R>& q) { return seely_merge(t_grade(q)); });
  PolyTensor<R> integrated = doubled.map_left([&](const Polynomial<R>& uv) {
    PolyTensor<R> split = seely_split(uv, 1);
    split = split.map_left(s_unit);
    split = split.map_right(s_unit);
    return seely_merge(split);
  });
  return eval_at_one(integrated) + eval0(p);
}

/// s_A = (m_R (x) 1)(s_R (x) d°)(m_{R,A} (x) 1).
template <Rig R>
Polynomial<R> from_unit_integral(const PolyBundle<R>& b, const UnitIntegral<R>& s_unit) {
  const std::size_t n = b.arity();
  Polynomial<R> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    PolyTensor<R> graded = t_grade(b.components[i]).map_left(s_unit);
    graded = graded.map_right([&](const Polynomial<R>& q) {
      PolyBundle<R> single(n);
      single.components[i] = q;
      return mul_in(single);
    });
    out += eval_at_one(graded);
  }
  return out;
}

extern template class Polynomial<NonNegRational>;
extern template class Polynomial<Rational>;
extern template class Polynomial<Boolean>;
extern template class Polynomial<Natural>;

}  // namespace dlc::poly
