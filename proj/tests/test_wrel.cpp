#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dlcat/random.hpp"
#include "dlcat/wrel.hpp"

using namespace dlc;
using namespace dlc::rel;

using Q = NonNegRational;
using M = WeightedMatrix<Q>;

namespace {

M random_matrix(Rng& rng, const IndexSpace& rows, const IndexSpace& cols) {
  M m(rows, cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (uniform_below(rng, 3) == 0) m.set(r, c, Q::sample(rng));
  return m;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("bags are enumerated by size, then reverse-lexicographically") {
  const BaseSet X = BaseSet::letters(2);
  const Factor f = Factor::bags(X, 2);
  std::vector<std::string> seen;
  for (std::size_t i = 0; i < f.size(); ++i) seen.push_back(f.render_point(i));
  CHECK(seen == std::vector<std::string>{"[]", "[a]", "[b]", "[a,a]", "[a,b]", "[b,b]"});
}

TEST_CASE("number of bags of size at most D over n atoms is C(D + n, n)") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned D = 0; D <= 6; ++D) CHECK(Factor::bags(BaseSet::letters(n), D).size() == binomial(D + n, n));
}

TEST_CASE("disjoint union renames clashing atoms") {
  const BaseSet u = BaseSet::disjoint_union(BaseSet::letters(2), BaseSet::letters(1));
  CHECK(u.size() == 3);
  CHECK(u[2] != u[0]);
}

TEST_CASE("composition matches a dense matrix product") {
  Rng rng(4);
  const IndexSpace a = IndexSpace::atoms(BaseSet::letters(3));
  const IndexSpace b = IndexSpace::bags(BaseSet::letters(2), 2);
  const IndexSpace c = IndexSpace::atoms(BaseSet::letters(2));
  for (int i = 0; i < 20; ++i) {
    const M f = random_matrix(rng, a, b), g = random_matrix(rng, b, c);
    const M fg = compose(f, g);
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t z = 0; z < c.size(); ++z) {
        Q sum = Q::zero();
        for (std::size_t y = 0; y < b.size(); ++y) sum = sum + f.at(x, y) * g.at(y, z);
        CHECK(fg.at(x, z) == sum);
      }
  }
  CHECK_THROWS_AS(compose(random_matrix(rng, a, c), random_matrix(rng, a, c)), SpaceMismatch);
}

TEST_CASE("unit deriving and integral entries") {
  const Truncation t(8, 2);
  const M d = unit_deriving<Q>(t), s = unit_integral<Q>(t), dco = unit_coderiving<Q>(t);
  for (unsigned n = 0; n < 8; ++n) CHECK(d.at(n, n + 1) == nat_value<Q>(n + 1));
  for (unsigned n = 1; n <= 8; ++n) {
    CHECK(s.at(n, n - 1) == Q(1, n));
    CHECK(dco.at(n, n - 1) == Q::one());
  }
  CHECK(d.nnz() == 8);
  CHECK(s.nnz() == 8);
  CHECK(s.at(0, 0) == Q::zero());
}

TEST_CASE("s d + !(0) at the unit: 1 at n = 0 from !(0), n^-1 * n otherwise") {
  const Truncation t(8, 2);
  const M sd = compose(unit_integral<Q>(t), unit_deriving<Q>(t));
  const M lhs = sd + unit_bang_zero<Q>(t);
  CHECK(sd.at(0, 0) == Q::zero());
  for (unsigned n = 1; n <= 8; ++n) CHECK(sd.at(n, n) == Q::one());
  CHECK(compare_on_band(lhs, identity<Q>(unit_bags(t)), t).equal());
  // s then d never leaves the truncation, so the identity also holds off the band.
  CHECK(lhs == identity<Q>(unit_bags(t)));
}

TEST_CASE("d then s breaks at the top of the truncation, not on the safe band") {
  const Truncation t(5, 2);
  const M ds = compose(unit_deriving<Q>(t), unit_integral<Q>(t));
  CHECK(ds.at(5, 5) == Q::zero());  // d has no room above D
  CHECK(compare_on_band(ds, identity<Q>(unit_bags(t)), t).equal());
  CHECK_FALSE(ds == identity<Q>(unit_bags(t)));
}

TEST_CASE("size shifts of the structure maps") {
  const BaseSet X = BaseSet::letters(2);
  const Truncation t(5, 2);
  CHECK(size_shift(deriving<Q>(X, t)) == 1);  // atoms do not count toward bag size
  CHECK(size_shift(coderiving<Q>(X, t)) == -1);
  CHECK(size_shift(k_matrix<Q>(X, t)) == 0);
}

TEST_CASE("d uses the multiplicity of the inserted atom") {
  const BaseSet X = BaseSet::letters(2);
  const Truncation t(4, 2);
  const M d = deriving<Q>(X, t);
  const Factor bags = Factor::bags(X, 4);
  const std::size_t aa = bags.index_of(Bag({2, 0}));
  const std::size_t ab = bags.index_of(Bag({1, 1}));
  // ([a], a) -> [a, a] with weight 2; ([b], a) -> [a, b] with weight 1
  CHECK(d.at(bags.index_of(Bag({1, 0})) * 2 + 0, aa) == Q(2, 1));
  CHECK(d.at(bags.index_of(Bag({0, 1})) * 2 + 0, ab) == Q::one());
}

TEST_CASE("the size-of-result coefficient would break the Leibniz rule") {
  const BaseSet X = BaseSet::letters(2);
  const Truncation t(4, 2);
  const IndexSpace B = IndexSpace::bags(X, t.D), A = IndexSpace::atoms(X);
  const Factor& bf = B.factors()[0];
  M bad(B * A, B);
  for (std::size_t i = 0; i < bf.size(); ++i) {
    if (bf.bag(i).size() >= t.D) continue;
    for (std::size_t a = 0; a < 2; ++a) {
      const Bag target = bf.bag(i).plus(a);
      bad.set(i * 2 + a, bf.index_of(target), nat_value<Q>(target.size()));
    }
  }
  const M delta = comonoid<Q>(X, t).delta;
  const M split = tensor(delta, identity<Q>(A));
  const M rhs = compose(split, tensor(identity<Q>(B), bad)) +
                compose(compose(split, tensor(identity<Q>(B), symmetry<Q>(B, A))), tensor(bad, identity<Q>(B)));
  const M lhs = compose(bad, delta);
  // b = [b], x = a, target ([a], [b])
  const std::size_t row = bf.index_of(Bag({0, 1})) * 2 + 0;
  const std::size_t col = bf.index_of(Bag({1, 0})) * bf.size() + bf.index_of(Bag({0, 1}));
  CHECK(lhs.at(row, col) == Q(2, 1));
  CHECK(rhs.at(row, col) == Q::one());
  CHECK_FALSE(compare_on_band(lhs, rhs, t).equal());
}

TEST_CASE("Boolean integral is the coderiving transformation on the full matrix") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const BaseSet X = BaseSet::letters(n);
    const Truncation t(5, 2);
    CHECK(integral<Boolean>(X, t) == coderiving<Boolean>(X, t));
  }
}

TEST_CASE("Seely map is a permutation whose inverse is its transpose") {
  const Truncation t(4, 2);
  const Seely<Q> s = seely<Q>(BaseSet::letters(2), BaseSet::letters(1), t);
  for (std::size_t r = 0; r < s.chi.rows().size(); ++r) {
    const auto* row = s.chi.row(r);
    REQUIRE(row);
    CHECK(row->size() == 1);
    CHECK(row->begin()->second == Q::one());
  }
  CHECK(s.chi_inv == s.chi.transpose());
  CHECK(compare_on_band(compose(s.chi, s.chi_inv), identity<Q>(s.chi.rows()), t, BandRule::total).equal());
}

TEST_CASE("! of a relation sums over distinct orderings") {
  const IndexSpace X = IndexSpace::atoms(BaseSet::letters(2));
  const Truncation t(3, 2);
  M f(X, X);
  f.set(0, 0, Q(2, 1));
  f.set(0, 1, Q::one());
  f.set(1, 0, Q(3, 1));
  const M bf = bang_map(f, t);
  const Factor bags = Factor::bags(BaseSet::letters(2), 3);
  // [a, b] -> [a, a]: orderings (a, b) and (b, a) against (a, a): f(a,a) f(b,a) + f(b,a) f(a,a) = 12
  CHECK(bf.at(bags.index_of(Bag({1, 1})), bags.index_of(Bag({2, 0}))) == Q(12, 1));
  // [a, a] -> [a, b]: one distinct ordering (a, a) against (a, b): f(a,a) f(a,b) = 2
  CHECK(bf.at(bags.index_of(Bag({2, 0})), bags.index_of(Bag({1, 1}))) == Q(2, 1));
  CHECK(bang_map(identity<Q>(X), t) == identity<Q>(IndexSpace::bags(BaseSet::letters(2), 3)));
}

TEST_CASE("reconstruction from the unit integral equals the direct operators") {
  const Truncation t(5, 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    const BaseSet X = BaseSet::letters(n);
    const Reconstruction<Q> rec = reconstruct_from_unit<Q>(X, t, unit_integral<Q>(t));
    CHECK(compare_on_band(rec.k_inv, k_inverse<Q>(X, t), t).equal());
    CHECK(compare_on_band(rec.j_inv, j_inverse<Q>(X, t), t).equal());
    CHECK(compare_on_band(rec.s, integral<Q>(X, t), t).equal());
  }
}

TEST_CASE("band comparison reports the first differing entry") {
  const Truncation t(4, 2);
  const IndexSpace B = unit_bags(t);
  M a = identity<Q>(B), b = identity<Q>(B);
  b.set(2, 2, Q(3, 1));
  const auto cmp = compare_on_band(a, b, t);
  REQUIRE(cmp.mismatch);
  CHECK(cmp.mismatch->row == 2);
  CHECK(cmp.mismatch->rhs == Q(3, 1));
  b = identity<Q>(B);
  b.set(4, 4, Q(3, 1));  // size 4 > D - margin
  CHECK(compare_on_band(a, b, t).equal());
}

TEST_CASE("truncation needs a margin of at least two") {
  CHECK_THROWS_AS(Truncation(5, 1), std::invalid_argument);
  CHECK(Truncation(5, 2).safe_size() == 3);
}

TEST_CASE("integration needs inverses of positive integers") {
  CHECK_THROWS_AS(integral<Natural>(BaseSet::letters(1), Truncation(4, 2)), NotInvertible);
  CHECK_NOTHROW(deriving<Natural>(BaseSet::letters(1), Truncation(4, 2)));
}
