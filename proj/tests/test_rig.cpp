#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dlcat/rig.hpp"

using namespace dlc;

namespace {

template <Rig R>
void expect_axioms_hold() {
  for (const auto& rep : rig_laws_check<R>(300, 7)) {
    INFO(R::descriptor().name, " ", rep.id, " ", rep.counterexample ? rep.counterexample->input : "");
    CHECK(rep.status == LawStatus::pass);
  }
}

}  // namespace

TEST_CASE("semiring axioms hold for every instance") {
  expect_axioms_hold<NonNegRational>();
  expect_axioms_hold<Rational>();
  expect_axioms_hold<Boolean>();
  expect_axioms_hold<Natural>();
}

TEST_CASE("axiom check rejects an empty sample") {
  CHECK_THROWS_AS(rig_laws_check<Boolean>(0, 1), std::invalid_argument);
}

TEST_CASE("nat_value is repeated addition of one") {
  CHECK(nat_value<NonNegRational>(0) == NonNegRational::zero());
  CHECK(nat_value<NonNegRational>(7) == NonNegRational(7, 1));
  CHECK(nat_value<Natural>(1000) == Natural(1000UL));
  CHECK(nat_value<Boolean>(0) == Boolean(false));
  CHECK(nat_value<Boolean>(5) == Boolean(true));
  CHECK(nat_value<Rational>(12) == Rational(12, 1));
}

TEST_CASE("inverses of positive integers") {
  for (std::uint64_t k = 1; k <= 20; ++k) {
    CHECK(nat_inverse<NonNegRational>(k) * nat_value<NonNegRational>(k) == NonNegRational::one());
    CHECK(nat_inverse<Rational>(k) * nat_value<Rational>(k) == Rational::one());
  }
  CHECK(nat_inverse<Boolean>(4) == Boolean(true));
  CHECK(nat_inverse<Natural>(1) == Natural::one());
  CHECK_THROWS_AS(nat_inverse<Natural>(2), NotInvertible);
  CHECK_THROWS_AS(nat_inverse<NonNegRational>(0), NotInvertible);
}

TEST_CASE("require_nat_inverses names the first failing integer") {
  CHECK_NOTHROW(require_nat_inverses<NonNegRational>());
  CHECK_NOTHROW(require_nat_inverses<Boolean>());
  try {
    require_nat_inverses<Natural>();
    FAIL("expected NotInvertible");
  } catch (const NotInvertible& e) {
    CHECK(e.k() == 2);
    CHECK(e.rig() == "natural");
  }
}

TEST_CASE("descriptor flags") {
  CHECK(Boolean::descriptor().idempotent);
  CHECK_FALSE(NonNegRational::descriptor().idempotent);
  CHECK(NonNegRational::descriptor().nat_invertible);
  CHECK_FALSE(Natural::descriptor().nat_invertible);
}

TEST_CASE("rationals are exact and canonical") {
  CHECK(NonNegRational(2, 6) == NonNegRational(1, 3));
  CHECK(to_string(NonNegRational(2, 6)) == "1/3");
  CHECK(to_string(NonNegRational(4, 2)) == "2");
  CHECK(to_string(Rational(-2, 5)) == "-2/5");
  CHECK(to_string(Boolean(true)) == "1");
  CHECK(to_string(Natural(42UL)) == "42");
  CHECK(NonNegRational(1, 3) + NonNegRational(1, 6) == NonNegRational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(-Rational(3, 4) + Rational(3, 4) == Rational::zero());
}

TEST_CASE("non-negative rationals reject negative values") {
  CHECK_THROWS_AS(NonNegRational(-1, 2), std::domain_error);
}

TEST_CASE("samples are reproducible from the seed") {
  Rng a(99), b(99);
  for (int i = 0; i < 50; ++i) CHECK(NonNegRational::sample(a) == NonNegRational::sample(b));
}
