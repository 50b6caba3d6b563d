#include "dlcat/rig.hpp"

namespace dlc {

NotInvertible::NotInvertible(std::string rig, std::uint64_t k)
    : std::domain_error(std::to_string(k) + " has no inverse in semiring '" + rig + "'"),
      rig_(std::move(rig)),
      k_(k) {}

namespace {

mpq_class canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

mpq_class make_q(long num, unsigned long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return canonical(mpq_class(num, den));
}

mpq_class small_rational(Rng& rng, long lo) {
  const long num = uniform_int(rng, lo, 9);
  const auto den = static_cast<unsigned long>(uniform_int(rng, 1, 4));
  return make_q(num, den);
}

}  // namespace

// --- NonNegRational ---------------------------------------------------------

NonNegRational::NonNegRational(mpq_class value) : value_(canonical(std::move(value))) {
  if (sgn(value_) < 0) throw std::domain_error("negative value in nonneg-rational: " + value_.get_str());
}

NonNegRational::NonNegRational(long num, unsigned long den) : NonNegRational(make_q(num, den)) {}

std::optional<NonNegRational> NonNegRational::inverse_of_nat(std::uint64_t k) {
  if (k == 0) return std::nullopt;
  return NonNegRational(mpq_class(1, static_cast<unsigned long>(k)));
}

NonNegRational NonNegRational::sample(Rng& rng) { return NonNegRational(small_rational(rng, 0)); }

NonNegRational operator+(const NonNegRational& a, const NonNegRational& b) {
  NonNegRational r;
  r.value_ = a.value_ + b.value_;
  return r;
}

NonNegRational operator*(const NonNegRational& a, const NonNegRational& b) {
  NonNegRational r;
  r.value_ = a.value_ * b.value_;
  return r;
}

// --- Rational ---------------------------------------------------------------

Rational::Rational(mpq_class value) : value_(canonical(std::move(value))) {}

Rational::Rational(long num, unsigned long den) : value_(make_q(num, den)) {}

std::optional<Rational> Rational::inverse_of_nat(std::uint64_t k) {
  if (k == 0) return std::nullopt;
  return Rational(mpq_class(1, static_cast<unsigned long>(k)));
}

Rational Rational::sample(Rng& rng) { return Rational(small_rational(rng, -9)); }

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  r.value_ = a.value_ + b.value_;
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational r;
  r.value_ = a.value_ - b.value_;
  return r;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.value_ = -a.value_;
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  r.value_ = a.value_ * b.value_;
  return r;
}

// --- Boolean ----------------------------------------------------------------

// 1 + ... + 1 = 1 for every k >= 1, and 1 is its own inverse.
std::optional<Boolean> Boolean::inverse_of_nat(std::uint64_t k) {
  if (k == 0) return std::nullopt;
  return Boolean(true);
}

Boolean Boolean::sample(Rng& rng) { return Boolean((rng() >> 63) != 0); }

// --- Natural ----------------------------------------------------------------

Natural::Natural(mpz_class value) : value_(std::move(value)) {
  if (sgn(value_) < 0) throw std::domain_error("negative value in natural: " + value_.get_str());
}

std::optional<Natural> Natural::inverse_of_nat(std::uint64_t k) {
  if (k == 1) return Natural::one();
  return std::nullopt;
}

Natural Natural::sample(Rng& rng) { return Natural(static_cast<unsigned long>(uniform_below(rng, 10))); }

Natural operator+(const Natural& a, const Natural& b) { return Natural(mpz_class(a.value_ + b.value_)); }

Natural operator*(const Natural& a, const Natural& b) { return Natural(mpz_class(a.value_ * b.value_)); }

// --- rendering --------------------------------------------------------------

std::string to_string(const NonNegRational& r) { return r.value().get_str(); }
std::string to_string(const Rational& r) { return r.value().get_str(); }
std::string to_string(Boolean r) { return r.value() ? "1" : "0"; }
std::string to_string(const Natural& r) { return r.value().get_str(); }

}  // namespace dlc
