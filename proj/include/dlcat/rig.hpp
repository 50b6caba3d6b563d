#pragma once

/*
 * Commutative semirings with exact equality.
 *
 * Every coefficient in the polynomial and weighted-relational models lives in
 * a type satisfying the `Rig` concept below. Two properties of an instance
 * decide which operators are available on top of it:
 *
 *   - additive idempotence (1 + 1 = 1), which collapses every multiplicity
 *     coefficient to one, and
 *   - invertibility of the positive naturals k = 1 + ... + 1, which is what
 *     integration needs.
 *
 * All instances are exact (GMP integers and rationals underneath); there is
 * no floating point in this module.
 */

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dlcat/random.hpp"
#include "dlcat/report.hpp"

namespace dlc {

struct RigDescriptor {
  std::string name;
  bool idempotent = false;
  bool nat_invertible = false;
};

/// Thrown when k = 1 + ... + 1 has no multiplicative inverse in a semiring.
class NotInvertible : public std::domain_error {
 public:
  NotInvertible(std::string rig, std::uint64_t k);

  const std::string& rig() const noexcept { return rig_; }
  std::uint64_t k() const noexcept { return k_; }

 private:
  std::string rig_;
  std::uint64_t k_;
};

// clang-format off
template <class R>
concept Rig = std::copyable<R> && std::equality_comparable<R> &&
  requires(const R& a, const R& b, std::uint64_t k, Rng& rng) {
    { R::zero() } -> std::same_as<R>;
    { R::one() } -> std::same_as<R>;
    { a + b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { R::descriptor() } -> std::same_as<RigDescriptor>;
    { R::inverse_of_nat(k) } -> std::same_as<std::optional<R>>;
    { R::sample(rng) } -> std::same_as<R>;
    { to_string(a) } -> std::convertible_to<std::string>;
  };

/// Instances that also have additive inverses (used only where a law is
/// naturally stated with subtraction).
template <class R>
concept RigWithNegation = Rig<R> && requires(const R& a, const R& b) {
  { a - b } -> std::same_as<R>;
  { -a } -> std::same_as<R>;
};

/// Instances with a finite carrier, enumerable for exhaustive law checks.
template <class R>
concept FiniteRig = Rig<R> && requires {
  { R::elements() } -> std::same_as<std::vector<R>>;
};
// clang-format on

/// One added to itself k times (double-and-add, so large k stays cheap).
template <Rig R>
R nat_value(std::uint64_t k) {
  R result = R::zero();
  R power = R::one();
  while (k != 0) {
    if (k & 1U) result = result + power;
    power = power + power;
    k >>= 1U;
  }
  return result;
}

template <Rig R>
R nat_inverse(std::uint64_t k) {
  if (k == 0) throw NotInvertible(R::descriptor().name, k);
  auto inv = R::inverse_of_nat(k);
  if (!inv) throw NotInvertible(R::descriptor().name, k);
  return *std::move(inv);
}

/// Throws NotInvertible naming the smallest k without an inverse, unless the
/// semiring inverts every positive natural. Integration operators call this
/// up front so they fail the same way whatever the input's degrees.
template <Rig R>
void require_nat_inverses() {
  if (R::descriptor().nat_invertible) return;
  for (std::uint64_t k = 1; k <= 64; ++k)
    if (!R::inverse_of_nat(k)) throw NotInvertible(R::descriptor().name, k);
}

template <Rig R>
bool is_zero(const R& r) {
  return r == R::zero();
}

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

/// Non-negative rationals, exact.
class NonNegRational {
 public:
  NonNegRational() = default;
  /// Throws std::domain_error on a negative value.
  explicit NonNegRational(mpq_class value);
  NonNegRational(long num, unsigned long den);

  static NonNegRational zero() { return {}; }
  static NonNegRational one() { return NonNegRational(1, 1); }
  static RigDescriptor descriptor() { return {"nonneg-rational", false, true}; }
  static std::optional<NonNegRational> inverse_of_nat(std::uint64_t k);
  static NonNegRational sample(Rng& rng);

  const mpq_class& value() const noexcept { return value_; }

  friend NonNegRational operator+(const NonNegRational& a, const NonNegRational& b);
  friend NonNegRational operator*(const NonNegRational& a, const NonNegRational& b);
  friend bool operator==(const NonNegRational& a, const NonNegRational& b) { return a.value_ == b.value_; }

 private:
  mpq_class value_{0};
};

/// The rational field, exact.
class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class value);
  Rational(long num, unsigned long den);

  static Rational zero() { return {}; }
  static Rational one() { return Rational(1, 1); }
  static RigDescriptor descriptor() { return {"rational", false, true}; }
  static std::optional<Rational> inverse_of_nat(std::uint64_t k);
  static Rational sample(Rng& rng);

  const mpq_class& value() const noexcept { return value_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

 private:
  mpq_class value_{0};
};

/// The two-element Boolean algebra: add = or, mul = and.
class Boolean {
 public:
  constexpr Boolean() = default;
  constexpr explicit Boolean(bool v) : value_(v) {}

  static Boolean zero() { return Boolean(false); }
  static Boolean one() { return Boolean(true); }
  static RigDescriptor descriptor() { return {"boolean", true, true}; }
  static std::optional<Boolean> inverse_of_nat(std::uint64_t k);
  static Boolean sample(Rng& rng);
  static std::vector<Boolean> elements() { return {Boolean(false), Boolean(true)}; }

  constexpr bool value() const noexcept { return value_; }

  friend Boolean operator+(Boolean a, Boolean b) { return Boolean(a.value_ || b.value_); }
  friend Boolean operator*(Boolean a, Boolean b) { return Boolean(a.value_ && b.value_); }
  friend bool operator==(Boolean a, Boolean b) = default;

 private:
  bool value_ = false;
};

/// Natural numbers, exact. Only 1 is invertible, so every integration
/// operator refuses this instance.
class Natural {
 public:
  Natural() = default;
  explicit Natural(mpz_class value);
  explicit Natural(unsigned long value) : value_(value) {}

  static Natural zero() { return {}; }
  static Natural one() { return Natural(1UL); }
  static RigDescriptor descriptor() { return {"natural", false, false}; }
  static std::optional<Natural> inverse_of_nat(std::uint64_t k);
  static Natural sample(Rng& rng);

  const mpz_class& value() const noexcept { return value_; }

  friend Natural operator+(const Natural& a, const Natural& b);
  friend Natural operator*(const Natural& a, const Natural& b);
  friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }

 private:
  mpz_class value_{0};
};

std::string to_string(const NonNegRational& r);
std::string to_string(const Rational& r);
std::string to_string(Boolean r);
std::string to_string(const Natural& r);

// ---------------------------------------------------------------------------
// Axiom checking
// ---------------------------------------------------------------------------

namespace detail {

template <Rig R>
struct AxiomRun {
  std::string instance;
  std::vector<LawReport> reports;

  // Records one axiom; `check` returns a counterexample on failure.
  template <class Check>
  void run(const std::string& id, std::size_t cases, Check&& check) {
    LawReport rep;
    rep.id = id;
    rep.model = instance;
    rep.cases = cases;
    if (auto cx = check()) {
      rep.status = LawStatus::fail;
      rep.counterexample = std::move(cx);
    }
    reports.push_back(std::move(rep));
  }
};

template <Rig R>
std::string triple(const R& a, const R& b, const R& c) {
  return "a=" + to_string(a) + ", b=" + to_string(b) + ", c=" + to_string(c);
}

}  // namespace detail

/**
 * Evaluates the commutative-semiring axioms on seeded random triples (plus
 * the full carrier when it is finite), and cross-checks the descriptor flags:
 * `idempotent` against 1 + 1 = 1, and `nat_invertible` against nat_inverse
 * succeeding for every k in [1, probe_bound].
 */
template <Rig R>
std::vector<LawReport> rig_laws_check(std::size_t samples, std::uint64_t seed,
                                      std::uint64_t probe_bound = 32) {
  if (samples == 0) throw std::invalid_argument("rig_laws_check: samples must be >= 1");

  Rng rng(seed);
  std::vector<std::array<R, 3>> triples;
  triples.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    R a = R::sample(rng);
    R b = R::sample(rng);
    R c = R::sample(rng);
    triples.push_back({a, b, c});
  }
  if constexpr (FiniteRig<R>) {
    const auto all = R::elements();
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) triples.push_back({a, b, c});
  }

  detail::AxiomRun<R> run{R::descriptor().name, {}};
  const std::size_t n = triples.size();
  const R zero = R::zero();
  const R one = R::one();

  auto for_all = [&](auto&& pred) -> std::optional<Counterexample> {
    for (const auto& [a, b, c] : triples) {
      auto [lhs, rhs] = pred(a, b, c);
      if (!(lhs == rhs)) return Counterexample{detail::triple(a, b, c), to_string(lhs), to_string(rhs)};
    }
    return std::nullopt;
  };

  run.run("add_associative", n, [&] {
    return for_all([](const R& a, const R& b, const R& c) { return std::pair{(a + b) + c, a + (b + c)}; });
  });
  run.run("add_commutative", n, [&] {
    return for_all([](const R& a, const R& b, const R&) { return std::pair{a + b, b + a}; });
  });
  run.run("add_unit", n, [&] {
    return for_all([&](const R& a, const R&, const R&) { return std::pair{a + zero, a}; });
  });
  run.run("mul_associative", n, [&] {
    return for_all([](const R& a, const R& b, const R& c) { return std::pair{(a * b) * c, a * (b * c)}; });
  });
  run.run("mul_commutative", n, [&] {
    return for_all([](const R& a, const R& b, const R&) { return std::pair{a * b, b * a}; });
  });
  run.run("mul_unit", n, [&] {
    return for_all([&](const R& a, const R&, const R&) { return std::pair{a * one, a}; });
  });
  run.run("distributive", n, [&] {
    return for_all([](const R& a, const R& b, const R& c) { return std::pair{a * (b + c), a * b + a * c}; });
  });
  run.run("zero_annihilates", n, [&] {
    return for_all([&](const R& a, const R&, const R&) { return std::pair{a * zero, zero}; });
  });

  run.run("nat_value_homomorphism", probe_bound * probe_bound, [&]() -> std::optional<Counterexample> {
    for (std::uint64_t p = 0; p < probe_bound; ++p) {
      for (std::uint64_t q = 0; q < probe_bound; ++q) {
        if (!(nat_value<R>(p + q) == nat_value<R>(p) + nat_value<R>(q)) ||
            !(nat_value<R>(p * q) == nat_value<R>(p) * nat_value<R>(q))) {
          return Counterexample{"p=" + std::to_string(p) + ", q=" + std::to_string(q),
                                to_string(nat_value<R>(p * q)), to_string(nat_value<R>(p) * nat_value<R>(q))};
        }
      }
    }
    return std::nullopt;
  });

  run.run("idempotent_flag", 1, [&]() -> std::optional<Counterexample> {
    const bool observed = (one + one) == one;
    if (observed == R::descriptor().idempotent) return std::nullopt;
    return Counterexample{"1+1", to_string(one + one), observed ? "flag=false" : "flag=true"};
  });

  run.run("nat_invertible_flag", probe_bound, [&]() -> std::optional<Counterexample> {
    bool all_ok = true;
    for (std::uint64_t k = 1; k <= probe_bound; ++k) {
      auto inv = R::inverse_of_nat(k);
      if (!inv) {
        all_ok = false;
        continue;
      }
      if (!(*inv * nat_value<R>(k) == one)) {
        return Counterexample{"k=" + std::to_string(k), to_string(*inv * nat_value<R>(k)), to_string(one)};
      }
    }
    if (all_ok == R::descriptor().nat_invertible) return std::nullopt;
    return Counterexample{"k in [1, " + std::to_string(probe_bound) + "]", all_ok ? "all invertible" : "some not invertible",
                          R::descriptor().nat_invertible ? "flag=true" : "flag=false"};
  });

  return std::move(run.reports);
}

}  // namespace dlc
