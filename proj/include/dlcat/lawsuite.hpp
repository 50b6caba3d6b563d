#pragma once

/*
 * The equation table and a runner that checks it against a model.
 *
 * A model is bound by a ModelBinding: a map from law id to a check that,
 * given a case budget and a seed, evaluates both sides of the law on
 * generated inputs and returns the first counterexample. The binding's mask
 * lists the laws it claims to support; laws outside the mask are reported as
 * skipped with the binding's reason.
 *
 * Laws for the polynomial model are stated in module application order (see
 * polyform.hpp); laws for the relational model in diagrammatic order, which
 * is matrix product order.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dlcat/report.hpp"

namespace dlc::laws {

enum class LawId {
  L1 = 1, L2, L3, L4, L5, L6, L7, L8, L9, L10, L11, L12,
  L13, L14, L15, L16, L17, L18, L19, L20, L21, L22, L23, L24,
};

struct LawInfo {
  LawId id;
  std::string code;      // "L1" .. "L24"
  std::string name;      // short name
  std::string citation;  // named result plus the equation it asserts
};

/// The closed table, ordered by id.
const std::vector<LawInfo>& law_table();
const LawInfo& law_info(LawId id);
std::optional<LawId> parse_law_id(std::string_view code);
std::vector<LawId> all_laws();

struct LawOutcome {
  std::size_t cases = 0;
  std::optional<Counterexample> counterexample;
};

using LawCheck = std::function<LawOutcome(std::size_t cases, std::uint64_t seed)>;

struct ModelBinding {
  std::string model;
  std::string semiring;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  bool exact = true;
  std::size_t default_cases = 100;
  std::set<LawId> mask;
  std::map<LawId, LawCheck> checks;
  std::map<LawId, std::string> unsupported;  // reason per law outside the mask
};

/// The mask claims a law that has no check bound.
class UnboundOperator : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Evaluates one law. Throws UnboundOperator if the law is in the mask but
/// has no check. A NotInvertible error from the semiring turns into a
/// skipped report carrying the reason.
LawReport run_law(LawId law, const ModelBinding& binding, std::size_t cases, std::uint64_t seed);

/// Runs all 24 laws in id order; laws outside the mask are skipped. Each
/// law gets its own sub-seed derived from (seed, law number), so a law's
/// outcome does not depend on which other laws ran.
std::vector<LawReport> run_suite(const ModelBinding& binding, std::size_t cases, std::uint64_t seed);

/// True iff no report failed (skipped reports do not count against).
bool all_pass(const std::vector<LawReport>& reports);

// ---------------------------------------------------------------------------
// Bindings
// ---------------------------------------------------------------------------

struct PolyConfig {
  std::string semiring = "nonneg-rational";
  std::size_t vars = 3;
  unsigned max_degree = 6;
  bool allow_zero_arity = false;
  /// Negative control: the bound d keeps each constant term.
  bool sabotage_constants = false;
};

struct RelConfig {
  std::string semiring = "nonneg-rational";
  std::size_t base_size = 2;
  unsigned truncation = 5;
  unsigned margin = 2;
};

struct SmoothConfig {
  std::size_t dim = 3;
  unsigned order = 32;
  /// Overrides the fundamental-theorem tolerance for every corpus member.
  std::optional<double> tol;
};

/// Semiring names accepted by the exact models.
const std::vector<std::string>& semiring_names();

/// Throws std::invalid_argument for an unknown semiring or bad sizes.
ModelBinding make_poly_binding(const PolyConfig& cfg);
ModelBinding make_rel_binding(const RelConfig& cfg);
ModelBinding make_smooth_binding(const SmoothConfig& cfg);

// ---------------------------------------------------------------------------
// Case loop shared by the bindings
// ---------------------------------------------------------------------------

/// Runs `body` once per case with a generator seeded from `seed`; stops at
/// the first counterexample.
template <class Body>
LawOutcome for_cases(std::size_t cases, std::uint64_t seed, Body&& body);

}  // namespace dlc::laws

#include "dlcat/random.hpp"

namespace dlc::laws {

template <class Body>
LawOutcome for_cases(std::size_t cases, std::uint64_t seed, Body&& body) {
  Rng rng(seed);
  LawOutcome out;
  for (std::size_t i = 0; i < cases; ++i) {
    ++out.cases;
    if (auto cx = body(rng)) {
      out.counterexample = std::move(cx);
      return out;
    }
  }
  return out;
}

}  // namespace dlc::laws
