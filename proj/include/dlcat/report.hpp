#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace dlc {

enum class LawStatus { pass, fail, skipped };

std::string_view to_string(LawStatus status) noexcept;

/// Canonical text of the failing input and both sides of the equation.
struct Counterexample {
  std::string input;
  std::string lhs;
  std::string rhs;
};

/// Outcome of checking one law (or one semiring axiom) against one model.
struct LawReport {
  std::string id;
  std::string citation;
  std::string model;
  LawStatus status = LawStatus::pass;
  std::size_t cases = 0;
  std::optional<Counterexample> counterexample;  // present iff status == fail
  std::string skip_reason;                       // non-empty iff status == skipped
  bool exact = true;
  double elapsed_ms = 0.0;
};

}  // namespace dlc
