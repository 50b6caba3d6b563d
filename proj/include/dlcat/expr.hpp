#pragma once

// Polynomial calculator expressions for `dctool poly`.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := rational | ident | opcall | '(' expr ')'
//   opcall := ('d' | 'int' | 'K' | 'Kinv' | 'J' | 'Jinv') '(' expr ')'
//           | 's' '(' expr ',' ident ')'
//   rational := nat ('/' nat)?
//
// Identifiers are single lowercase letters other than d and s. The variables
// of an expression are the identifiers it mentions, sorted; with none, the
// single variable x. s(e, x) is the integral applied to the bundle with e in
// the x coordinate and zero elsewhere.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dlc::expr {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// '-' outside the rational semiring.
class NegativeNotSupported : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Well-formed expression that cannot be evaluated (wrong operand shape,
/// missing inverses, and so on).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OpKind { d, integral, k, k_inverse, j, j_inverse, s };

struct Node {
  enum class Kind { number, variable, add, sub, mul, pow, op };
  Kind kind = Kind::number;
  std::size_t position = 0;
  std::uint64_t num = 0, den = 1;  // number
  char var = 0;                    // variable, and the coordinate of s
  unsigned exponent = 0;           // pow
  OpKind op = OpKind::d;           // op
  std::vector<std::unique_ptr<Node>> children;
};

struct Ast {
  std::unique_ptr<Node> root;
  std::vector<char> vars;  // sorted, distinct

  /// Prefix rendering, e.g. "D(add(mul(3, pow(x, 2)), x))".
  std::string describe() const;
};

Ast parse_expr(std::string_view source, bool allow_negation);

struct Value {
  bool bundle = false;
  std::vector<std::string> components;  // one entry for a scalar
  std::vector<std::string> vars;

  /// "p" for a scalar, "[p1, p2]" for a bundle.
  std::string render() const;
};

/// Evaluates over the named semiring (see lawsuite::semiring_names).
Value eval_expr(const Ast& ast, const std::string& semiring);

/// Parses and evaluates; '-' is accepted only for "rational".
Value evaluate(std::string_view source, const std::string& semiring);

}  // namespace dlc::expr
