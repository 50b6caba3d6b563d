#include "dlcat/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <set>

#include "dlcat/polyform.hpp"

namespace dlc::expr {

namespace {

constexpr unsigned max_exponent = 64;

class Parser {
 public:
  Parser(std::string_view src, bool allow_negation) : src_(src), allow_negation_(allow_negation) {}

  Ast run() {
    Ast ast;
    ast.root = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    ast.vars.assign(vars_.begin(), vars_.end());
    return ast;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::unique_ptr<Node> make(Node::Kind k, std::size_t at) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->position = at;
    return n;
  }

  std::unique_ptr<Node> binary(Node::Kind k, std::size_t at, std::unique_ptr<Node> a, std::unique_ptr<Node> b) {
    auto n = make(k, at);
    n->children.push_back(std::move(a));
    n->children.push_back(std::move(b));
    return n;
  }

  std::unique_ptr<Node> expr() {
    auto lhs = term();
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      if (eat('+')) {
        lhs = binary(Node::Kind::add, at, std::move(lhs), term());
      } else if (eat('-')) {
        if (!allow_negation_)
          throw NegativeNotSupported("'-' needs additive inverses; use --semiring rational", at);
        lhs = binary(Node::Kind::sub, at, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> term() {
    auto lhs = factor();
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      if (!eat('*')) return lhs;
      lhs = binary(Node::Kind::mul, at, std::move(lhs), factor());
    }
  }

  std::unique_ptr<Node> factor() {
    auto base = atom();
    skip_ws();
    const std::size_t at = pos_;
    if (!eat('^')) return base;
    skip_ws();
    const std::uint64_t e = nat();
    if (e > max_exponent) throw ParseError("exponent above " + std::to_string(max_exponent), at);
    auto n = make(Node::Kind::pow, at);
    n->exponent = static_cast<unsigned>(e);
    n->children.push_back(std::move(base));
    return n;
  }

  std::uint64_t nat() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      const unsigned digit = static_cast<unsigned>(src_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("number too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  std::string word() {
    std::string w;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) w += src_[pos_++];
    return w;
  }

  char ident() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string w = word();
    if (w.size() != 1 || !std::islower(static_cast<unsigned char>(w[0])) || w == "d" || w == "s") {
      pos_ = at;
      fail(w.empty() ? "expected a variable" : "'" + w + "' is not a variable (single lowercase letter except d, s)");
    }
    vars_.insert(w[0]);
    return w[0];
  }

  std::unique_ptr<Node> atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = make(Node::Kind::number, at);
      n->num = nat();
      if (eat('/')) {
        const std::size_t den_at = pos_;
        n->den = nat();
        if (n->den == 0) throw ParseError("division by zero", den_at);
      }
      return n;
    }
    if (eat('(')) {
      auto inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string w = word();
      static const std::vector<std::pair<std::string, OpKind>> ops = {
          {"d", OpKind::d},          {"int", OpKind::integral}, {"K", OpKind::k}, {"Kinv", OpKind::k_inverse},
          {"J", OpKind::j},          {"Jinv", OpKind::j_inverse}, {"s", OpKind::s}};
      for (const auto& [name, kind] : ops) {
        if (w != name) continue;
        auto n = make(Node::Kind::op, at);
        n->op = kind;
        expect('(');
        n->children.push_back(expr());
        if (kind == OpKind::s) {
          expect(',');
          n->var = ident();
        }
        expect(')');
        return n;
      }
      pos_ = at;
      auto n = make(Node::Kind::variable, at);
      n->var = ident();
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  bool allow_negation_;
  std::size_t pos_ = 0;
  std::set<char> vars_;
};

std::string op_name(OpKind k) {
  switch (k) {
    case OpKind::d:
      return "D";
    case OpKind::integral:
      return "INT";
    case OpKind::k:
      return "K";
    case OpKind::k_inverse:
      return "KINV";
    case OpKind::j:
      return "J";
    case OpKind::j_inverse:
      return "JINV";
    case OpKind::s:
      return "S";
  }
  return "?";
}

std::string describe_node(const Node& n) {
  switch (n.kind) {
    case Node::Kind::number:
      return std::to_string(n.num) + (n.den == 1 ? "" : "/" + std::to_string(n.den));
    case Node::Kind::variable:
      return std::string(1, n.var);
    case Node::Kind::add:
      return "add(" + describe_node(*n.children[0]) + ", " + describe_node(*n.children[1]) + ")";
    case Node::Kind::sub:
      return "sub(" + describe_node(*n.children[0]) + ", " + describe_node(*n.children[1]) + ")";
    case Node::Kind::mul:
      return "mul(" + describe_node(*n.children[0]) + ", " + describe_node(*n.children[1]) + ")";
    case Node::Kind::pow:
      return "pow(" + describe_node(*n.children[0]) + ", " + std::to_string(n.exponent) + ")";
    case Node::Kind::op:
      return op_name(n.op) + "(" + describe_node(*n.children[0]) +
             (n.op == OpKind::s ? ", " + std::string(1, n.var) : "") + ")";
  }
  return "?";
}

using namespace dlc::poly;

template <Rig R>
struct Val {
  std::optional<Polynomial<R>> scalar;
  std::optional<PolyBundle<R>> bundle;
};

template <Rig R>
class Evaluator {
 public:
  explicit Evaluator(const std::vector<char>& vars) : vars_(vars), n_(vars.size()) {}

  Val<R> eval(const Node& n) {
    switch (n.kind) {
      case Node::Kind::number:
        return scalar(Polynomial<R>::constant(n_, nat_value<R>(n.num) * inverse(n.den)));
      case Node::Kind::variable:
        return scalar(Polynomial<R>::variable(n_, index_of(n.var)));
      case Node::Kind::add:
      case Node::Kind::sub:
        return additive(n);
      case Node::Kind::mul:
        return multiply(eval(*n.children[0]), eval(*n.children[1]));
      case Node::Kind::pow: {
        const Polynomial<R> base = need_scalar(eval(*n.children[0]), "'^'");
        Polynomial<R> out = Polynomial<R>::constant(n_, R::one());
        for (unsigned i = 0; i < n.exponent; ++i) out = out * base;
        return scalar(std::move(out));
      }
      case Node::Kind::op:
        return apply(n);
    }
    throw EvalError("unknown node");
  }

 private:
  static Val<R> scalar(Polynomial<R> p) { return {std::move(p), std::nullopt}; }
  static Val<R> bundle(PolyBundle<R> b) { return {std::nullopt, std::move(b)}; }

  static R inverse(std::uint64_t den) {
    if (den == 1) return R::one();
    return nat_inverse<R>(den);
  }

  std::size_t index_of(char v) const {
    return static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), v) - vars_.begin());
  }

  static Polynomial<R> need_scalar(const Val<R>& v, const std::string& where) {
    if (!v.scalar) throw EvalError(where + " expects a polynomial, got a bundle");
    return *v.scalar;
  }

  Val<R> additive(const Node& n) {
    const Val<R> a = eval(*n.children[0]);
    const Val<R> b = eval(*n.children[1]);
    if (a.scalar.has_value() != b.scalar.has_value()) throw EvalError("cannot add a polynomial and a bundle");
    if (n.kind == Node::Kind::add) {
      if (a.scalar) return scalar(*a.scalar + *b.scalar);
      return bundle(*a.bundle + *b.bundle);
    }
    if constexpr (RigWithNegation<R>) {
      if (a.scalar) return scalar(*a.scalar - *b.scalar);
      PolyBundle<R> out = *a.bundle;
      for (std::size_t i = 0; i < out.arity(); ++i) out[i] = out[i] - (*b.bundle)[i];
      return bundle(std::move(out));
    } else {
      throw EvalError("'-' needs additive inverses; use --semiring rational");
    }
  }

  static Val<R> multiply(const Val<R>& a, const Val<R>& b) {
    if (a.scalar && b.scalar) return scalar(*a.scalar * *b.scalar);
    if (a.bundle && b.bundle) throw EvalError("cannot multiply two bundles");
    const Polynomial<R>& p = a.scalar ? *a.scalar : *b.scalar;
    PolyBundle<R> out = a.bundle ? *a.bundle : *b.bundle;
    for (auto& c : out.components) c = c * p;
    return bundle(std::move(out));
  }

  /// Scalar-to-scalar operators act componentwise on bundles.
  template <class F>
  static Val<R> lift(const Val<R>& v, F&& f) {
    if (v.scalar) return scalar(f(*v.scalar));
    PolyBundle<R> out = *v.bundle;
    for (auto& c : out.components) c = f(c);
    return bundle(std::move(out));
  }

  Val<R> apply(const Node& n) {
    const Val<R> arg = eval(*n.children[0]);
    switch (n.op) {
      case OpKind::d:
        return bundle(grad(need_scalar(arg, "d")));
      case OpKind::integral:
        if (arg.bundle) return scalar(antiderivative(*arg.bundle));
        if (n_ != 1)
          throw EvalError("int of a polynomial needs exactly one variable; pass a bundle such as d(p), or use s(e, x)");
        return scalar(integrate1(*arg.scalar));
      case OpKind::k:
        return lift(arg, [](const Polynomial<R>& p) { return k_op(p); });
      case OpKind::k_inverse:
        return lift(arg, [](const Polynomial<R>& p) { return k_inverse(p); });
      case OpKind::j:
        return lift(arg, [](const Polynomial<R>& p) { return j_op(p); });
      case OpKind::j_inverse:
        return lift(arg, [](const Polynomial<R>& p) { return j_inverse(p); });
      case OpKind::s: {
        PolyBundle<R> b(n_);
        b[index_of(n.var)] = need_scalar(arg, "s");
        return scalar(antiderivative(b));
      }
    }
    throw EvalError("unknown operator");
  }

  std::vector<char> vars_;
  std::size_t n_;
};

template <Rig R>
Value run(const Ast& ast) {
  std::vector<char> vars = ast.vars;
  if (vars.empty()) vars = {'x'};
  Value out;
  for (char v : vars) out.vars.emplace_back(1, v);
  Val<R> v;
  try {
    v = Evaluator<R>(vars).eval(*ast.root);
  } catch (const NotInvertible& e) {
    throw EvalError(std::string(e.what()) + "; this needs every positive integer 1 + ... + 1 to be invertible in " +
                    "the semiring, which " + R::descriptor().name + " does not satisfy");
  }
  if (v.scalar) {
    out.components.push_back(v.scalar->render(out.vars));
  } else {
    out.bundle = true;
    for (const auto& c : v.bundle->components) out.components.push_back(c.render(out.vars));
  }
  return out;
}

}  // namespace

std::string Ast::describe() const { return root ? describe_node(*root) : ""; }

Ast parse_expr(std::string_view source, bool allow_negation) { return Parser(source, allow_negation).run(); }

std::string Value::render() const {
  if (!bundle) return components.empty() ? "0" : components.front();
  std::string s = "[";
  for (std::size_t i = 0; i < components.size(); ++i) s += (i ? ", " : "") + components[i];
  return s + "]";
}

Value eval_expr(const Ast& ast, const std::string& semiring) {
  if (semiring == "nonneg-rational") return run<NonNegRational>(ast);
  if (semiring == "rational") return run<Rational>(ast);
  if (semiring == "boolean") return run<Boolean>(ast);
  if (semiring == "natural") return run<Natural>(ast);
  throw std::invalid_argument("unknown semiring '" + semiring + "'");
}

Value evaluate(std::string_view source, const std::string& semiring) {
  return eval_expr(parse_expr(source, semiring == "rational"), semiring);
}

}  // namespace dlc::expr
