#pragma once

/**
 * @file expression.hpp
 * @brief Closed-form real functions of the arclength variable `s`.
 *
 * Grammar (whitespace ignored, precedence from loosest to tightest):
 *
 *     expr    := term (('+' | '-') term)*
 *     term    := unary (('*' | '/') unary)*
 *     unary   := '-' unary | power
 *     power   := primary ('^' unary)?          right-associative
 *     primary := number | 's' | 'pi' | parameter
 *              | function '(' expr ')' | '(' expr ')'
 *     function := sin cos tan sinh cosh asinh sqrt exp ln neg
 *
 * An exponent that does not depend on `s` or on any parameter is folded to a
 * constant. Any other exponent `f^g` is rewritten as `exp(g*ln(f))`, which
 * restricts the base to positive values.
 *
 * Trees are immutable and share structure; copying an Expr is cheap.
 */

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "revtype/jet.hpp"

namespace revtype {

using ParamMap = std::map<std::string, double, std::less<>>;

enum class UnaryOp { Neg, Sin, Cos, Tan, Sinh, Cosh, Asinh, Sqrt, Exp, Ln };
enum class BinaryOp { Add, Sub, Mul, Div };

std::string_view to_string(UnaryOp op);

class Expr;

namespace node {
struct Constant {
  double value;
};
struct Variable {};
struct Parameter {
  std::string name;
};
struct Unary;
struct Binary;
struct Power;
}  // namespace node

class Expr {
 public:
  using Node = std::variant<node::Constant, node::Variable, node::Parameter, node::Unary,
                            node::Binary, node::Power>;

  static Expr constant(double value);
  static Expr variable();
  static Expr parameter(std::string name);
  static Expr unary(UnaryOp op, Expr arg);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr power(Expr base, double exponent);

  const Node& node() const;

  template <class T>
  bool is() const;
  template <class T>
  const T& as() const;

  /// Structural equality; constants compare by value.
  friend bool operator==(const Expr& a, const Expr& b);

  /// Node count.
  std::size_t size() const;
  std::size_t depth() const;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

namespace node {
struct Unary {
  UnaryOp op;
  Expr arg;
};
struct Binary {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};
struct Power {
  Expr base;
  double exponent;
};
}  // namespace node

inline const Expr::Node& Expr::node() const { return *node_; }

template <class T>
bool Expr::is() const {
  return std::holds_alternative<T>(*node_);
}

template <class T>
const T& Expr::as() const {
  return std::get<T>(*node_);
}

/// Parses `text`. Identifiers other than `s`, `pi` and the function names must
/// appear in `parameters`, otherwise a ParseError of kind UnknownIdentifier is
/// raised.
Expr parse(std::string_view text, std::span<const std::string> parameters = {});

/// Parses with every key of `params` accepted as a parameter name.
Expr parse(std::string_view text, const ParamMap& params);

/// Minimal-parenthesis text form; parse(unparse(e)) reproduces e exactly.
std::string unparse(const Expr& e);

/// Value and first three s-derivatives at `s`. Throws DomainError when a
/// subexpression leaves its real domain and UnboundParameterError when a
/// parameter has no value.
Jet3 eval_jet3(const Expr& e, double s, const ParamMap& params = {});

/// True when the tree contains neither `s` nor a parameter.
bool is_constant(const Expr& e);

}  // namespace revtype
