#include "revtype/expression.hpp"

#include <algorithm>
#include <limits>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "revtype/errors.hpp"

namespace revtype {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct FunctionName {
  std::string_view name;
  UnaryOp op;
};

constexpr std::array<FunctionName, 10> kFunctions{{
    {"neg", UnaryOp::Neg},
    {"sin", UnaryOp::Sin},
    {"cos", UnaryOp::Cos},
    {"tan", UnaryOp::Tan},
    {"sinh", UnaryOp::Sinh},
    {"cosh", UnaryOp::Cosh},
    {"asinh", UnaryOp::Asinh},
    {"sqrt", UnaryOp::Sqrt},
    {"exp", UnaryOp::Exp},
    {"ln", UnaryOp::Ln},
}};

const FunctionName* find_function(std::string_view name) {
  auto it = std::find_if(kFunctions.begin(), kFunctions.end(),
                         [&](const FunctionName& f) { return f.name == name; });
  return it == kFunctions.end() ? nullptr : &*it;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> params)
      : text_(text), params_(params) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail(ParseErrorKind::Syntax, "unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(ParseErrorKind kind, const std::string& msg) const {
    throw ParseError(kind, pos_, msg);
  }
  [[noreturn]] void fail_at(ParseErrorKind kind, std::size_t at, const std::string& msg) const {
    throw ParseError(kind, at, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(ParseErrorKind::Syntax, std::string("expected '") + c + "' before end of input");
      fail(ParseErrorKind::Syntax, std::string("expected '") + c + "'");
    }
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(BinaryOp::Add, lhs, parse_term());
      } else if (accept('-')) {
        lhs = Expr::binary(BinaryOp::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(BinaryOp::Mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = Expr::binary(BinaryOp::Div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  // A minus directly applied to a bare numeric literal yields a negative
  // constant; "-2^2" is still -(2^2).
  Expr parse_unary() {
    if (!accept('-')) return parse_power();
    skip_ws();
    const bool literal = pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.');
    Expr arg = parse_unary();
    if (literal && arg.is<node::Constant>()) return Expr::constant(-arg.as<node::Constant>().value);
    return Expr::unary(UnaryOp::Neg, arg);
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (!accept('^')) return base;
    const std::size_t exponent_at = pos_;
    Expr exponent = parse_unary();
    if (is_constant(exponent)) {
      try {
        return Expr::power(base, eval_jet3(exponent, 0.0).value());
      } catch (const DomainError& e) {
        fail_at(ParseErrorKind::Syntax, exponent_at, std::string("exponent is undefined: ") + e.what());
      }
    }
    return Expr::unary(UnaryOp::Exp, Expr::binary(BinaryOp::Mul, exponent, Expr::unary(UnaryOp::Ln, base)));
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail(ParseErrorKind::Syntax, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    fail(ParseErrorKind::Syntax, "unexpected '" + std::string(1, c) + "'");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits();
      } else {
        pos_ = save;  // not an exponent; leave 'e' for the caller to reject
      }
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      fail_at(ParseErrorKind::Syntax, start, "malformed number '" + std::string(first, last) + "'");
    }
    return Expr::constant(value);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);

    if (const FunctionName* fn = find_function(name)) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '(') {
        fail_at(ParseErrorKind::Arity, start, "function '" + std::string(name) + "' takes 1 argument");
      }
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        fail_at(ParseErrorKind::Arity, start, "function '" + std::string(name) + "' takes 1 argument, got 0");
      }
      Expr arg = parse_expr();
      std::size_t extra = 0;
      while (accept(',')) {
        parse_expr();
        ++extra;
      }
      if (extra > 0) {
        fail_at(ParseErrorKind::Arity, start,
                "function '" + std::string(name) + "' takes 1 argument, got " + std::to_string(extra + 1));
      }
      expect(')');
      return Expr::unary(fn->op, arg);
    }
    if (name == "s") return Expr::variable();
    if (name == "pi") return Expr::constant(std::numbers::pi);
    if (std::find(params_.begin(), params_.end(), name) != params_.end()) {
      return Expr::parameter(std::string(name));
    }
    fail_at(ParseErrorKind::UnknownIdentifier, start, "unknown identifier '" + std::string(name) + "'");
  }

  std::string_view text_;
  std::span<const std::string> params_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Unparse
// ---------------------------------------------------------------------------

enum Precedence { kAdd = 1, kMul = 2, kNeg = 3, kPow = 4, kAtom = 5 };

int precedence(const Expr& e) {
  return std::visit(Overloaded{
                        [](const node::Binary& b) {
                          return (b.op == BinaryOp::Add || b.op == BinaryOp::Sub) ? int(kAdd) : int(kMul);
                        },
                        [](const node::Unary& u) { return u.op == UnaryOp::Neg ? int(kNeg) : int(kAtom); },
                        [](const node::Power&) { return int(kPow); },
                        [](const node::Constant& c) { return std::signbit(c.value) ? int(kNeg) : int(kAtom); },
                        [](const auto&) { return int(kAtom); },
                    },
                    e.node());
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void unparse_into(const Expr& e, std::string& out);

void wrapped(const Expr& e, bool parens, std::string& out) {
  if (parens) out += '(';
  unparse_into(e, out);
  if (parens) out += ')';
}

void unparse_into(const Expr& e, std::string& out) {
  std::visit(Overloaded{
                 [&](const node::Constant& c) { out += format_number(c.value); },
                 [&](const node::Variable&) { out += 's'; },
                 [&](const node::Parameter& p) { out += p.name; },
                 [&](const node::Unary& u) {
                   if (u.op == UnaryOp::Neg) {
                     out += '-';
                     const bool literal = u.arg.is<node::Constant>() && precedence(u.arg) == kAtom;
                     wrapped(u.arg, literal || precedence(u.arg) < kNeg, out);
                   } else {
                     out += to_string(u.op);
                     wrapped(u.arg, true, out);
                   }
                 },
                 [&](const node::Binary& b) {
                   const int p = precedence(e);
                   wrapped(b.lhs, precedence(b.lhs) < p, out);
                   switch (b.op) {
                     case BinaryOp::Add: out += '+'; break;
                     case BinaryOp::Sub: out += '-'; break;
                     case BinaryOp::Mul: out += '*'; break;
                     case BinaryOp::Div: out += '/'; break;
                   }
                   wrapped(b.rhs, precedence(b.rhs) <= p, out);
                 },
                 [&](const node::Power& pw) {
                   wrapped(pw.base, precedence(pw.base) <= kPow, out);
                   out += '^';
                   out += format_number(pw.exponent);
                 },
             },
             e.node());
}

// ---------------------------------------------------------------------------
// Jet evaluation
// ---------------------------------------------------------------------------

class Evaluator {
 public:
  Evaluator(double s, const ParamMap& params) : s_(s), params_(params) {}

  Jet3 operator()(const Expr& e) const {
    return std::visit(Overloaded{
                          [&](const node::Constant& c) { return Jet3::constant(c.value); },
                          [&](const node::Variable&) { return Jet3::variable(s_); },
                          [&](const node::Parameter& p) {
                            auto it = params_.find(p.name);
                            if (it == params_.end()) throw UnboundParameterError(p.name);
                            return Jet3::constant(it->second);
                          },
                          [&](const node::Unary& u) { return unary(e, u); },
                          [&](const node::Binary& b) { return binary(e, b); },
                          [&](const node::Power& pw) { return power(e, pw); },
                      },
                      e.node());
  }

 private:
  Jet3 unary(const Expr& self, const node::Unary& u) const {
    const Jet3 x = (*this)(u.arg);
    auto guard = [&](bool ok, const char* reason) {
      if (!ok) throw DomainError(unparse(self), x.value(), reason);
    };
    switch (u.op) {
      case UnaryOp::Neg: return -x;
      case UnaryOp::Sin: return sin(x);
      case UnaryOp::Cos: return cos(x);
      case UnaryOp::Tan:
        // cos cannot vanish exactly at a double; within rounding of a pole counts.
        guard(std::abs(std::cos(x.value())) > 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x.value())),
              "tan at a pole");
        return tan(x);
      case UnaryOp::Sinh: return sinh(x);
      case UnaryOp::Cosh: return cosh(x);
      case UnaryOp::Asinh: return asinh(x);
      case UnaryOp::Sqrt:
        guard(x.value() > 0.0, x.value() < 0.0 ? "sqrt of a negative value" : "sqrt at zero (derivative unbounded)");
        return sqrt(x);
      case UnaryOp::Exp: return exp(x);
      case UnaryOp::Ln:
        guard(x.value() > 0.0, "ln of a nonpositive value");
        return log(x);
    }
    return x;
  }

  Jet3 binary(const Expr& self, const node::Binary& b) const {
    const Jet3 l = (*this)(b.lhs);
    const Jet3 r = (*this)(b.rhs);
    switch (b.op) {
      case BinaryOp::Add: return l + r;
      case BinaryOp::Sub: return l - r;
      case BinaryOp::Mul: return l * r;
      case BinaryOp::Div:
        if (r.value() == 0.0) throw DomainError(unparse(self), r.value(), "division by zero");
        return l / r;
    }
    return l;
  }

  Jet3 power(const Expr& self, const node::Power& pw) const {
    const Jet3 x = (*this)(pw.base);
    const bool integral = std::floor(pw.exponent) == pw.exponent;
    if (integral) {
      if (pw.exponent < 0.0 && x.value() == 0.0) {
        throw DomainError(unparse(self), x.value(), "negative power of zero");
      }
    } else if (!(x.value() > 0.0)) {
      throw DomainError(unparse(self), x.value(), "non-integer power of a nonpositive value");
    }
    return pow(x, pw.exponent);
  }

  double s_;
  const ParamMap& params_;
};

}  // namespace

std::string_view to_string(UnaryOp op) {
  for (const auto& f : kFunctions) {
    if (f.op == op) return f.name;
  }
  return "?";
}

Expr Expr::constant(double value) { return Expr(std::make_shared<const Node>(node::Constant{value})); }
Expr Expr::variable() { return Expr(std::make_shared<const Node>(node::Variable{})); }
Expr Expr::parameter(std::string name) {
  return Expr(std::make_shared<const Node>(node::Parameter{std::move(name)}));
}
Expr Expr::unary(UnaryOp op, Expr arg) {
  return Expr(std::make_shared<const Node>(node::Unary{op, std::move(arg)}));
}
Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(node::Binary{op, std::move(lhs), std::move(rhs)}));
}
Expr Expr::power(Expr base, double exponent) {
  return Expr(std::make_shared<const Node>(node::Power{std::move(base), exponent}));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->index() != b.node_->index()) return false;
  return std::visit(Overloaded{
                        [&](const node::Constant& c) { return c.value == b.as<node::Constant>().value; },
                        [&](const node::Variable&) { return true; },
                        [&](const node::Parameter& p) { return p.name == b.as<node::Parameter>().name; },
                        [&](const node::Unary& u) {
                          const auto& o = b.as<node::Unary>();
                          return u.op == o.op && u.arg == o.arg;
                        },
                        [&](const node::Binary& x) {
                          const auto& o = b.as<node::Binary>();
                          return x.op == o.op && x.lhs == o.lhs && x.rhs == o.rhs;
                        },
                        [&](const node::Power& p) {
                          const auto& o = b.as<node::Power>();
                          return p.exponent == o.exponent && p.base == o.base;
                        },
                    },
                    a.node());
}

std::size_t Expr::size() const {
  return std::visit(Overloaded{
                        [](const node::Unary& u) { return 1 + u.arg.size(); },
                        [](const node::Binary& b) { return 1 + b.lhs.size() + b.rhs.size(); },
                        [](const node::Power& p) { return 1 + p.base.size(); },
                        [](const auto&) { return std::size_t{1}; },
                    },
                    node());
}

std::size_t Expr::depth() const {
  return std::visit(Overloaded{
                        [](const node::Unary& u) { return 1 + u.arg.depth(); },
                        [](const node::Binary& b) { return 1 + std::max(b.lhs.depth(), b.rhs.depth()); },
                        [](const node::Power& p) { return 1 + p.base.depth(); },
                        [](const auto&) { return std::size_t{1}; },
                    },
                    node());
}

bool is_constant(const Expr& e) {
  return std::visit(Overloaded{
                        [](const node::Constant&) { return true; },
                        [](const node::Variable&) { return false; },
                        [](const node::Parameter&) { return false; },
                        [](const node::Unary& u) { return is_constant(u.arg); },
                        [](const node::Binary& b) { return is_constant(b.lhs) && is_constant(b.rhs); },
                        [](const node::Power& p) { return is_constant(p.base); },
                    },
                    e.node());
}

Expr parse(std::string_view text, std::span<const std::string> parameters) {
  return Parser(text, parameters).parse_all();
}

Expr parse(std::string_view text, const ParamMap& params) {
  std::vector<std::string> names;
  names.reserve(params.size());
  for (const auto& [name, value] : params) names.push_back(name);
  return parse(text, names);
}

std::string unparse(const Expr& e) {
  std::string out;
  unparse_into(e, out);
  return out;
}

Jet3 eval_jet3(const Expr& e, double s, const ParamMap& params) { return Evaluator(s, params)(e); }

}  // namespace revtype
