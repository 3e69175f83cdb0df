#pragma once

// Real-valued integrand expressions: parsing, evaluation and printing.
//
// Grammar (recursive descent, lowest to highest precedence):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | name | func '(' expr ')' | '(' expr ')'
//
// Implicit multiplication is not accepted. Function names are fixed to
// exp, ln, sin, cos, atan, sqrt and abs; any other name followed by '('
// is rejected at parse time.

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace frullani {

enum class Function { Exp, Ln, Sin, Cos, Atan, Sqrt, Abs };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

std::string_view function_name(Function f);

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Constant { double value; };
struct Variable { std::string name; };
struct Negate { NodePtr operand; };
struct Binary { BinaryOp op; NodePtr lhs; NodePtr rhs; };
struct Call { Function fn; NodePtr arg; };

struct Node {
  std::variant<Constant, Variable, Negate, Binary, Call> data;
};

using Bindings = std::map<std::string, double, std::less<>>;

/// Immutable expression tree. Copies share the underlying nodes, so an
/// Expression can be evaluated from several threads at once.
class Expression {
public:
  explicit Expression(NodePtr root);

  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }

  double evaluate(const Bindings& bindings) const;

  /// Shorthand for one-variable evaluation with extra bound parameters.
  double evaluate_at(std::string_view var, double value, Bindings params = {}) const;

  std::set<std::string> free_variables() const;

  /// Fully parenthesized text form; parse(unparse()) rebuilds the same tree.
  std::string unparse() const;

  friend bool operator==(const Expression& a, const Expression& b);

private:
  NodePtr root_;
};

struct ParseFailure {
  std::size_t offset;
  std::string message;
  std::string expected;
};

class ParseError : public std::runtime_error {
public:
  explicit ParseError(ParseFailure failure);
  const ParseFailure& failure() const noexcept { return failure_; }

private:
  ParseFailure failure_;
};

/// Raised by Expression::evaluate.
class EvalError : public std::runtime_error {
public:
  enum class Kind { UnboundVariable, Domain };

  EvalError(Kind kind, std::string message);
  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

/// Throws ParseError on malformed input.
Expression parse(std::string_view source);

bool structurally_equal(const Node& a, const Node& b);

// Builders, mostly for tests and programmatic construction.
namespace ex {
NodePtr num(double v);
NodePtr var(std::string name);
NodePtr neg(NodePtr a);
NodePtr bin(BinaryOp op, NodePtr a, NodePtr b);
NodePtr call(Function fn, NodePtr a);
}  // namespace ex

}  // namespace frullani
