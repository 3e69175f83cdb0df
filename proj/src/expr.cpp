#include "frullani/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <utility>

namespace frullani {

namespace {

constexpr std::array<std::pair<std::string_view, Function>, 7> kFunctions{{
    {"exp", Function::Exp},
    {"ln", Function::Ln},
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"atan", Function::Atan},
    {"sqrt", Function::Sqrt},
    {"abs", Function::Abs},
}};

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), end);
}

[[noreturn]] void domain_error(std::string what) {
  throw EvalError(EvalError::Kind::Domain, std::move(what));
}

double checked(double v, std::string_view op, double arg) {
  if (!std::isfinite(v))
    domain_error(std::string(op) + " overflows or is undefined at argument " + format_double(arg));
  return v;
}

double apply(Function fn, double x) {
  switch (fn) {
    case Function::Exp:
      return checked(std::exp(x), "exp", x);
    case Function::Ln:
      if (!(x > 0.0)) domain_error("ln of non-positive argument " + format_double(x));
      return std::log(x);
    case Function::Sin:
      return checked(std::sin(x), "sin", x);
    case Function::Cos:
      return checked(std::cos(x), "cos", x);
    case Function::Atan:
      return std::atan(x);
    case Function::Sqrt:
      if (x < 0.0) domain_error("sqrt of negative argument " + format_double(x));
      return std::sqrt(x);
    case Function::Abs:
      return std::fabs(x);
  }
  return 0.0;
}

double power(double base, double exponent) {
  if (base < 0.0 && exponent != std::trunc(exponent))
    domain_error("non-integer power " + format_double(exponent) + " of negative base " +
                 format_double(base));
  if (base == 0.0 && exponent < 0.0)
    domain_error("negative power " + format_double(exponent) + " of zero");
  double r = std::pow(base, exponent);
  if (!std::isfinite(r)) domain_error("power overflows at base " + format_double(base));
  return r;
}

struct Evaluator {
  const Bindings& bindings;

  double operator()(const Constant& c) const { return c.value; }

  double operator()(const Variable& v) const {
    auto it = bindings.find(v.name);
    if (it == bindings.end())
      throw EvalError(EvalError::Kind::UnboundVariable, "unbound variable '" + v.name + "'");
    return it->second;
  }

  double operator()(const Negate& n) const { return -eval(*n.operand); }

  double operator()(const Binary& b) const {
    double l = eval(*b.lhs);
    double r = eval(*b.rhs);
    switch (b.op) {
      case BinaryOp::Add:
        return checked(l + r, "addition", l);
      case BinaryOp::Sub:
        return checked(l - r, "subtraction", l);
      case BinaryOp::Mul:
        return checked(l * r, "multiplication", l);
      case BinaryOp::Div:
        if (r == 0.0) domain_error("division by zero");
        return checked(l / r, "division", l);
      case BinaryOp::Pow:
        return power(l, r);
    }
    return 0.0;
  }

  double operator()(const Call& c) const { return apply(c.fn, eval(*c.arg)); }

  double eval(const Node& n) const { return std::visit(*this, n.data); }
};

void collect(const Node& n, std::set<std::string>& out) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Variable>) {
          out.insert(v.name);
        } else if constexpr (std::is_same_v<T, Negate>) {
          collect(*v.operand, out);
        } else if constexpr (std::is_same_v<T, Binary>) {
          collect(*v.lhs, out);
          collect(*v.rhs, out);
        } else if constexpr (std::is_same_v<T, Call>) {
          collect(*v.arg, out);
        }
      },
      n.data);
}

char op_char(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return '+';
    case BinaryOp::Sub: return '-';
    case BinaryOp::Mul: return '*';
    case BinaryOp::Div: return '/';
    case BinaryOp::Pow: return '^';
  }
  return '?';
}

void print(const Node& n, std::ostringstream& os) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Constant>) {
          if (v.value < 0.0 || std::signbit(v.value))
            os << "(-" << format_double(-v.value) << ')';
          else
            os << format_double(v.value);
        } else if constexpr (std::is_same_v<T, Variable>) {
          os << v.name;
        } else if constexpr (std::is_same_v<T, Negate>) {
          os << "(-";
          print(*v.operand, os);
          os << ')';
        } else if constexpr (std::is_same_v<T, Binary>) {
          os << '(';
          print(*v.lhs, os);
          os << ' ' << op_char(v.op) << ' ';
          print(*v.rhs, os);
          os << ')';
        } else if constexpr (std::is_same_v<T, Call>) {
          os << function_name(v.fn) << '(';
          print(*v.arg, os);
          os << ')';
        }
      },
      n.data);
}

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse_all() {
    NodePtr e = expression();
    skip_ws();
    if (pos_ < src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'", "operator or end of input");
    return e;
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::string message, std::string expected) const {
    throw ParseError(ParseFailure{std::min(pos_, src_.size()), std::move(message), std::move(expected)});
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = ex::bin(BinaryOp::Add, lhs, term());
      else if (accept('-'))
        lhs = ex::bin(BinaryOp::Sub, lhs, term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = ex::bin(BinaryOp::Mul, lhs, unary());
      else if (accept('/'))
        lhs = ex::bin(BinaryOp::Div, lhs, unary());
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return ex::neg(unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return ex::bin(BinaryOp::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input", "number, name or '('");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expression();
      if (!accept(')')) fail(pos_ >= src_.size() ? "unexpected end of input" : "unbalanced parenthesis", "')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail("unexpected character '" + std::string(1, c) + "'", "number, name or '('");
  }

  NodePtr number() {
    // digits [. digits] [(e|E) [+-] digits]
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++n;
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail("malformed number", "digit");
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail("malformed exponent", "digit");
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc{} || ptr != src_.data() + pos_) {
      pos_ = start;
      fail("number out of range", "finite number");
    }
    return ex::num(value);
  }

  NodePtr name() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string ident(src_.substr(start, pos_ - start));
    skip_ws();
    bool is_call = pos_ < src_.size() && src_[pos_] == '(';
    for (auto [fname, fn] : kFunctions) {
      if (fname == ident) {
        if (!is_call) fail("function '" + ident + "' used without argument", "'('");
        ++pos_;
        NodePtr arg = expression();
        if (!accept(')')) fail(pos_ >= src_.size() ? "unexpected end of input" : "unbalanced parenthesis", "')'");
        return ex::call(fn, arg);
      }
    }
    if (is_call) {
      pos_ = start;
      fail("unknown function '" + ident + "'", "exp, ln, sin, cos, atan, sqrt or abs");
    }
    return ex::var(std::move(ident));
  }
};

}  // namespace

std::string_view function_name(Function f) {
  for (auto [name, fn] : kFunctions)
    if (fn == f) return name;
  return "?";
}

Expression::Expression(NodePtr root) : root_(std::move(root)) {
  if (!root_) throw std::invalid_argument("Expression requires a root node");
}

double Expression::evaluate(const Bindings& bindings) const {
  return Evaluator{bindings}.eval(*root_);
}

double Expression::evaluate_at(std::string_view var, double value, Bindings params) const {
  params.insert_or_assign(std::string(var), value);
  return evaluate(params);
}

std::set<std::string> Expression::free_variables() const {
  std::set<std::string> out;
  collect(*root_, out);
  return out;
}

std::string Expression::unparse() const {
  std::ostringstream os;
  print(*root_, os);
  return os.str();
}

bool operator==(const Expression& a, const Expression& b) {
  return structurally_equal(*a.root_, *b.root_);
}

bool structurally_equal(const Node& a, const Node& b) {
  if (a.data.index() != b.data.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.data);
        if constexpr (std::is_same_v<T, Constant>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Variable>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return structurally_equal(*x.operand, *y.operand);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) &&
                 structurally_equal(*x.rhs, *y.rhs);
        } else {
          return x.fn == y.fn && structurally_equal(*x.arg, *y.arg);
        }
      },
      a.data);
}

ParseError::ParseError(ParseFailure failure)
    : std::runtime_error("parse error at offset " + std::to_string(failure.offset) + ": " +
                         failure.message + " (expected " + failure.expected + ")"),
      failure_(std::move(failure)) {}

EvalError::EvalError(Kind kind, std::string message)
    : std::runtime_error(std::move(message)), kind_(kind) {}

Expression parse(std::string_view source) {
  if (source.empty()) throw ParseError(ParseFailure{0, "empty expression", "expression"});
  return Expression(Parser(source).parse_all());
}

namespace ex {
NodePtr num(double v) { return std::make_shared<const Node>(Node{Constant{v}}); }
NodePtr var(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  return std::make_shared<const Node>(Node{Variable{std::move(name)}});
}
NodePtr neg(NodePtr a) { return std::make_shared<const Node>(Node{Negate{std::move(a)}}); }
NodePtr bin(BinaryOp op, NodePtr a, NodePtr b) {
  return std::make_shared<const Node>(Node{Binary{op, std::move(a), std::move(b)}});
}
NodePtr call(Function fn, NodePtr a) {
  return std::make_shared<const Node>(Node{Call{fn, std::move(a)}});
}
}  // namespace ex

}  // namespace frullani
