#include "knot4/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

#include "knot4/errors.hpp"

namespace knot4::expr {

namespace {

NodePtr make_node(NodeKind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr, std::size_t offset = 0) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->offset = offset;
  return n;
}

NodePtr make_constant(double c, std::size_t offset = 0) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Constant;
  n->value = c;
  n->offset = offset;
  return n;
}

NodePtr make_call(Function fn, NodePtr arg, std::size_t offset = 0) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Call;
  n->fn = fn;
  n->lhs = std::move(arg);
  n->offset = offset;
  return n;
}

constexpr std::array<std::pair<std::string_view, Function>, 9> kFunctions{{
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"tan", Function::Tan},
    {"exp", Function::Exp},
    {"log", Function::Log},
    {"sqrt", Function::Sqrt},
    {"sinh", Function::Sinh},
    {"cosh", Function::Cosh},
    {"atan", Function::Atan},
}};

bool lookup_function(std::string_view name, Function& out) {
  for (const auto& [n, f] : kFunctions) {
    if (n == name) {
      out = f;
      return true;
    }
  }
  return false;
}

bool node_depends_on_u(const Node& n) {
  if (n.kind == NodeKind::Variable) return true;
  return (n.lhs && node_depends_on_u(*n.lhs)) || (n.rhs && node_depends_on_u(*n.rhs));
}

// ---------------------------------------------------------------------------
// Lexer / parser
// ---------------------------------------------------------------------------

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  double number = 0.0;
  std::string_view text;
};

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& params) : text_(text), params_(params) {
    advance();
  }

  NodePtr parse_all() {
    if (cur_.kind == Tok::End) throw SyntaxError("empty expression", cur_.offset);
    NodePtr e = parse_expr();
    if (cur_.kind == Tok::RParen) throw SyntaxError("unbalanced ')'", cur_.offset);
    if (cur_.kind != Tok::End) throw SyntaxError("unexpected token", cur_.offset);
    return e;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Token t{Tok::End, pos_, 0.0, {}};
    if (pos_ >= text_.size()) {
      cur_ = t;
      return;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t end = pos_;
      while (end < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.')) ++end;
      if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
        std::size_t exp = end + 1;
        if (exp < text_.size() && (text_[exp] == '+' || text_[exp] == '-')) ++exp;
        if (exp < text_.size() && std::isdigit(static_cast<unsigned char>(text_[exp]))) {
          while (exp < text_.size() && std::isdigit(static_cast<unsigned char>(text_[exp]))) ++exp;
          end = exp;
        }
      }
      double value = 0.0;
      const auto res = std::from_chars(text_.data() + pos_, text_.data() + end, value);
      if (res.ec != std::errc() || res.ptr != text_.data() + end) throw SyntaxError("malformed number", pos_);
      t.kind = Tok::Number;
      t.number = value;
      t.text = text_.substr(pos_, end - pos_);
      pos_ = end;
      cur_ = t;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
      t.kind = Tok::Ident;
      t.text = text_.substr(pos_, end - pos_);
      pos_ = end;
      cur_ = t;
      return;
    }
    switch (c) {
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      default: throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }
    ++pos_;
    cur_ = t;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const auto kind = cur_.kind == Tok::Plus ? NodeKind::Add : NodeKind::Subtract;
      const auto at = cur_.offset;
      advance();
      lhs = make_node(kind, lhs, parse_term(), at);
    }
    return lhs;
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      const auto kind = cur_.kind == Tok::Star ? NodeKind::Multiply : NodeKind::Divide;
      const auto at = cur_.offset;
      advance();
      lhs = make_node(kind, lhs, parse_factor(), at);
    }
    return lhs;
  }

  NodePtr parse_factor() {
    if (cur_.kind == Tok::Minus) {
      const auto at = cur_.offset;
      advance();
      return make_node(NodeKind::Negate, parse_factor(), nullptr, at);
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_base();
    if (cur_.kind != Tok::Caret) return base;
    const auto at = cur_.offset;
    advance();
    const auto exp_at = cur_.offset;
    NodePtr exponent = parse_exponent();
    if (node_depends_on_u(*exponent)) throw SyntaxError("exponent must not depend on u", exp_at);
    return make_node(NodeKind::Power, base, exponent, at);
  }

  NodePtr parse_exponent() {
    if (cur_.kind == Tok::Minus) {
      const auto at = cur_.offset;
      advance();
      return make_node(NodeKind::Negate, parse_exponent(), nullptr, at);
    }
    return parse_power();
  }

  NodePtr parse_base() {
    const Token t = cur_;
    switch (t.kind) {
      case Tok::Number:
        advance();
        return make_constant(t.number, t.offset);
      case Tok::LParen: {
        advance();
        NodePtr inner = parse_expr();
        if (cur_.kind != Tok::RParen) throw SyntaxError("expected ')'", cur_.offset);
        advance();
        return inner;
      }
      case Tok::Ident: {
        advance();
        if (t.text == "u") return make_node(NodeKind::Variable, nullptr, nullptr, t.offset);
        if (t.text == "pi") return make_constant(std::numbers::pi, t.offset);
        Function fn;
        if (lookup_function(t.text, fn)) {
          if (cur_.kind != Tok::LParen) throw SyntaxError("expected '(' after function name", cur_.offset);
          advance();
          NodePtr arg = parse_expr();
          if (cur_.kind != Tok::RParen) throw SyntaxError("expected ')'", cur_.offset);
          advance();
          return make_call(fn, arg, t.offset);
        }
        if (std::find(params_.begin(), params_.end(), t.text) != params_.end()) {
          auto n = std::make_shared<Node>();
          n->kind = NodeKind::Parameter;
          n->name = std::string(t.text);
          n->offset = t.offset;
          return n;
        }
        throw SyntaxError("unknown identifier '" + std::string(t.text) + "'", t.offset);
      }
      case Tok::End:
        throw SyntaxError("expected operand", t.offset);
      case Tok::RParen:
        throw SyntaxError("unbalanced ')'", t.offset);
      default:
        throw SyntaxError("expected operand", t.offset);
    }
  }

  std::string_view text_;
  const std::vector<std::string>& params_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, 0, 0.0, {}};
};

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

void render_into(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::Constant: {
      char buf[64];
      const auto res = std::to_chars(buf, buf + sizeof buf, n.value, std::chars_format::general, 17);
      const std::string_view s(buf, static_cast<std::size_t>(res.ptr - buf));
      if (n.value < 0.0 || std::signbit(n.value)) {
        out += "(-";
        out += s.substr(1);
        out += ')';
      } else {
        out += s;
      }
      return;
    }
    case NodeKind::Variable: out += 'u'; return;
    case NodeKind::Parameter: out += n.name; return;
    case NodeKind::Negate:
      out += "(-";
      render_into(*n.lhs, out);
      out += ')';
      return;
    case NodeKind::Call:
      out += function_name(n.fn);
      out += '(';
      render_into(*n.lhs, out);
      out += ')';
      return;
    default: break;
  }
  const char* op = n.kind == NodeKind::Add        ? " + "
                   : n.kind == NodeKind::Subtract ? " - "
                   : n.kind == NodeKind::Multiply ? " * "
                   : n.kind == NodeKind::Divide   ? " / "
                                                  : "^";
  out += '(';
  render_into(*n.lhs, out);
  out += op;
  render_into(*n.rhs, out);
  out += ')';
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

bool is_const(const NodePtr& n, double c) { return n->kind == NodeKind::Constant && n->value == c; }
bool is_const(const NodePtr& n) { return n->kind == NodeKind::Constant; }

NodePtr add(NodePtr a, NodePtr b) {
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  if (is_const(a) && is_const(b)) return make_constant(a->value + b->value);
  return make_node(NodeKind::Add, std::move(a), std::move(b));
}

NodePtr neg(NodePtr a) {
  if (is_const(a)) return make_constant(-a->value);
  return make_node(NodeKind::Negate, std::move(a));
}

NodePtr sub(NodePtr a, NodePtr b) {
  if (is_const(b, 0.0)) return a;
  if (is_const(a, 0.0)) return neg(std::move(b));
  if (is_const(a) && is_const(b)) return make_constant(a->value - b->value);
  return make_node(NodeKind::Subtract, std::move(a), std::move(b));
}

NodePtr mul(NodePtr a, NodePtr b) {
  if (is_const(a, 0.0) || is_const(b, 0.0)) return make_constant(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  if (is_const(a) && is_const(b)) return make_constant(a->value * b->value);
  return make_node(NodeKind::Multiply, std::move(a), std::move(b));
}

NodePtr div(NodePtr a, NodePtr b) {
  if (is_const(a, 0.0)) return make_constant(0.0);
  if (is_const(b, 1.0)) return a;
  return make_node(NodeKind::Divide, std::move(a), std::move(b));
}

NodePtr derive(const NodePtr& n) {
  switch (n->kind) {
    case NodeKind::Constant:
    case NodeKind::Parameter: return make_constant(0.0);
    case NodeKind::Variable: return make_constant(1.0);
    case NodeKind::Negate: return neg(derive(n->lhs));
    case NodeKind::Add: return add(derive(n->lhs), derive(n->rhs));
    case NodeKind::Subtract: return sub(derive(n->lhs), derive(n->rhs));
    case NodeKind::Multiply:
      return add(mul(derive(n->lhs), n->rhs), mul(n->lhs, derive(n->rhs)));
    case NodeKind::Divide: {
      NodePtr num = sub(mul(derive(n->lhs), n->rhs), mul(n->lhs, derive(n->rhs)));
      return div(num, mul(n->rhs, n->rhs));
    }
    case NodeKind::Power: {
      NodePtr reduced = make_node(NodeKind::Power, n->lhs, sub(n->rhs, make_constant(1.0)));
      return mul(mul(n->rhs, reduced), derive(n->lhs));
    }
    case NodeKind::Call: {
      const NodePtr& f = n->lhs;
      NodePtr df = derive(f);
      if (is_const(df, 0.0)) return df;
      switch (n->fn) {
        case Function::Sin: return mul(make_call(Function::Cos, f), df);
        case Function::Cos: return neg(mul(make_call(Function::Sin, f), df));
        case Function::Tan: {
          NodePtr t = make_call(Function::Tan, f);
          return mul(add(make_constant(1.0), mul(t, t)), df);
        }
        case Function::Exp: return mul(n, df);
        case Function::Log: return div(df, f);
        case Function::Sqrt: return div(df, mul(make_constant(2.0), n));
        case Function::Sinh: return mul(make_call(Function::Cosh, f), df);
        case Function::Cosh: return mul(make_call(Function::Sinh, f), df);
        case Function::Atan: return div(df, add(make_constant(1.0), mul(f, f)));
      }
    }
  }
  return make_constant(0.0);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

[[noreturn]] void domain_fail(const char* what, const Node& n) {
  std::string text;
  render_into(n, text);
  throw DomainError(what, text, n.offset);
}

double lookup_param(const Node& n, const ParamMap& params) {
  const auto it = params.find(n.name);
  if (it == params.end()) domain_fail("unbound parameter", n);
  return it->second;
}

template <typename T>
T value(const Node& n, T u, const ParamMap& params);

// Exponents are u-free by construction, so any evaluation point will do.
double constant_exponent(const Node& n, const ParamMap& params) { return value<double>(n, 0.0, params); }

Jet1D jet(const Node& n, double u, const ParamMap& params) {
  Jet1D r;
  switch (n.kind) {
    case NodeKind::Constant: return Jet1D::constant(n.value);
    case NodeKind::Variable: return Jet1D::variable(u);
    case NodeKind::Parameter: return Jet1D::constant(lookup_param(n, params));
    case NodeKind::Negate: return -jet(*n.lhs, u, params);
    case NodeKind::Add: r = jet(*n.lhs, u, params) + jet(*n.rhs, u, params); break;
    case NodeKind::Subtract: r = jet(*n.lhs, u, params) - jet(*n.rhs, u, params); break;
    case NodeKind::Multiply: r = jet(*n.lhs, u, params) * jet(*n.rhs, u, params); break;
    case NodeKind::Divide: {
      const Jet1D a = jet(*n.lhs, u, params);
      const Jet1D b = jet(*n.rhs, u, params);
      if (b.d0 == 0.0) domain_fail("division by zero", n);
      r = a / b;
      break;
    }
    case NodeKind::Power: {
      const Jet1D a = jet(*n.lhs, u, params);
      const double p = constant_exponent(*n.rhs, params);
      if (a.d0 < 0.0 && p != std::round(p)) domain_fail("negative base with non-integer exponent", n);
      r = pow(a, p);
      break;
    }
    case NodeKind::Call: {
      const Jet1D a = jet(*n.lhs, u, params);
      switch (n.fn) {
        case Function::Sin: r = sin(a); break;
        case Function::Cos: r = cos(a); break;
        case Function::Tan: r = tan(a); break;
        case Function::Exp: r = exp(a); break;
        case Function::Log:
          if (!(a.d0 > 0.0)) domain_fail("log of non-positive argument", n);
          r = log(a);
          break;
        case Function::Sqrt:
          if (!(a.d0 > 0.0)) domain_fail("sqrt of non-positive argument", n);
          r = sqrt(a);
          break;
        case Function::Sinh: r = sinh(a); break;
        case Function::Cosh: r = cosh(a); break;
        case Function::Atan: r = atan(a); break;
      }
      break;
    }
  }
  if (!r.finite()) domain_fail("non-finite result", n);
  return r;
}

template <typename T>
T value(const Node& n, T u, const ParamMap& params) {
  using std::atan, std::cos, std::cosh, std::exp, std::log, std::pow, std::sin, std::sinh, std::sqrt, std::tan;
  T r{};
  switch (n.kind) {
    case NodeKind::Constant: return static_cast<T>(n.value);
    case NodeKind::Variable: return u;
    case NodeKind::Parameter: return static_cast<T>(lookup_param(n, params));
    case NodeKind::Negate: return -value(*n.lhs, u, params);
    case NodeKind::Add: r = value(*n.lhs, u, params) + value(*n.rhs, u, params); break;
    case NodeKind::Subtract: r = value(*n.lhs, u, params) - value(*n.rhs, u, params); break;
    case NodeKind::Multiply: r = value(*n.lhs, u, params) * value(*n.rhs, u, params); break;
    case NodeKind::Divide: {
      const T a = value(*n.lhs, u, params);
      const T b = value(*n.rhs, u, params);
      if (b == T(0)) domain_fail("division by zero", n);
      r = a / b;
      break;
    }
    case NodeKind::Power: {
      const T a = value(*n.lhs, u, params);
      const T p = value(*n.rhs, u, params);
      if (a < T(0) && p != std::round(p)) domain_fail("negative base with non-integer exponent", n);
      r = pow(a, p);
      break;
    }
    case NodeKind::Call: {
      const T a = value(*n.lhs, u, params);
      switch (n.fn) {
        case Function::Sin: r = sin(a); break;
        case Function::Cos: r = cos(a); break;
        case Function::Tan: r = tan(a); break;
        case Function::Exp: r = exp(a); break;
        case Function::Log:
          if (!(a > T(0))) domain_fail("log of non-positive argument", n);
          r = log(a);
          break;
        case Function::Sqrt:
          if (a < T(0)) domain_fail("sqrt of negative argument", n);
          r = sqrt(a);
          break;
        case Function::Sinh: r = sinh(a); break;
        case Function::Cosh: r = cosh(a); break;
        case Function::Atan: r = atan(a); break;
      }
      break;
    }
  }
  if (!std::isfinite(r)) domain_fail("non-finite result", n);
  return r;
}

void collect_params(const Node& n, std::set<std::string>& out) {
  if (n.kind == NodeKind::Parameter) out.insert(n.name);
  if (n.lhs) collect_params(*n.lhs, out);
  if (n.rhs) collect_params(*n.rhs, out);
}

}  // namespace

Expr::Expr() : root_(make_constant(0.0)) {}
Expr::Expr(NodePtr root) : root_(std::move(root)) {}

Expr Expr::constant(double c) { return Expr(make_constant(c)); }
Expr Expr::variable() { return Expr(make_node(NodeKind::Variable)); }
Expr Expr::parameter(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Parameter;
  n->name = std::move(name);
  return Expr(n);
}
Expr Expr::call(Function fn, const Expr& arg) { return Expr(make_call(fn, arg.root_)); }
Expr Expr::power(const Expr& base, const Expr& exponent) {
  return Expr(make_node(NodeKind::Power, base.root_, exponent.root_));
}

bool Expr::depends_on_u() const { return node_depends_on_u(*root_); }

std::set<std::string> Expr::parameters() const {
  std::set<std::string> out;
  collect_params(*root_, out);
  return out;
}

Expr operator-(const Expr& a) { return Expr(make_node(NodeKind::Negate, a.root_)); }
Expr operator+(const Expr& a, const Expr& b) { return Expr(make_node(NodeKind::Add, a.root_, b.root_)); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make_node(NodeKind::Subtract, a.root_, b.root_)); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make_node(NodeKind::Multiply, a.root_, b.root_)); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make_node(NodeKind::Divide, a.root_, b.root_)); }

Expr parse(std::string_view text, const std::vector<std::string>& params) {
  return Expr(Parser(text, params).parse_all());
}

Expr parse(std::string_view text, const ParamMap& params) {
  std::vector<std::string> names;
  names.reserve(params.size());
  for (const auto& [name, _] : params) names.push_back(name);
  return parse(text, names);
}

std::string render(const Expr& e) {
  std::string out;
  render_into(e.root(), out);
  return out;
}

Expr differentiate(const Expr& e) { return Expr(derive(e.node())); }

Jet1D eval_jet1d(const Expr& e, double u, const ParamMap& params) { return jet(e.root(), u, params); }

template <typename T>
T eval_value(const Expr& e, T u, const ParamMap& params) {
  return value<T>(e.root(), u, params);
}

template double eval_value<double>(const Expr&, double, const ParamMap&);
template long double eval_value<long double>(const Expr&, long double, const ParamMap&);

const char* function_name(Function fn) noexcept {
  for (const auto& [n, f] : kFunctions) {
    if (f == fn) return n.data();
  }
  return "?";
}

}  // namespace knot4::expr
