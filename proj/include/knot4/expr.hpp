#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "knot4/jet1d.hpp"

namespace knot4::expr {

enum class NodeKind { Constant, Variable, Parameter, Negate, Add, Subtract, Multiply, Divide, Power, Call };

enum class Function { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh, Atan };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Immutable; subtrees are shared between expressions.
struct Node {
  NodeKind kind = NodeKind::Constant;
  double value = 0.0;       // Constant
  std::string name;         // Parameter
  Function fn = Function::Sin;  // Call
  NodePtr lhs;              // unary operand, or left operand
  NodePtr rhs;              // right operand; exponent for Power
  std::size_t offset = 0;   // byte offset in source, 0 for synthesized nodes
};

using ParamMap = std::map<std::string, double, std::less<>>;

// Expression in the single variable u. Cheap to copy.
class Expr {
 public:
  Expr();
  explicit Expr(NodePtr root);

  static Expr constant(double c);
  static Expr variable();
  static Expr parameter(std::string name);
  static Expr call(Function fn, const Expr& arg);
  static Expr power(const Expr& base, const Expr& exponent);

  const Node& root() const noexcept { return *root_; }
  const NodePtr& node() const noexcept { return root_; }

  bool depends_on_u() const;
  std::set<std::string> parameters() const;

  friend Expr operator-(const Expr& a);
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);

 private:
  NodePtr root_;
};

// Grammar:
//   expr     := term (("+"|"-") term)*
//   term     := factor (("*"|"/") factor)*
//   factor   := "-" factor | power
//   power    := base ("^" exponent)?
//   exponent := "-" exponent | base ("^" exponent)?       must not contain u
//   base     := number | "u" | "pi" | param | fn "(" expr ")" | "(" expr ")"
// Identifiers other than u, pi and the built-in functions must be listed in params.
Expr parse(std::string_view text, const std::vector<std::string>& params = {});
Expr parse(std::string_view text, const ParamMap& params);

// Fully parenthesized, constants printed with 17 significant digits, so that
// parse(render(e)) evaluates bit-identically to e.
std::string render(const Expr& e);

// d/du, with folding of 0 and 1 constants only.
Expr differentiate(const Expr& e);

// Value and derivatives up to order 3 at u. Throws DomainError.
Jet1D eval_jet1d(const Expr& e, double u, const ParamMap& params);

// Value only; independent of the jet arithmetic. Instantiated for double and long double.
template <typename T>
T eval_value(const Expr& e, T u, const ParamMap& params);

const char* function_name(Function fn) noexcept;

}  // namespace knot4::expr
