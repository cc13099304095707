#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperforms/symexpr/rational.hpp"

namespace hyperforms::symexpr {

// Immutable expression trees over coordinates f1, f2, ... with exact rational
// constants.  Smart constructors fold constants and strip additive/multiplicative
// identities so routine algebra (differentiation, form arithmetic) does not
// accumulate dead nodes.

enum class ExprKind {
  Constant,
  Coordinate,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Neg,
  Sin,
  Cos,
  Sqrt,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  Rational value;  // Constant
  int index = 0;   // Coordinate (1-based)
  int exponent = 0;  // Pow, always >= 0
  ExprPtr lhs, rhs;
};

ExprPtr constant(Rational v);
ExprPtr constant(long v);
ExprPtr coordinate(int index);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr div(ExprPtr a, ExprPtr b);
ExprPtr pow(ExprPtr base, int exponent);
ExprPtr neg(ExprPtr a);
ExprPtr sin(ExprPtr a);
ExprPtr cos(ExprPtr a);
ExprPtr sqrt(ExprPtr a);

bool is_constant(const ExprPtr& e, Rational* out = nullptr);
bool is_literal_zero(const ExprPtr& e);
bool is_literal_one(const ExprPtr& e);
int max_coordinate(const ExprPtr& e);

std::string to_string(const ExprPtr& e);

// Numeric evaluation point: component k holds the value of f_{k+1}.
using Point = std::vector<double>;

class DomainError : public std::runtime_error {
 public:
  DomainError(std::string what, ExprPtr subtree)
      : std::runtime_error(std::move(what)), subtree(std::move(subtree)) {}
  ExprPtr subtree;
};

// Throws DomainError on sqrt of a negative, division by zero, an out-of-range
// coordinate, or a non-finite intermediate.
double eval(const ExprPtr& e, const Point& p);

// Exact partial derivative with respect to f_index.
ExprPtr diff(const ExprPtr& e, int index);

}  // namespace hyperforms::symexpr
