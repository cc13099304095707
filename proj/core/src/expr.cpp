#include "hyperforms/symexpr/expr.hpp"

#include <cmath>
#include <unordered_map>

namespace hyperforms::symexpr {

namespace {

ExprPtr make(ExprKind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

}  // namespace

ExprPtr constant(Rational v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Constant;
  e->value = std::move(v);
  return e;
}

ExprPtr constant(long v) { return constant(Rational(v)); }

ExprPtr coordinate(int index) {
  if (index < 1) throw std::invalid_argument("coordinate index must be >= 1");
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Coordinate;
  e->index = index;
  return e;
}

bool is_constant(const ExprPtr& e, Rational* out) {
  if (e->kind != ExprKind::Constant) return false;
  if (out) *out = e->value;
  return true;
}

bool is_literal_zero(const ExprPtr& e) {
  return e->kind == ExprKind::Constant && e->value == 0;
}

bool is_literal_one(const ExprPtr& e) {
  return e->kind == ExprKind::Constant && e->value == 1;
}

ExprPtr add(ExprPtr a, ExprPtr b) {
  Rational ca, cb;
  if (is_constant(a, &ca) && is_constant(b, &cb)) return constant(ca + cb);
  if (is_literal_zero(a)) return b;
  if (is_literal_zero(b)) return a;
  return make(ExprKind::Add, std::move(a), std::move(b));
}

ExprPtr sub(ExprPtr a, ExprPtr b) {
  Rational ca, cb;
  if (is_constant(a, &ca) && is_constant(b, &cb)) return constant(ca - cb);
  if (is_literal_zero(b)) return a;
  if (is_literal_zero(a)) return neg(std::move(b));
  return make(ExprKind::Sub, std::move(a), std::move(b));
}

ExprPtr mul(ExprPtr a, ExprPtr b) {
  Rational ca, cb;
  if (is_constant(a, &ca) && is_constant(b, &cb)) return constant(ca * cb);
  if (is_literal_zero(a) || is_literal_zero(b)) return constant(0L);
  if (is_literal_one(a)) return b;
  if (is_literal_one(b)) return a;
  return make(ExprKind::Mul, std::move(a), std::move(b));
}

ExprPtr div(ExprPtr a, ExprPtr b) {
  Rational cb;
  if (is_constant(b, &cb) && cb != 0) {
    // Division by a nonzero constant is just a rational rescale; folding it
    // keeps quotients out of the polynomial path.
    Rational ca;
    if (is_constant(a, &ca)) return constant(ca / cb);
    if (cb == 1) return a;
    return make(ExprKind::Mul, constant(Rational(1) / cb), std::move(a));
  }
  if (is_literal_zero(a)) {
    if (!(b->kind == ExprKind::Constant && b->value == 0)) return constant(0L);
  }
  return make(ExprKind::Div, std::move(a), std::move(b));
}

ExprPtr pow(ExprPtr base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow exponent must be >= 0");
  if (exponent == 0) return constant(1L);
  if (exponent == 1) return base;
  Rational c;
  if (is_constant(base, &c)) {
    Rational r(1);
    for (int i = 0; i < exponent; ++i) r *= c;
    return constant(r);
  }
  auto e = make(ExprKind::Pow, std::move(base));
  const_cast<Expr*>(e.get())->exponent = exponent;
  return e;
}

ExprPtr neg(ExprPtr a) {
  Rational c;
  if (is_constant(a, &c)) return constant(-c);
  if (a->kind == ExprKind::Neg) return a->lhs;
  return make(ExprKind::Neg, std::move(a));
}

ExprPtr sin(ExprPtr a) { return make(ExprKind::Sin, std::move(a)); }
ExprPtr cos(ExprPtr a) { return make(ExprKind::Cos, std::move(a)); }
ExprPtr sqrt(ExprPtr a) { return make(ExprKind::Sqrt, std::move(a)); }

int max_coordinate(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Constant:
      return 0;
    case ExprKind::Coordinate:
      return e->index;
    default: {
      int hi = 0;
      if (e->lhs) hi = std::max(hi, max_coordinate(e->lhs));
      if (e->rhs) hi = std::max(hi, max_coordinate(e->rhs));
      return hi;
    }
  }
}

namespace {

// Precedence levels for printing: 1 additive, 2 multiplicative, 3 unary, 4 power.
int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::Neg:
      return 3;
    case ExprKind::Pow:
      return 4;
    case ExprKind::Constant:
      return 5;  // handled specially: fractions/negatives print tighter context
    default:
      return 6;
  }
}

void print(const ExprPtr& e, std::string& out, int parent_level, bool right_side) {
  int level = precedence(*e);
  bool parens = false;
  if (e->kind == ExprKind::Constant) {
    // "3/2" reparses as a division and "-2" as a unary minus, so treat such
    // constants as having the corresponding precedence.
    if (e->value < 0)
      level = 3;
    else if (!is_integer(e->value))
      level = 2;
    else
      level = 6;
  }
  parens = level < parent_level || (level == parent_level && right_side && parent_level <= 2);
  if (parens) out += '(';
  switch (e->kind) {
    case ExprKind::Constant:
      out += rational_str(e->value);
      break;
    case ExprKind::Coordinate:
      out += 'f';
      out += std::to_string(e->index);
      break;
    case ExprKind::Add:
      print(e->lhs, out, 1, false);
      out += " + ";
      print(e->rhs, out, 1, true);
      break;
    case ExprKind::Sub:
      print(e->lhs, out, 1, false);
      out += " - ";
      print(e->rhs, out, 1, true);
      break;
    case ExprKind::Mul:
      print(e->lhs, out, 2, false);
      out += '*';
      print(e->rhs, out, 2, true);
      break;
    case ExprKind::Div:
      print(e->lhs, out, 2, false);
      out += '/';
      print(e->rhs, out, 2, true);
      break;
    case ExprKind::Neg:
      out += '-';
      print(e->lhs, out, 3, true);
      break;
    case ExprKind::Pow:
      print(e->lhs, out, 5, false);
      out += '^';
      out += std::to_string(e->exponent);
      break;
    case ExprKind::Sin:
      out += "sin(";
      print(e->lhs, out, 0, false);
      out += ')';
      break;
    case ExprKind::Cos:
      out += "cos(";
      print(e->lhs, out, 0, false);
      out += ')';
      break;
    case ExprKind::Sqrt:
      out += "sqrt(";
      print(e->lhs, out, 0, false);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

struct EvalCache {
  const Point* p;
  std::unordered_map<const Expr*, double> memo;
};

double eval_rec(const ExprPtr& e, EvalCache& c) {
  auto it = c.memo.find(e.get());
  if (it != c.memo.end()) return it->second;
  double v = 0;
  switch (e->kind) {
    case ExprKind::Constant:
      v = static_cast<double>(e->value);
      break;
    case ExprKind::Coordinate: {
      size_t k = static_cast<size_t>(e->index) - 1;
      if (k >= c.p->size())
        throw DomainError("coordinate index exceeds point dimension", e);
      v = (*c.p)[k];
      break;
    }
    case ExprKind::Add:
      v = eval_rec(e->lhs, c) + eval_rec(e->rhs, c);
      break;
    case ExprKind::Sub:
      v = eval_rec(e->lhs, c) - eval_rec(e->rhs, c);
      break;
    case ExprKind::Mul:
      v = eval_rec(e->lhs, c) * eval_rec(e->rhs, c);
      break;
    case ExprKind::Div: {
      double den = eval_rec(e->rhs, c);
      if (den == 0.0) throw DomainError("division by zero", e);
      v = eval_rec(e->lhs, c) / den;
      break;
    }
    case ExprKind::Pow:
      v = std::pow(eval_rec(e->lhs, c), e->exponent);
      break;
    case ExprKind::Neg:
      v = -eval_rec(e->lhs, c);
      break;
    case ExprKind::Sin:
      v = std::sin(eval_rec(e->lhs, c));
      break;
    case ExprKind::Cos:
      v = std::cos(eval_rec(e->lhs, c));
      break;
    case ExprKind::Sqrt: {
      double a = eval_rec(e->lhs, c);
      if (a < 0.0) throw DomainError("sqrt of a negative value", e);
      v = std::sqrt(a);
      break;
    }
  }
  if (!std::isfinite(v)) throw DomainError("non-finite value", e);
  c.memo.emplace(e.get(), v);
  return v;
}

}  // namespace

std::string to_string(const ExprPtr& e) {
  std::string out;
  print(e, out, 0, false);
  return out;
}

double eval(const ExprPtr& e, const Point& p) {
  EvalCache c{&p, {}};
  return eval_rec(e, c);
}

ExprPtr diff(const ExprPtr& e, int index) {
  switch (e->kind) {
    case ExprKind::Constant:
      return constant(0L);
    case ExprKind::Coordinate:
      return constant(e->index == index ? 1L : 0L);
    case ExprKind::Add:
      return add(diff(e->lhs, index), diff(e->rhs, index));
    case ExprKind::Sub:
      return sub(diff(e->lhs, index), diff(e->rhs, index));
    case ExprKind::Mul:
      return add(mul(diff(e->lhs, index), e->rhs), mul(e->lhs, diff(e->rhs, index)));
    case ExprKind::Div:
      return div(sub(mul(diff(e->lhs, index), e->rhs), mul(e->lhs, diff(e->rhs, index))),
                 pow(e->rhs, 2));
    case ExprKind::Pow:
      return mul(mul(constant(static_cast<long>(e->exponent)), pow(e->lhs, e->exponent - 1)),
                 diff(e->lhs, index));
    case ExprKind::Neg:
      return neg(diff(e->lhs, index));
    case ExprKind::Sin:
      return mul(cos(e->lhs), diff(e->lhs, index));
    case ExprKind::Cos:
      return neg(mul(sin(e->lhs), diff(e->lhs, index)));
    case ExprKind::Sqrt:
      return div(diff(e->lhs, index), mul(constant(2L), sqrt(e->lhs)));
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace hyperforms::symexpr
