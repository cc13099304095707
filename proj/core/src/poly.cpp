#include "hyperforms/symexpr/poly.hpp"

namespace hyperforms::symexpr {

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
  return p;
}

Polynomial Polynomial::coordinate(int index) {
  Polynomial p;
  Monomial m;
  m.factors.emplace_back(index, 1);
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool Polynomial::is_constant(Rational* out) const {
  if (terms_.empty()) {
    if (out) *out = 0;
    return true;
  }
  if (terms_.size() == 1 && terms_.begin()->first.factors.empty()) {
    if (out) *out = terms_.begin()->second;
    return true;
  }
  return false;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

namespace {

Monomial merge(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto ia = a.factors.begin(), ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first)) {
      r.factors.push_back(*ia++);
    } else if (ia == a.factors.end() || ib->first < ia->first) {
      r.factors.push_back(*ib++);
    } else {
      r.factors.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return r;
}

}  // namespace

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) r.add_term(merge(ma, mb), ca * cb);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r = Polynomial::constant(Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Rational Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string monomial_str(const Monomial& mono) {
  if (mono.factors.empty()) return "1";
  std::string s;
  for (auto& [v, e] : mono.factors) {
    if (!s.empty()) s += '*';
    s += 'f' + std::to_string(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (m.factors.empty())
      s += rational_str(c);
    else if (c == 1)
      s += monomial_str(m);
    else if (c == -1)
      s += "-" + monomial_str(m);
    else
      s += rational_str(c) + "*" + monomial_str(m);
  }
  return s;
}

std::optional<Polynomial> poly_normalize(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Constant:
      return Polynomial::constant(e->value);
    case ExprKind::Coordinate:
      return Polynomial::coordinate(e->index);
    case ExprKind::Add: {
      auto a = poly_normalize(e->lhs), b = poly_normalize(e->rhs);
      if (!a || !b) return std::nullopt;
      return *a + *b;
    }
    case ExprKind::Sub: {
      auto a = poly_normalize(e->lhs), b = poly_normalize(e->rhs);
      if (!a || !b) return std::nullopt;
      return *a - *b;
    }
    case ExprKind::Mul: {
      auto a = poly_normalize(e->lhs), b = poly_normalize(e->rhs);
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    case ExprKind::Div: {
      auto a = poly_normalize(e->lhs), b = poly_normalize(e->rhs);
      if (!a || !b) return std::nullopt;
      Rational c;
      if (!b->is_constant(&c) || c == 0) return std::nullopt;
      return a->scaled(Rational(1) / c);
    }
    case ExprKind::Pow: {
      auto a = poly_normalize(e->lhs);
      if (!a) return std::nullopt;
      return a->pow(e->exponent);
    }
    case ExprKind::Neg: {
      auto a = poly_normalize(e->lhs);
      if (!a) return std::nullopt;
      return -*a;
    }
    case ExprKind::Sin:
    case ExprKind::Cos:
    case ExprKind::Sqrt:
      return std::nullopt;
  }
  return std::nullopt;
}

bool poly_zero(const ExprPtr& e) {
  auto p = poly_normalize(e);
  return p && p->is_zero();
}

}  // namespace hyperforms::symexpr
