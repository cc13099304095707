#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperforms/symexpr/expr.hpp"

namespace hyperforms::symexpr {

// Canonical multivariate polynomial over the coordinates with exact rational
// coefficients.  Monomials are kept in graded-lex order, so two polynomials are
// equal iff their term maps are equal.

struct Monomial {
  std::vector<std::pair<int, int>> factors;  // (coordinate, exponent), sorted, exponent > 0

  int total_degree() const {
    int d = 0;
    for (auto& [v, e] : factors) d += e;
    return d;
  }
  bool operator==(const Monomial& o) const { return factors == o.factors; }
  bool operator<(const Monomial& o) const {
    int da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    return factors < o.factors;
  }
};

class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(Rational c);
  static Polynomial coordinate(int index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant(Rational* out = nullptr) const;
  int total_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial pow(int e) const;
  Polynomial scaled(const Rational& c) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& mono) const;

  std::string str() const;

  void add_term(const Monomial& mono, const Rational& c);

 private:
  std::map<Monomial, Rational> terms_;
};

std::string monomial_str(const Monomial& mono);

// Expands e into canonical polynomial form.  Returns nullopt ("not a
// polynomial") when e contains sin/cos/sqrt or a division whose divisor is not
// a nonzero constant.
std::optional<Polynomial> poly_normalize(const ExprPtr& e);

// True when e is provably the zero function by the polynomial route alone.
bool poly_zero(const ExprPtr& e);

}  // namespace hyperforms::symexpr
