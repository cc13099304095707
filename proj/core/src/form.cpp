#include "hyperforms/extcalc/form.hpp"

#include "hyperforms/symexpr/poly.hpp"

namespace hyperforms::extcalc {

using symexpr::ExprPtr;

namespace {

// Sorts idx in place, returns the permutation sign, or 0 on a repeat.
int sort_sign(IndexTuple& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

bool provably_zero(const ExprPtr& c) {
  return symexpr::is_literal_zero(c) || symexpr::poly_zero(c);
}

}  // namespace

void Form::add_term(IndexTuple idx, ExprPtr coeff) {
  if (static_cast<int>(idx.size()) != degree_)
    throw DegreeMismatch("term arity " + std::to_string(idx.size()) +
                         " in a form of degree " + std::to_string(degree_));
  int sign = sort_sign(idx);
  if (sign == 0 || provably_zero(coeff)) return;
  if (sign < 0) coeff = symexpr::neg(std::move(coeff));
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(std::move(idx), std::move(coeff));
    return;
  }
  ExprPtr sum = symexpr::add(it->second, std::move(coeff));
  if (provably_zero(sum))
    terms_.erase(it);
  else
    it->second = std::move(sum);
}

ExprPtr Form::coefficient(const IndexTuple& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? symexpr::constant(0) : it->second;
}

Form operator+(const Form& a, const Form& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("adding a " + std::to_string(a.degree()) + "-form to a " +
                         std::to_string(b.degree()) + "-form");
  Form r = a;
  for (auto& [idx, c] : b.terms()) r.add_term(idx, c);
  return r;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form operator-(const Form& a) {
  Form r(a.m(), a.degree());
  for (auto& [idx, c] : a.terms()) r.add_term(idx, symexpr::neg(c));
  return r;
}

Form scale(const ExprPtr& c, const Form& a) {
  Form r(a.m(), a.degree());
  for (auto& [idx, k] : a.terms()) r.add_term(idx, symexpr::mul(c, k));
  return r;
}

Form scale_right(const Form& a, const ExprPtr& c) {
  Form r(a.m(), a.degree());
  for (auto& [idx, k] : a.terms()) r.add_term(idx, symexpr::mul(k, c));
  return r;
}

Form wedge(const Form& a, const Form& b) {
  Form r(a.m(), a.degree() + b.degree());
  for (auto& [ia, ca] : a.terms())
    for (auto& [ib, cb] : b.terms()) {
      IndexTuple idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(std::move(idx), symexpr::mul(ca, cb));
    }
  return r;
}

Form ext_d(const Form& a) {
  Form r(a.m(), a.degree() + 1);
  for (auto& [idx, c] : a.terms())
    for (int i = 1; i <= a.rank(); ++i) {
      ExprPtr dc = symexpr::diff(c, i);
      if (symexpr::is_literal_zero(dc)) continue;
      IndexTuple ext;
      ext.reserve(idx.size() + 1);
      ext.push_back(i);
      ext.insert(ext.end(), idx.begin(), idx.end());
      r.add_term(std::move(ext), std::move(dc));
    }
  return r;
}

Form d_coord(int m, int k) {
  Form r(m, 1);
  r.add_term({k}, symexpr::constant(1));
  return r;
}

Form coord_form(int m, int k) { return scalar_form(m, symexpr::coordinate(k)); }

Form zero_form(int m, int degree) { return Form(m, degree); }

Form scalar_form(int m, symexpr::ExprPtr c) {
  Form r(m, 0);
  r.add_term({}, std::move(c));
  return r;
}

std::string render_form(const Form& a) {
  if (a.empty()) return "0";
  std::string out;
  for (auto& [idx, c] : a.terms()) {
    symexpr::ExprPtr body = c;
    bool negative = false;
    if (body->kind == symexpr::ExprKind::Neg) {
      negative = true;
      body = body->lhs;
    } else if (body->kind == symexpr::ExprKind::Constant && body->value < 0) {
      negative = true;
      body = symexpr::constant(-body->value);
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string cs;
    bool bare = body->kind == symexpr::ExprKind::Coordinate ||
                (body->kind == symexpr::ExprKind::Constant && body->value >= 0);
    bool unit = symexpr::is_literal_one(body);
    if (!unit)
      cs = bare ? symexpr::to_string(body) : "(" + symexpr::to_string(body) + ")";
    std::string basis;
    for (int i : idx) {
      if (!basis.empty()) basis += "^";
      basis += "df" + std::to_string(i);
    }
    if (basis.empty())
      out += unit ? "1" : cs;
    else if (unit)
      out += basis;
    else
      out += cs + " " + basis;
  }
  return out;
}

}  // namespace hyperforms::extcalc
