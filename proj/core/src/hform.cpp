#include "hyperforms/extcalc/hform.hpp"

namespace hyperforms::extcalc {

using hyperalg::Algebra;
using hyperalg::HNum;
using hyperalg::SpecMismatch;
using hyperalg::UnknownBlade;
using symexpr::ExprPtr;

HForm HForm::zero(const Algebra& a, int m, int degree) {
  HForm x;
  x.alg = &a;
  x.degree = degree;
  x.parts.assign(static_cast<size_t>(a.dim()), Form(m, degree));
  return x;
}

HForm HForm::from_value(const Algebra& a, int m, const HNum<ExprPtr>& v) {
  HForm x = zero(a, m, 0);
  for (int i = 0; i < a.dim(); ++i) x.parts[static_cast<size_t>(i)].add_term({}, v.c[static_cast<size_t>(i)]);
  return x;
}

const Form& HForm::part(int blade) const {
  if (blade < 0 || blade >= alg->dim()) throw UnknownBlade("blade out of range");
  return parts[static_cast<size_t>(blade)];
}

namespace {

void check_compatible(const HForm& x, const HForm& y) {
  if (!(*x.alg == *y.alg)) throw SpecMismatch("algebra-valued forms over different algebras");
  if (x.m() != y.m()) throw SpecMismatch("algebra-valued forms over different coordinate charts");
}

}  // namespace

HForm operator+(const HForm& x, const HForm& y) {
  check_compatible(x, y);
  HForm r = x;
  for (size_t i = 0; i < r.parts.size(); ++i) r.parts[i] = r.parts[i] + y.parts[i];
  return r;
}

HForm operator-(const HForm& x, const HForm& y) { return x + (-y); }

HForm operator-(const HForm& x) {
  HForm r = x;
  for (auto& p : r.parts) p = -p;
  return r;
}

HForm hwedge(const HForm& x, const HForm& y) {
  check_compatible(x, y);
  const Algebra& a = *x.alg;
  HForm r = HForm::zero(a, x.m(), x.degree + y.degree);
  for (int i = 0; i < a.dim(); ++i) {
    if (x.parts[static_cast<size_t>(i)].empty()) continue;
    for (int j = 0; j < a.dim(); ++j) {
      if (y.parts[static_cast<size_t>(j)].empty()) continue;
      auto [k, sign] = a.product(i, j);
      Form w = wedge(x.parts[static_cast<size_t>(i)], y.parts[static_cast<size_t>(j)]);
      if (sign < 0) w = -w;
      r.parts[static_cast<size_t>(k)] = r.parts[static_cast<size_t>(k)] + w;
    }
  }
  return r;
}

HForm scalar_act(const HNum<ExprPtr>& q, const HForm& x, Side side) {
  if (!(*q.alg == *x.alg)) throw SpecMismatch("factor and form over different algebras");
  const Algebra& a = *x.alg;
  HForm r = HForm::zero(a, x.m(), x.degree);
  for (int i = 0; i < a.dim(); ++i) {
    const ExprPtr& qi = q.c[static_cast<size_t>(i)];
    if (symexpr::is_literal_zero(qi)) continue;
    for (int j = 0; j < a.dim(); ++j) {
      if (x.parts[static_cast<size_t>(j)].empty()) continue;
      auto [k, sign] = side == Side::Left ? a.product(i, j) : a.product(j, i);
      Form w = side == Side::Left ? scale(qi, x.parts[static_cast<size_t>(j)])
                                  : scale_right(x.parts[static_cast<size_t>(j)], qi);
      if (sign < 0) w = -w;
      r.parts[static_cast<size_t>(k)] = r.parts[static_cast<size_t>(k)] + w;
    }
  }
  return r;
}

HForm ext_d(const HForm& x) {
  HForm r;
  r.alg = x.alg;
  r.degree = x.degree + 1;
  r.parts.reserve(x.parts.size());
  for (auto& p : x.parts) r.parts.push_back(ext_d(p));
  return r;
}

const Form& hreal(const HForm& x) { return x.parts.front(); }

const Form& hcomponent(const HForm& x, int blade) { return x.part(blade); }

std::string render_hform(const HForm& x) {
  std::string out;
  for (int i = 0; i < x.alg->dim(); ++i) {
    const Form& p = x.parts[static_cast<size_t>(i)];
    if (p.empty()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0)
      out += "(" + render_form(p) + ")";
    else
      out += x.alg->basis_name(i) + "(" + render_form(p) + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace hyperforms::extcalc
