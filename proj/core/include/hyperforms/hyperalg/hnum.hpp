#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hyperforms/hyperalg/algebra.hpp"
#include "hyperforms/symexpr/expr.hpp"
#include "hyperforms/symexpr/poly.hpp"

namespace hyperforms::hyperalg {

class SpecMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotPureImaginary : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnknownBlade : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scalar-ring plug: binary64 for numeric checks, expression trees for
// exact work.  is_zero may be conservative (false negatives allowed);
// it only gates shortcuts, never correctness.
template <class S>
struct ring_traits;

template <>
struct ring_traits<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x) { return x == 0.0; }
  static double add(double a, double b) { return a + b; }
  static double sub(double a, double b) { return a - b; }
  static double mul(double a, double b) { return a * b; }
  static double neg(double a) { return -a; }
  static double div(double a, double b) { return a / b; }
  static double cos(double a) { return std::cos(a); }
  static double sin(double a) { return std::sin(a); }
  static double sqrt(double a) { return std::sqrt(a); }
};

template <>
struct ring_traits<symexpr::ExprPtr> {
  using E = symexpr::ExprPtr;
  static E zero() { return symexpr::constant(0); }
  static E one() { return symexpr::constant(1); }
  static bool is_zero(const E& x) {
    return symexpr::is_literal_zero(x) || symexpr::poly_zero(x);
  }
  static E add(const E& a, const E& b) { return symexpr::add(a, b); }
  static E sub(const E& a, const E& b) { return symexpr::sub(a, b); }
  static E mul(const E& a, const E& b) { return symexpr::mul(a, b); }
  static E neg(const E& a) { return symexpr::neg(a); }
  static E div(const E& a, const E& b) { return symexpr::div(a, b); }
  static E cos(const E& a) { return symexpr::cos(a); }
  static E sin(const E& a) { return symexpr::sin(a); }
  static E sqrt(const E& a) { return symexpr::sqrt(a); }
};

// Element of an Algebra: one scalar per basis element.  The Algebra must
// outlive every HNum built over it.
template <class S>
struct HNum {
  const Algebra* alg = nullptr;
  std::vector<S> c;

  using R = ring_traits<S>;

  static HNum zero(const Algebra& a) {
    HNum x;
    x.alg = &a;
    x.c.assign(static_cast<size_t>(a.dim()), R::zero());
    return x;
  }
  static HNum scalar(const Algebra& a, S v) {
    HNum x = zero(a);
    x.c[0] = std::move(v);
    return x;
  }
  static HNum basis(const Algebra& a, int i) {
    HNum x = zero(a);
    x.c.at(static_cast<size_t>(i)) = R::one();
    return x;
  }

  S real_part() const { return c[0]; }
  S component(int blade) const {
    if (blade < 0 || blade >= alg->dim()) throw UnknownBlade("blade out of range");
    return c[static_cast<size_t>(blade)];
  }
};

template <class S>
void check_same(const HNum<S>& x, const HNum<S>& y) {
  if (!x.alg || !y.alg || !(*x.alg == *y.alg))
    throw SpecMismatch("operands built over different algebras");
}

template <class S>
HNum<S> hadd(const HNum<S>& x, const HNum<S>& y) {
  check_same(x, y);
  HNum<S> r = x;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = HNum<S>::R::add(r.c[i], y.c[i]);
  return r;
}

template <class S>
HNum<S> hsub(const HNum<S>& x, const HNum<S>& y) {
  check_same(x, y);
  HNum<S> r = x;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = HNum<S>::R::sub(r.c[i], y.c[i]);
  return r;
}

template <class S>
HNum<S> hneg(const HNum<S>& x) {
  HNum<S> r = x;
  for (auto& v : r.c) v = HNum<S>::R::neg(v);
  return r;
}

template <class S>
HNum<S> hscale(const S& s, const HNum<S>& x) {
  HNum<S> r = x;
  for (auto& v : r.c) v = HNum<S>::R::mul(s, v);
  return r;
}

template <class S>
HNum<S> hmul(const HNum<S>& x, const HNum<S>& y) {
  check_same(x, y);
  using R = typename HNum<S>::R;
  HNum<S> r = HNum<S>::zero(*x.alg);
  int d = x.alg->dim();
  for (int i = 0; i < d; ++i) {
    if (R::is_zero(x.c[static_cast<size_t>(i)])) continue;
    for (int j = 0; j < d; ++j) {
      if (R::is_zero(y.c[static_cast<size_t>(j)])) continue;
      auto [k, sign] = x.alg->product(i, j);
      S term = R::mul(x.c[static_cast<size_t>(i)], y.c[static_cast<size_t>(j)]);
      if (sign < 0) term = R::neg(term);
      r.c[static_cast<size_t>(k)] = R::add(r.c[static_cast<size_t>(k)], std::move(term));
    }
  }
  return r;
}

template <class S>
HNum<S> hconj(const HNum<S>& x) {
  HNum<S> r = x;
  for (int i = 0; i < x.alg->dim(); ++i)
    if (x.alg->conj_sign(i) < 0) r.c[static_cast<size_t>(i)] = HNum<S>::R::neg(r.c[static_cast<size_t>(i)]);
  return r;
}

// exp of a pure grade-1 element v = sum c_g e_g:
//   cos(r) + (sin(r)/r) v,   r^2 = sum c_g^2,
// with the r -> 0 limit value 1.  When exactly one c_g is nonzero the
// even/odd symmetry collapses this to cos(c) + sin(c) e_g, which keeps
// symbolic results sqrt-free.
template <class S>
HNum<S> exp_pure(const HNum<S>& v) {
  using R = typename HNum<S>::R;
  const Algebra& a = *v.alg;
  std::vector<int> live;  // generator basis indices with nonzero coefficient
  for (int i = 0; i < a.dim(); ++i) {
    if (R::is_zero(v.c[static_cast<size_t>(i)])) continue;
    if (!a.is_generator(i))
      throw NotPureImaginary("exp argument has a component on " + a.basis_name(i));
    live.push_back(i);
  }
  if (live.empty()) return HNum<S>::scalar(a, R::one());
  if (live.size() == 1) {
    int g = live[0];
    const S& t = v.c[static_cast<size_t>(g)];
    HNum<S> r = HNum<S>::scalar(a, R::cos(t));
    r.c[static_cast<size_t>(g)] = R::sin(t);
    return r;
  }
  S r2 = R::zero();
  for (int g : live) {
    const S& t = v.c[static_cast<size_t>(g)];
    r2 = R::add(r2, R::mul(t, t));
  }
  S r = R::sqrt(r2);
  S k = R::div(R::sin(r), r);
  HNum<S> out = HNum<S>::scalar(a, R::cos(r));
  for (int g : live) out.c[static_cast<size_t>(g)] = R::mul(k, v.c[static_cast<size_t>(g)]);
  return out;
}

using HNumD = HNum<double>;
using HNumE = HNum<symexpr::ExprPtr>;

}  // namespace hyperforms::hyperalg
