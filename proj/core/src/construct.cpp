#include "hyperforms/hyperform/construct.hpp"

namespace hyperforms::hyperform {

using extcalc::ext_d;
using extcalc::Form;
using extcalc::HForm;
using extcalc::scalar_act;
using extcalc::scalar_form;
using extcalc::Side;
using hyperalg::Algebra;
using hyperalg::exp_pure;
using hyperalg::hconj;
using hyperalg::hmul;
using hyperalg::hneg;
using hyperalg::HNumE;
using symexpr::ExprPtr;

const char* b_variant_name(BVariant v) {
  return v == BVariant::Plain ? "plain" : "conjugated";
}

PotentialSet PotentialSet::generic(int m) {
  PotentialSet p;
  p.m = m;
  for (int k = 1; k <= 2 * m + 1; ++k) p.fs.push_back(symexpr::coordinate(k));
  return p;
}

namespace {

// d of a potential as a one-form on the chart
Form d_of(const PotentialSet& P, int k) { return ext_d(scalar_form(P.m, P.f(k))); }

}  // namespace

Form build_A(const PotentialSet& P) {
  Form a(P.m, 1);
  for (int i = 1; i <= P.m; ++i) {
    Form part = extcalc::scale(P.f(2 * i - 1), d_of(P, 2 * i));
    a = a + part;
  }
  return a + d_of(P, 2 * P.m + 1);
}

HNumE build_u(const Algebra& alg, const PotentialSet& P) {
  HNumE u = HNumE::zero(alg);
  for (int i = 1; i <= P.m; ++i) u.c[static_cast<size_t>(alg.generator(i))] = P.f(2 * i);
  return u;
}

HNumE build_Q(const Algebra& alg, const PotentialSet& P) {
  HNumE q = HNumE::zero(alg);
  q.c[0] = P.f(2 * P.m + 1);
  for (int i = 1; i <= P.m; ++i) q.c[static_cast<size_t>(alg.generator(i))] = P.f(2 * i - 1);
  return q;
}

HNumE build_F(const Algebra& alg, const PotentialSet& P) {
  return hmul(build_Q(alg, P), exp_pure(hneg(build_u(alg, P))));
}

HNumE build_Fbar(const Algebra& alg, const PotentialSet& P) {
  return hmul(hconj(build_Q(alg, P)), exp_pure(build_u(alg, P)));
}

HForm build_du(const Algebra& alg, const PotentialSet& P) {
  HForm du = HForm::zero(alg, P.m, 1);
  for (int i = 1; i <= P.m; ++i) {
    Form d = d_of(P, 2 * i);
    du.parts[static_cast<size_t>(alg.generator(i))] = std::move(d);
  }
  return du;
}

HForm build_dQ(const Algebra& alg, const PotentialSet& P) {
  return ext_d(HForm::from_value(alg, P.m, build_Q(alg, P)));
}

HForm build_dF_paper(const Algebra& alg, const PotentialSet& P) {
  HForm inner = build_B(alg, P, BVariant::Plain);
  return scalar_act(exp_pure(hneg(build_u(alg, P))), inner, Side::Right);
}

HForm build_B(const Algebra& alg, const PotentialSet& P, BVariant variant) {
  if (variant == BVariant::Plain) {
    HForm qdu = scalar_act(build_Q(alg, P), build_du(alg, P), Side::Left);
    return build_dQ(alg, P) - qdu;
  }
  return scalar_act(exp_pure(build_u(alg, P)), build_dF_paper(alg, P), Side::Left);
}

DualBundle extract_duals(const HForm& B) {
  const Algebra& alg = *B.alg;
  DualBundle out{hreal(B), {}, {}};
  for (int k = 1; k <= alg.m(); ++k) out.duals.push_back(hcomponent(B, alg.generator(k)));
  for (int b = 0; b < alg.dim(); ++b) {
    if (alg.grade(b) < 2 || B.parts[static_cast<size_t>(b)].empty()) continue;
    out.residue.emplace(b, B.parts[static_cast<size_t>(b)]);
  }
  return out;
}

std::vector<Form> printed_duals(const PotentialSet& P, bool strict) {
  // Each row: the lead differential index, then (sign, coefficient index,
  // differential index) triples.
  struct Term {
    int sign, fi, di;
  };
  std::vector<std::vector<Term>> rows;
  int m = P.m;
  if (m == 1) {
    rows = {{{1, 0, 1}, {-1, 3, 2}}};
  } else if (m == 3) {
    rows = {
        {{1, 0, 1}, {-1, 7, 2}, {-1, 3, 6}, {1, 5, 4}},
        {{1, 0, 3}, {-1, 7, 4}, {1, 1, 6}, {-1, 5, 2}},
        {{1, 0, 5}, {-1, 7, 6}, {-1, 1, 4}, {1, 3, 2}},
    };
  } else if (m == 7 && !strict) {
    rows = {
        {{1, 0, 1}, {-1, 15, 2}, {-1, 3, 6}, {1, 5, 4}, {-1, 7, 10}, {1, 9, 8}, {-1, 11, 14}, {1, 13, 12}},
        {{1, 0, 3}, {-1, 15, 4}, {1, 1, 6}, {-1, 5, 2}, {1, 7, 12}, {-1, 9, 14}, {1, 11, 8}, {-1, 13, 10}},
    };
  } else {
    throw PatternUnderspecified("no printed dual formulas for m=" + std::to_string(m));
  }
  std::vector<Form> out;
  for (auto& row : rows) {
    Form f(m, 1);
    for (auto& t : row) {
      Form d = d_of(P, t.di);
      if (t.fi != 0) d = extcalc::scale(P.f(t.fi), d);
      if (t.sign < 0) d = -d;
      f = f + d;
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace hyperforms::hyperform
