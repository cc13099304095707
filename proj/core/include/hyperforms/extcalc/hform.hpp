#pragma once

#include "hyperforms/extcalc/form.hpp"
#include "hyperforms/hyperalg/hnum.hpp"

namespace hyperforms::extcalc {

// Algebra-valued form: one Form per basis element of the algebra.  Keeps
// every blade (grades >= 2 included) so products that escape the
// scalar+generator span stay visible.
struct HForm {
  const hyperalg::Algebra* alg = nullptr;
  int degree = 0;
  std::vector<Form> parts;

  static HForm zero(const hyperalg::Algebra& a, int m, int degree);

  // degree-0 form carrying the value x
  static HForm from_value(const hyperalg::Algebra& a, int m,
                          const hyperalg::HNum<symexpr::ExprPtr>& x);

  int m() const { return parts.front().m(); }

  const Form& part(int blade) const;
};

HForm operator+(const HForm& x, const HForm& y);
HForm operator-(const HForm& x, const HForm& y);
HForm operator-(const HForm& x);

// Graded product: algebra product on blades, wedge on form parts, left
// factor's coefficients kept on the left.
HForm hwedge(const HForm& x, const HForm& y);

enum class Side { Left, Right };

// Multiply by an algebra-valued function (degree-0 factor) on the chosen side.
HForm scalar_act(const hyperalg::HNum<symexpr::ExprPtr>& q, const HForm& x, Side side);

HForm ext_d(const HForm& x);

const Form& hreal(const HForm& x);
const Form& hcomponent(const HForm& x, int blade);

std::string render_hform(const HForm& x);

}  // namespace hyperforms::extcalc
