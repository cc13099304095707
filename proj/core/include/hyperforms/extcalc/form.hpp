#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperforms/symexpr/expr.hpp"

namespace hyperforms::extcalc {

class DegreeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using IndexTuple = std::vector<int>;  // strictly increasing coordinate indices

// Differential form of fixed degree over coordinates f1..f_{2m+1} with
// expression coefficients.  Sparse: only nonzero terms are stored, and a
// coefficient that the polynomial canonicalizer proves zero is pruned on
// insertion.
class Form {
 public:
  Form(int m, int degree) : m_(m), degree_(degree) {}

  int m() const { return m_; }
  int degree() const { return degree_; }
  int rank() const { return 2 * m_ + 1; }  // number of coordinates

  const std::map<IndexTuple, symexpr::ExprPtr>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Adds coeff * df_{idx[0]} ^ ... ^ df_{idx[p-1]}.  Indices need not be
  // sorted: sorting happens here and contributes the permutation sign;
  // a repeated index drops the term.
  void add_term(IndexTuple idx, symexpr::ExprPtr coeff);

  symexpr::ExprPtr coefficient(const IndexTuple& idx) const;

 private:
  int m_;
  int degree_;
  std::map<IndexTuple, symexpr::ExprPtr> terms_;
};

Form operator+(const Form& a, const Form& b);  // DegreeMismatch when degrees differ
Form operator-(const Form& a, const Form& b);
Form operator-(const Form& a);
Form scale(const symexpr::ExprPtr& c, const Form& a);        // c * a, c on the left
Form scale_right(const Form& a, const symexpr::ExprPtr& c);  // a * c

// Graded wedge product; bilinear, repeated indices vanish.
Form wedge(const Form& a, const Form& b);

// Exterior derivative: acts on coefficients with exact partials.
Form ext_d(const Form& a);

// d f_k as a one-form, and f_k as a zero-form.
Form d_coord(int m, int k);
Form coord_form(int m, int k);
Form zero_form(int m, int degree);
Form scalar_form(int m, symexpr::ExprPtr c);  // degree 0

// "f1 df2^df3 + ..." (text) rendering; "0" for the empty form.
std::string render_form(const Form& a);

}  // namespace hyperforms::extcalc
