#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "hyperforms/extcalc/hform.hpp"

namespace hyperforms::hyperform {

class PatternUnderspecified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The 2m+1 scalar potentials.  The generic instance is the coordinate
// chart itself; substituted instances exercise special cases.
struct PotentialSet {
  int m = 1;
  std::vector<symexpr::ExprPtr> fs;  // fs[k-1] stands in for f_k

  static PotentialSet generic(int m);

  const symexpr::ExprPtr& f(int k) const { return fs[static_cast<size_t>(k - 1)]; }
};

enum class BVariant { Plain, Conjugated };

const char* b_variant_name(BVariant v);

// A = sum f_{2i-1} d f_{2i} + d f_{2m+1}
extcalc::Form build_A(const PotentialSet& P);

// u = sum e_i f_{2i}         (pure grade-1)
hyperalg::HNumE build_u(const hyperalg::Algebra& alg, const PotentialSet& P);

// Q = f_{2m+1} + sum e_i f_{2i-1}
hyperalg::HNumE build_Q(const hyperalg::Algebra& alg, const PotentialSet& P);

// F = Q exp(-u),  Fbar = conj(Q) exp(u), factor order as written
hyperalg::HNumE build_F(const hyperalg::Algebra& alg, const PotentialSet& P);
hyperalg::HNumE build_Fbar(const hyperalg::Algebra& alg, const PotentialSet& P);

// du = sum e_i d f_{2i};  dQ = blade-wise d of Q
extcalc::HForm build_du(const hyperalg::Algebra& alg, const PotentialSet& P);
extcalc::HForm build_dQ(const hyperalg::Algebra& alg, const PotentialSet& P);

// The one-form (dQ - Q du) exp(-u).  This is a transcribed formula, kept
// distinct from the true coefficientwise exterior derivative of F: the
// two differ whenever u and du fail to commute (measured, not assumed;
// see the claim registry).
extcalc::HForm build_dF_paper(const hyperalg::Algebra& alg, const PotentialSet& P);

// Plain:       B = dQ - Q du            (exponentials cancelled)
// Conjugated:  B = exp(u) ((dQ - Q du) exp(-u)), grouped left-to-right
extcalc::HForm build_B(const hyperalg::Algebra& alg, const PotentialSet& P, BVariant variant);

struct DualBundle {
  extcalc::Form A;                      // scalar part
  std::vector<extcalc::Form> duals;     // duals[k-1] on generator e_k
  std::map<int, extcalc::Form> residue; // grade >= 2 blades with leftovers
};

DualBundle extract_duals(const extcalc::HForm& B);

// The dual formulas exactly as printed: complete for m in {1,3}; for
// m = 7 only the first two are printed (their trailing "+ -" is
// transcribed as "-") and only those are returned, in lenient mode.
// Other m have no printed pattern at all.
std::vector<extcalc::Form> printed_duals(const PotentialSet& P, bool strict = true);

}  // namespace hyperforms::hyperform
