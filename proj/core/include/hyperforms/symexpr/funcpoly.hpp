#pragma once

// Extended canonicalizer: represents an expression as a fraction of
// polynomials over "atoms" (coordinates plus interned sin/cos/sqrt
// subtrees), with the rewrites
//
//     sin(X)^2   ->  1 - cos(X)^2
//     sqrt(X)^2  ->  X        (when X is polynomial over earlier atoms)
//
// applied to exhaustion.  A numerator that reduces to the empty
// polynomial proves the expression vanishes wherever it is defined;
// anything else is inconclusive and callers fall back to sampling.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperforms/symexpr/poly.hpp"

namespace hyperforms::symexpr {

enum class AtomKind { Coord, Sin, Cos, Sqrt };

// Polynomials here index atoms, not coordinates.
struct Frac {
  Polynomial num;
  Polynomial den;  // never the zero polynomial
};

class FuncNormalizer {
 public:
  // Fraction form of e, or nullopt when the rewriting budget runs out
  // or a denominator proves identically zero.
  std::optional<Frac> normalize(const ExprPtr& e);

  // Rewrite sin^2 / sqrt^2 factors away.  Sound on its own; exposed for
  // normalize() internals and tests.
  Polynomial reduce(Polynomial p);

  bool failed() const { return failed_; }

 private:
  struct Atom {
    AtomKind kind;
    int coord_index = 0;   // Coord only
    std::string arg_key;   // function atoms: canonical key of the argument
    Frac arg;              // function atoms: the argument itself
  };

  std::vector<Atom> atoms_;
  std::map<std::string, int> by_key_;
  long steps_left_ = 20000;
  bool failed_ = false;

  int intern_coord(int index);
  int intern_func(AtomKind kind, const Frac& arg);
  int find_or_make(AtomKind kind, const Atom& proto, const std::string& key);
  std::optional<Frac> make(Polynomial num, Polynomial den);
  std::string frac_key(const Frac& f) const;
};

// True only when the extended canonical form proves e vanishes
// everywhere it is defined.
bool func_zero(const ExprPtr& e);

}  // namespace hyperforms::symexpr
