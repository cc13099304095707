#include "hyperforms/symexpr/funcpoly.hpp"

#include <deque>

namespace hyperforms::symexpr {

namespace {

const char* atom_name(AtomKind k) {
  switch (k) {
    case AtomKind::Sin: return "sin";
    case AtomKind::Cos: return "cos";
    case AtomKind::Sqrt: return "sqrt";
    case AtomKind::Coord: return "x";
  }
  return "?";
}

}  // namespace

std::string FuncNormalizer::frac_key(const Frac& f) const {
  return f.num.str() + "|" + f.den.str();
}

int FuncNormalizer::find_or_make(AtomKind kind, const Atom& proto, const std::string& key) {
  (void)kind;
  auto it = by_key_.find(key);
  if (it != by_key_.end()) return it->second;
  int id = static_cast<int>(atoms_.size());
  atoms_.push_back(proto);
  by_key_.emplace(key, id);
  return id;
}

int FuncNormalizer::intern_coord(int index) {
  Atom a;
  a.kind = AtomKind::Coord;
  a.coord_index = index;
  return find_or_make(AtomKind::Coord, a, "x" + std::to_string(index));
}

int FuncNormalizer::intern_func(AtomKind kind, const Frac& arg) {
  Atom a;
  a.kind = kind;
  a.arg_key = frac_key(arg);
  a.arg = arg;
  return find_or_make(kind, a, std::string(atom_name(kind)) + "(" + a.arg_key + ")");
}

Polynomial FuncNormalizer::reduce(Polynomial p) {
  Polynomial out;
  std::deque<std::pair<Monomial, Rational>> work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    if (--steps_left_ < 0) {
      failed_ = true;
      return Polynomial{};
    }
    auto [mono, coeff] = work.front();
    work.pop_front();

    int hit = -1;       // position in mono.factors of a reducible factor
    bool is_sin = false;
    for (size_t i = 0; i < mono.factors.size(); ++i) {
      auto [id, e] = mono.factors[i];
      if (e < 2) continue;
      const Atom& at = atoms_[id];
      if (at.kind == AtomKind::Sin) {
        hit = static_cast<int>(i);
        is_sin = true;
        break;
      }
      if (at.kind == AtomKind::Sqrt && at.arg.den.is_constant()) {
        hit = static_cast<int>(i);
        break;
      }
    }

    if (hit < 0) {
      out.add_term(mono, coeff);
      continue;
    }

    Monomial base = mono;
    if ((base.factors[hit].second -= 2) == 0)
      base.factors.erase(base.factors.begin() + hit);
    Polynomial base_poly;
    base_poly.add_term(base, coeff);

    Polynomial repl;
    const Atom at = atoms_[mono.factors[hit].first];  // copy: atoms_ may grow below
    if (is_sin) {
      int cid = intern_func(AtomKind::Cos, at.arg);
      repl = Polynomial::constant(1) - Polynomial::coordinate(cid).pow(2);
    } else {
      Rational dc;
      at.arg.den.is_constant(&dc);
      repl = at.arg.num.scaled(Rational(1) / dc);
    }

    Polynomial expanded = base_poly * repl;
    for (auto& [m2, c2] : expanded.terms()) work.emplace_back(m2, c2);
  }
  return out;
}

std::optional<Frac> FuncNormalizer::make(Polynomial num, Polynomial den) {
  num = reduce(std::move(num));
  den = reduce(std::move(den));
  if (failed_ || den.is_zero()) return std::nullopt;
  return Frac{std::move(num), std::move(den)};
}

std::optional<Frac> FuncNormalizer::normalize(const ExprPtr& e) {
  if (failed_) return std::nullopt;
  const Polynomial one = Polynomial::constant(1);
  switch (e->kind) {
    case ExprKind::Constant:
      return Frac{Polynomial::constant(e->value), one};
    case ExprKind::Coordinate:
      return Frac{Polynomial::coordinate(intern_coord(e->index)), one};
    case ExprKind::Add:
    case ExprKind::Sub: {
      auto a = normalize(e->lhs), b = normalize(e->rhs);
      if (!a || !b) return std::nullopt;
      Polynomial bn = e->kind == ExprKind::Add ? b->num : -b->num;
      if (a->den == b->den) return make(a->num + bn, a->den);
      return make(a->num * b->den + bn * a->den, a->den * b->den);
    }
    case ExprKind::Mul: {
      auto a = normalize(e->lhs), b = normalize(e->rhs);
      if (!a || !b) return std::nullopt;
      return make(a->num * b->num, a->den * b->den);
    }
    case ExprKind::Div: {
      auto a = normalize(e->lhs), b = normalize(e->rhs);
      if (!a || !b) return std::nullopt;
      return make(a->num * b->den, a->den * b->num);
    }
    case ExprKind::Pow: {
      auto a = normalize(e->lhs);
      if (!a) return std::nullopt;
      int k = e->exponent;
      if (k >= 0) return make(a->num.pow(k), a->den.pow(k));
      return make(a->den.pow(-k), a->num.pow(-k));
    }
    case ExprKind::Neg: {
      auto a = normalize(e->lhs);
      if (!a) return std::nullopt;
      return Frac{-a->num, a->den};
    }
    case ExprKind::Sin:
    case ExprKind::Cos:
    case ExprKind::Sqrt: {
      auto a = normalize(e->lhs);
      if (!a) return std::nullopt;
      AtomKind k = e->kind == ExprKind::Sin   ? AtomKind::Sin
                   : e->kind == ExprKind::Cos ? AtomKind::Cos
                                              : AtomKind::Sqrt;
      // Even/odd parity: flip the argument sign to a canonical choice so
      // sin(-X) lands on the sin(X) atom with a -1 factor and cos(-X) on
      // cos(X).  (sqrt has no such symmetry.)
      Frac arg = *a;
      int sign = 1;
      if (k != AtomKind::Sqrt && !arg.num.is_zero() &&
          arg.num.terms().rbegin()->second < 0) {
        arg.num = -arg.num;
        if (k == AtomKind::Sin) sign = -1;
      }
      Polynomial atom = Polynomial::coordinate(intern_func(k, arg));
      return Frac{sign < 0 ? -atom : atom, one};
    }
  }
  return std::nullopt;
}

bool func_zero(const ExprPtr& e) {
  FuncNormalizer n;
  auto f = n.normalize(e);
  if (!f || n.failed()) return false;
  return f->num.is_zero();
}

}  // namespace hyperforms::symexpr
