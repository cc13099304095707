#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hyperforms/hyperalg/algebra.hpp"
#include "hyperforms/hyperalg/hnum.hpp"
#include "hyperforms/symexpr/parse.hpp"
#include "hyperforms/symexpr/zero.hpp"

using namespace hyperforms::hyperalg;
using hyperforms::symexpr::SplitMix64;

namespace {

HNumD random_elem(const Algebra& a, SplitMix64& rng) {
  HNumD x = HNumD::zero(a);
  for (auto& v : x.c) v = rng.uniform(-2.0, 2.0);
  return x;
}

double norm2(const HNumD& x) { return hmul(x, hconj(x)).real_part(); }

double max_abs_diff(const HNumD& x, const HNumD& y) {
  double m = 0;
  for (size_t i = 0; i < x.c.size(); ++i) m = std::max(m, std::abs(x.c[i] - y.c[i]));
  return m;
}

// Independent product oracle: list the generators of both blades, sort by
// adjacent swaps (each swap flips the sign), then cancel equal adjacent
// pairs at -1 apiece.
std::pair<int, int> naive_blade_product(unsigned a, unsigned b, int m) {
  std::vector<int> gens;
  for (int g = 0; g < m; ++g)
    if (a & (1u << g)) gens.push_back(g);
  for (int g = 0; g < m; ++g)
    if (b & (1u << g)) gens.push_back(g);
  int sign = 1;
  for (size_t i = 1; i < gens.size(); ++i)  // insertion sort, count swaps
    for (size_t j = i; j > 0 && gens[j - 1] > gens[j]; --j) {
      std::swap(gens[j - 1], gens[j]);
      sign = -sign;
    }
  std::vector<int> kept;
  for (size_t i = 0; i < gens.size();) {
    if (i + 1 < gens.size() && gens[i] == gens[i + 1]) {
      sign = -sign;  // e_g e_g = -1
      i += 2;
    } else {
      kept.push_back(gens[i]);
      ++i;
    }
  }
  unsigned mask = 0;
  for (int g : kept) mask |= 1u << g;
  return {static_cast<int>(mask), sign};
}

}  // namespace

TEST_CASE("table shape and unit laws for every backend") {
  std::vector<Algebra> algs;
  for (int m : {1, 3, 7}) algs.push_back(Algebra::cayley_dickson(m));
  for (int m = 1; m <= 8; ++m) algs.push_back(Algebra::clifford(m));
  for (const Algebra& a : algs) {
    CAPTURE(backend_name(a.backend()));
    CAPTURE(a.m());
    for (int b = 0; b < a.dim(); ++b) {
      CHECK(a.product(0, b) == std::pair<int, int>{b, 1});
      CHECK(a.product(b, 0) == std::pair<int, int>{b, 1});
    }
    for (int g = 1; g <= a.m(); ++g) {
      int i = a.generator(g);
      CHECK(a.is_generator(i));
      CHECK(a.grade(i) == 1);
      CHECK(a.product(i, i) == std::pair<int, int>{0, -1});
    }
    // generators anticommute
    for (int g = 1; g <= a.m(); ++g)
      for (int h = 1; h <= a.m(); ++h) {
        if (g == h) continue;
        auto [k1, s1] = a.product(a.generator(g), a.generator(h));
        auto [k2, s2] = a.product(a.generator(h), a.generator(g));
        CHECK(k1 == k2);
        CHECK(s1 == -s2);
      }
  }
  CHECK(Algebra::cayley_dickson(1).dim() == 2);
  CHECK(Algebra::cayley_dickson(3).dim() == 4);
  CHECK(Algebra::cayley_dickson(7).dim() == 8);
  CHECK(Algebra::clifford(2).dim() == 4);
  CHECK(Algebra::clifford(8).dim() == 256);
}

TEST_CASE("unsupported sizes are rejected") {
  CHECK_THROWS_AS(Algebra::cayley_dickson(2), UnsupportedDimension);
  CHECK_THROWS_AS(Algebra::cayley_dickson(5), UnsupportedDimension);
  CHECK_THROWS_AS(Algebra::clifford(0), UnsupportedDimension);
  CHECK_THROWS_AS(Algebra::clifford(9), UnsupportedDimension);
}

TEST_CASE("quaternion table matches the textbook table") {
  Algebra q = Algebra::cayley_dickson(3);
  // (i*j) entries as signed basis indices, rows i=e0..e3
  int want_blade[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  int want_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(q.product(i, j) == std::pair<int, int>{want_blade[i][j], want_sign[i][j]});
    }
}

TEST_CASE("octonion products, hand-expanded spot checks") {
  Algebra o = Algebra::cayley_dickson(7);
  CHECK(o.product(1, 2) == std::pair<int, int>{3, 1});
  CHECK(o.product(1, 4) == std::pair<int, int>{5, 1});
  CHECK(o.product(1, 5) == std::pair<int, int>{4, -1});
  CHECK(o.product(2, 4) == std::pair<int, int>{6, 1});
  CHECK(o.product(3, 4) == std::pair<int, int>{7, 1});
  CHECK(o.product(1, 6) == std::pair<int, int>{7, -1});
}

TEST_CASE("clifford table agrees with the naive sort-and-cancel oracle") {
  for (int m : {1, 2, 3, 4, 5}) {
    Algebra a = Algebra::clifford(m);
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        auto got = a.product(i, j);
        auto want = naive_blade_product(static_cast<unsigned>(i), static_cast<unsigned>(j), m);
        CAPTURE(m);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(got == want);
      }
  }
}

TEST_CASE("basis names") {
  Algebra o = Algebra::cayley_dickson(7);
  CHECK(o.basis_name(0) == "1");
  CHECK(o.basis_name(5) == "e5");
  Algebra c = Algebra::clifford(3);
  CHECK(c.basis_name(0) == "1");
  CHECK(c.basis_name(1) == "e1");
  CHECK(c.basis_name(3) == "e12");
  CHECK(c.basis_name(7) == "e123");
  CHECK(c.grade(7) == 3);
}

TEST_CASE("associativity on basis triples where it must hold") {
  auto assoc_on_basis = [](const Algebra& a) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        for (int k = 0; k < a.dim(); ++k) {
          auto [ij, s1] = a.product(i, j);
          auto [l, s2] = a.product(ij, k);
          auto [jk, t1] = a.product(j, k);
          auto [r, t2] = a.product(i, jk);
          if (l != r || s1 * s2 != t1 * t2) return false;
        }
    return true;
  };
  CHECK(assoc_on_basis(Algebra::cayley_dickson(1)));
  CHECK(assoc_on_basis(Algebra::cayley_dickson(3)));
  CHECK_FALSE(assoc_on_basis(Algebra::cayley_dickson(7)));  // octonions are not associative
  for (int m = 1; m <= 8; ++m) CHECK(assoc_on_basis(Algebra::clifford(m)));
}

TEST_CASE("quaternion product of mixed elements") {
  Algebra q = Algebra::cayley_dickson(3);
  HNumD x = HNumD::scalar(q, 1.0);
  x.c[1] = 1.0;  // 1 + e1
  HNumD y = HNumD::scalar(q, 1.0);
  y.c[2] = 1.0;  // 1 + e2
  HNumD p = hmul(x, y);  // 1 + e1 + e2 + e3
  CHECK(p.c[0] == doctest::Approx(1));
  CHECK(p.c[1] == doctest::Approx(1));
  CHECK(p.c[2] == doctest::Approx(1));
  CHECK(p.c[3] == doctest::Approx(1));
  HNumD e1 = HNumD::basis(q, 1), e2 = HNumD::basis(q, 2), e3 = HNumD::basis(q, 3);
  CHECK(hmul(hmul(e1, e2), e3).real_part() == doctest::Approx(-1));
}

TEST_CASE("mul distributes and respects the unit, numerically") {
  for (Algebra a : {Algebra::cayley_dickson(7), Algebra::clifford(4)}) {
    SplitMix64 rng(2024);
    for (int t = 0; t < 50; ++t) {
      HNumD x = random_elem(a, rng), y = random_elem(a, rng), z = random_elem(a, rng);
      CHECK(max_abs_diff(hmul(HNumD::scalar(a, 1.0), x), x) == 0.0);
      CHECK(max_abs_diff(hmul(hadd(x, y), z), hadd(hmul(x, z), hmul(y, z))) < 1e-12);
      CHECK(max_abs_diff(hmul(z, hadd(x, y)), hadd(hmul(z, x), hmul(z, y))) < 1e-12);
    }
  }
}

TEST_CASE("conjugation: involution, grade signs, anti-automorphism") {
  Algebra c = Algebra::clifford(4);
  // grade pattern +,-,-,+ repeating
  CHECK(c.conj_sign(0) == 1);
  CHECK(c.conj_sign(1) == -1);   // grade 1
  CHECK(c.conj_sign(3) == -1);   // grade 2
  CHECK(c.conj_sign(7) == 1);    // grade 3
  CHECK(c.conj_sign(15) == 1);   // grade 4

  SplitMix64 rng(5);
  for (Algebra a : {Algebra::cayley_dickson(3), Algebra::cayley_dickson(7), Algebra::clifford(3)}) {
    for (int t = 0; t < 20; ++t) {
      HNumD x = random_elem(a, rng), y = random_elem(a, rng);
      CHECK(max_abs_diff(hconj(hconj(x)), x) == 0.0);
      CHECK(max_abs_diff(hconj(hmul(x, y)), hmul(hconj(y), hconj(x))) < 1e-12);
    }
  }
}

TEST_CASE("norm composition and scalar self-products") {
  SplitMix64 rng(17);
  for (int m : {1, 3, 7}) {
    Algebra a = Algebra::cayley_dickson(m);
    for (int t = 0; t < 200; ++t) {
      HNumD x = random_elem(a, rng), y = random_elem(a, rng);
      double lhs = norm2(hmul(x, y)), rhs = norm2(x) * norm2(y);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
      HNumD s = hmul(x, hconj(x));
      for (size_t i = 1; i < s.c.size(); ++i) CHECK(std::abs(s.c[i]) < 1e-12);
    }
  }
}

TEST_CASE("octonions satisfy the alternative laws") {
  Algebra a = Algebra::cayley_dickson(7);
  SplitMix64 rng(31);
  for (int t = 0; t < 200; ++t) {
    HNumD x = random_elem(a, rng), y = random_elem(a, rng);
    CHECK(max_abs_diff(hmul(x, hmul(x, y)), hmul(hmul(x, x), y)) < 1e-12);
    CHECK(max_abs_diff(hmul(hmul(y, x), x), hmul(y, hmul(x, x))) < 1e-12);
  }
}

TEST_CASE("exp of pure elements, numeric") {
  Algebra q = Algebra::cayley_dickson(3);
  CHECK(max_abs_diff(exp_pure(HNumD::zero(q)), HNumD::scalar(q, 1.0)) == 0.0);

  HNumD v = HNumD::zero(q);
  v.c[1] = std::acos(-1.0);  // pi * e1
  HNumD e = exp_pure(v);
  CHECK(e.c[0] == doctest::Approx(-1.0));
  for (int i = 1; i < 4; ++i) CHECK(std::abs(e.c[i]) < 1e-12);

  SplitMix64 rng(11);
  for (Algebra a : {Algebra::cayley_dickson(3), Algebra::cayley_dickson(7), Algebra::clifford(3)}) {
    for (int t = 0; t < 40; ++t) {
      HNumD u = HNumD::zero(a);
      for (int g = 1; g <= a.m(); ++g) u.c[static_cast<size_t>(a.generator(g))] = rng.uniform(-2.0, 2.0);
      HNumD E = exp_pure(u);
      CHECK(std::abs(norm2(E) - 1.0) < 1e-12);
      CHECK(max_abs_diff(hmul(E, exp_pure(hneg(u))), HNumD::scalar(a, 1.0)) < 1e-12);
    }
  }
}

TEST_CASE("exp rejects non-pure arguments") {
  Algebra q = Algebra::cayley_dickson(3);
  CHECK_THROWS_AS(exp_pure(HNumD::scalar(q, 1.0)), NotPureImaginary);
  Algebra c = Algebra::clifford(2);
  HNumD b = HNumD::zero(c);
  b.c[3] = 1.0;  // grade-2 blade
  CHECK_THROWS_AS(exp_pure(b), NotPureImaginary);
}

TEST_CASE("exp of a single symbolic axis stays closed-form") {
  using namespace hyperforms::symexpr;
  Algebra q = Algebra::cayley_dickson(3);
  HNumE v = HNumE::zero(q);
  v.c[1] = coordinate(1);
  HNumE e = exp_pure(v);
  CHECK(to_string(e.c[0]) == "cos(f1)");
  CHECK(to_string(e.c[1]) == "sin(f1)");
  CHECK(is_literal_zero(e.c[2]));
  CHECK(is_literal_zero(e.c[3]));
}

TEST_CASE("exp inverse holds symbolically with several axes") {
  using namespace hyperforms::symexpr;
  for (int m : {1, 3}) {
    Algebra a = Algebra::cayley_dickson(m);
    HNumE u = HNumE::zero(a);
    for (int g = 1; g <= m; ++g) u.c[static_cast<size_t>(g)] = coordinate(2 * g);
    HNumE prod = hmul(exp_pure(u), exp_pure(hneg(u)));
    for (int i = 0; i < a.dim(); ++i) {
      auto want = i == 0 ? sub(prod.c[static_cast<size_t>(i)], constant(1)) : prod.c[static_cast<size_t>(i)];
      auto z = decide_zero(want, 9, 25, 2 * m + 1);
      CAPTURE(m);
      CAPTURE(i);
      CHECK(z.status == ZeroStatus::Zero);
    }
  }
}

TEST_CASE("mismatched algebras are rejected") {
  Algebra q = Algebra::cayley_dickson(3);
  Algebra c = Algebra::clifford(3);
  CHECK_THROWS_AS(hmul(HNumD::scalar(q, 1.0), HNumD::scalar(c, 1.0)), SpecMismatch);
  CHECK_THROWS_AS(HNumD::scalar(q, 1.0).component(17), UnknownBlade);
}
