#include "hyperforms/hyperalg/algebra.hpp"

#include <bit>
#include <tuple>

namespace hyperforms::hyperalg {

const char* backend_name(Backend b) {
  return b == Backend::CayleyDickson ? "cayley_dickson" : "clifford";
}

namespace {

// Signed basis product under recursive doubling, (a,b)(c,d) = (ac - d~b, da + bc~).
// Conjugation at every level fixes e_0 and negates the rest.
std::pair<int, int> cd_product(int i, int j, int n) {
  if (n == 1) return {0, 1};
  int h = n / 2;
  if (i < h && j < h) return cd_product(i, j, h);
  if (i < h && j >= h) {
    // (a,0)(0,d) = (0, da)
    auto [k, s] = cd_product(j - h, i, h);
    return {k + h, s};
  }
  if (i >= h && j < h) {
    // (0,b)(c,0) = (0, b c~)
    auto [k, s] = cd_product(i - h, j, h);
    return {k + h, j == 0 ? s : -s};
  }
  // (0,b)(0,d) = (-d~ b, 0)
  auto [k, s] = cd_product(j - h, i - h, h);
  return {k, (j - h) == 0 ? -s : s};
}

// Sign from commuting the generators of blade a past those of blade b
// into canonical ascending order.
int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

}  // namespace

Algebra Algebra::cayley_dickson(int m) {
  if (m != 1 && m != 3 && m != 7)
    throw UnsupportedDimension("cayley_dickson needs m in {1,3,7}, got m=" + std::to_string(m));
  Algebra a;
  a.backend_ = Backend::CayleyDickson;
  a.m_ = m;
  a.dim_ = m + 1;
  a.fill_table();
  return a;
}

Algebra Algebra::clifford(int m) {
  if (m < 1 || m > 8)
    throw UnsupportedDimension("clifford needs 1 <= m <= 8, got m=" + std::to_string(m));
  Algebra a;
  a.backend_ = Backend::Clifford;
  a.m_ = m;
  a.dim_ = 1 << m;
  a.fill_table();
  return a;
}

Algebra Algebra::make(Backend b, int m) {
  return b == Backend::CayleyDickson ? cayley_dickson(m) : clifford(m);
}

void Algebra::fill_table() {
  table_blade_.assign(static_cast<size_t>(dim_) * dim_, 0);
  table_sign_.assign(static_cast<size_t>(dim_) * dim_, 1);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      int k, s;
      if (backend_ == Backend::CayleyDickson) {
        std::tie(k, s) = cd_product(i, j, dim_);
      } else {
        unsigned a = static_cast<unsigned>(i), b = static_cast<unsigned>(j);
        s = reorder_sign(a, b);
        if (std::popcount(a & b) & 1) s = -s;  // shared generators square to -1
        k = static_cast<int>(a ^ b);
      }
      table_blade_[i * dim_ + j] = static_cast<std::int16_t>(k);
      table_sign_[i * dim_ + j] = static_cast<std::int8_t>(s);
    }
  }
}

int Algebra::generator(int g) const {
  if (backend_ == Backend::CayleyDickson) return g;
  return 1 << (g - 1);
}

bool Algebra::is_generator(int i) const {
  if (backend_ == Backend::CayleyDickson) return i >= 1 && i <= m_;
  return i > 0 && std::popcount(static_cast<unsigned>(i)) == 1;
}

int Algebra::grade(int i) const {
  if (backend_ == Backend::CayleyDickson) return i == 0 ? 0 : 1;
  return std::popcount(static_cast<unsigned>(i));
}

int Algebra::conj_sign(int i) const {
  if (backend_ == Backend::CayleyDickson) return i == 0 ? 1 : -1;
  int g = grade(i);
  return (g * (g + 1) / 2) % 2 ? -1 : 1;
}

std::string Algebra::basis_name(int i) const {
  if (i == 0) return "1";
  if (backend_ == Backend::CayleyDickson) return "e" + std::to_string(i);
  std::string s = "e";
  for (int g = 1; g <= m_; ++g)
    if (i & (1 << (g - 1))) s += std::to_string(g);
  return s;
}

}  // namespace hyperforms::hyperalg
