#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperforms::hyperalg {

enum class Backend { CayleyDickson, Clifford };

const char* backend_name(Backend b);

class UnsupportedDimension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite-dimensional real algebra with a distinguished basis whose
// pairwise products are single signed basis elements:
//
//   cayley_dickson(m), m in {1,3,7}:  dim m+1 (complex, quaternion,
//     octonion), built by recursive doubling with the convention
//     (a,b)(c,d) = (ac - d~b, da + bc~)  where ~ is conjugation.
//   clifford(m), 1 <= m <= 8:  Cl(0,m), dim 2^m, blades as bitmasks,
//     generators anticommute and square to -1.
//
// Basis index 0 is always the unit.  Generators are the m imaginary
// units e_1..e_m; every basis product e_i e_j is sign * e_k.
class Algebra {
 public:
  static Algebra cayley_dickson(int m);
  static Algebra clifford(int m);
  static Algebra make(Backend b, int m);

  Backend backend() const { return backend_; }
  int m() const { return m_; }
  int dim() const { return dim_; }

  // e_i * e_j = sign * e_k, returned as (k, sign)
  std::pair<int, int> product(int i, int j) const {
    return {table_blade_[i * dim_ + j], table_sign_[i * dim_ + j]};
  }

  // basis index of the g-th generator, 1 <= g <= m
  int generator(int g) const;
  bool is_generator(int i) const;

  // number of generators multiplied into basis element i (0 for the unit,
  // 1 for generators; higher grades exist only for the clifford backend)
  int grade(int i) const;

  // sign of basis element i under conjugation
  int conj_sign(int i) const;

  std::string basis_name(int i) const;

  bool operator==(const Algebra& o) const {
    return backend_ == o.backend_ && m_ == o.m_;
  }

 private:
  Algebra() = default;
  void fill_table();

  Backend backend_ = Backend::CayleyDickson;
  int m_ = 0;
  int dim_ = 0;
  std::vector<std::int16_t> table_blade_;
  std::vector<std::int8_t> table_sign_;
};

}  // namespace hyperforms::hyperalg
