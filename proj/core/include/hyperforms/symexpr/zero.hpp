#pragma once

#include <cstdint>
#include <optional>

#include "hyperforms/symexpr/expr.hpp"

namespace hyperforms::symexpr {

// Deterministic 64-bit generator; same seed gives the same stream on
// every platform, so witness points in reports are reproducible.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi); uses the top 53 bits so the mapping is exact.
  double uniform(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }
};

enum class ZeroStatus { Zero, NonZero, ProbablyZero, Unknown };

struct ZeroVerdict {
  ZeroStatus status;
  std::optional<Point> witness;  // NonZero only
  double value = 0.0;            // evaluation at the witness
};

const char* zero_status_name(ZeroStatus s);

// Strict zero test: Zero only via polynomial canonical form; otherwise
// samples `trials` points in [-2,2]^dims (dims < 0 means "as many
// coordinates as e mentions"), skipping points where evaluation is
// undefined.  |value| > 1e-9 at some point gives NonZero with that
// witness; all sampled values small gives ProbablyZero; no point
// evaluable gives Unknown.
ZeroVerdict is_zero(const ExprPtr& e, std::uint64_t seed, int trials, int dims = -1);

// Extended zero test: additionally proves Zero through the
// sin^2/sqrt^2-aware fraction form.  Same sampling fallback.
ZeroVerdict decide_zero(const ExprPtr& e, std::uint64_t seed, int trials, int dims = -1);

// Central finite difference of e in coordinate `coord` at p.
double fd_diff(const ExprPtr& e, int coord, const Point& p, double h = 1e-5);

}  // namespace hyperforms::symexpr
