#include "hyperforms/symexpr/zero.hpp"

#include <algorithm>
#include <cmath>

#include "hyperforms/symexpr/funcpoly.hpp"
#include "hyperforms/symexpr/poly.hpp"

namespace hyperforms::symexpr {

const char* zero_status_name(ZeroStatus s) {
  switch (s) {
    case ZeroStatus::Zero: return "Zero";
    case ZeroStatus::NonZero: return "NonZero";
    case ZeroStatus::ProbablyZero: return "ProbablyZero";
    case ZeroStatus::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

constexpr double kWitnessTol = 1e-9;

ZeroVerdict sample(const ExprPtr& e, std::uint64_t seed, int trials, int dims) {
  if (dims < 0) dims = std::max(1, max_coordinate(e));
  SplitMix64 rng(seed);
  bool any_defined = false;
  double best_abs = -1.0;
  Point best_point;
  double best_value = 0.0;
  for (int t = 0; t < trials; ++t) {
    Point p(static_cast<size_t>(dims));
    for (auto& x : p) x = rng.uniform(-2.0, 2.0);
    double v;
    try {
      v = eval(e, p);
    } catch (const DomainError&) {
      continue;
    }
    any_defined = true;
    if (std::abs(v) > best_abs) {
      best_abs = std::abs(v);
      best_point = p;
      best_value = v;
    }
    if (std::abs(v) > kWitnessTol)
      return {ZeroStatus::NonZero, std::move(p), v};
  }
  if (!any_defined) return {ZeroStatus::Unknown, std::nullopt, 0.0};
  // remember the largest residual seen so callers can report it
  return {ZeroStatus::ProbablyZero, std::move(best_point), best_value};
}

}  // namespace

ZeroVerdict is_zero(const ExprPtr& e, std::uint64_t seed, int trials, int dims) {
  if (auto p = poly_normalize(e)) {
    if (p->is_zero()) return {ZeroStatus::Zero, std::nullopt, 0.0};
    // A nonzero polynomial is a nonzero function; sampling just finds a witness.
    ZeroVerdict v = sample(e, seed, trials, dims);
    if (v.status == ZeroStatus::ProbablyZero) v.status = ZeroStatus::NonZero;
    return v;
  }
  return sample(e, seed, trials, dims);
}

ZeroVerdict decide_zero(const ExprPtr& e, std::uint64_t seed, int trials, int dims) {
  if (auto p = poly_normalize(e)) {
    if (p->is_zero()) return {ZeroStatus::Zero, std::nullopt, 0.0};
    ZeroVerdict v = sample(e, seed, trials, dims);
    if (v.status == ZeroStatus::ProbablyZero) v.status = ZeroStatus::NonZero;
    return v;
  }
  if (func_zero(e)) return {ZeroStatus::Zero, std::nullopt, 0.0};
  return sample(e, seed, trials, dims);
}

double fd_diff(const ExprPtr& e, int coord, const Point& p, double h) {
  Point hi = p, lo = p;
  size_t i = static_cast<size_t>(coord - 1);
  if (i >= hi.size()) return 0.0;  // e cannot depend on an absent coordinate
  hi[i] += h;
  lo[i] -= h;
  return (eval(e, hi) - eval(e, lo)) / (2.0 * h);
}

}  // namespace hyperforms::symexpr
