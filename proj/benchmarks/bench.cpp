#include <benchmark/benchmark.h>

#include "hyperforms/claims/claims.hpp"
#include "hyperforms/symexpr/parse.hpp"
#include "hyperforms/symexpr/poly.hpp"

namespace cl = hyperforms::claims;
namespace hf = hyperforms::hyperform;
namespace ha = hyperforms::hyperalg;
namespace se = hyperforms::symexpr;
namespace ec = hyperforms::extcalc;

namespace {

ha::HNumD random_element(const ha::Algebra& a, se::SplitMix64& rng) {
  ha::HNumD x = ha::HNumD::zero(a);
  for (auto& c : x.c) c = rng.uniform(-2.0, 2.0);
  return x;
}

void BM_product_numeric(benchmark::State& state, ha::Algebra alg) {
  se::SplitMix64 rng(1);
  ha::HNumD x = random_element(alg, rng), y = random_element(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hmul(x, y));
}
BENCHMARK_CAPTURE(BM_product_numeric, quaternion, ha::Algebra::cayley_dickson(3));
BENCHMARK_CAPTURE(BM_product_numeric, octonion, ha::Algebra::cayley_dickson(7));
BENCHMARK_CAPTURE(BM_product_numeric, clifford3, ha::Algebra::clifford(3));
BENCHMARK_CAPTURE(BM_product_numeric, clifford8, ha::Algebra::clifford(8));

void BM_exp_pure(benchmark::State& state) {
  auto alg = ha::Algebra::cayley_dickson(static_cast<int>(state.range(0)));
  se::SplitMix64 rng(2);
  ha::HNumD v = ha::HNumD::zero(alg);
  for (int g = 1; g <= alg.m(); ++g)
    v.c[static_cast<size_t>(alg.generator(g))] = rng.uniform(-2.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(exp_pure(v));
}
BENCHMARK(BM_exp_pure)->Arg(1)->Arg(3)->Arg(7);

void BM_poly_normalize(benchmark::State& state) {
  auto e = se::parse_expr("(f1+f2+f3)^4 - (f3+f2+f1)^4 + (f1*f2-f4)^3", 3);
  for (auto _ : state) benchmark::DoNotOptimize(se::poly_normalize(e));
}
BENCHMARK(BM_poly_normalize);

void BM_build_B(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  auto P = hf::PotentialSet::generic(m);
  auto alg = ha::Algebra::cayley_dickson(m);
  for (auto _ : state) benchmark::DoNotOptimize(hf::build_B(alg, P, hf::BVariant::Plain));
}
BENCHMARK(BM_build_B)->Arg(1)->Arg(3)->Arg(7);

void BM_extract_duals(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  auto P = hf::PotentialSet::generic(m);
  auto alg = ha::Algebra::cayley_dickson(m);
  auto B = hf::build_B(alg, P, hf::BVariant::Plain);
  for (auto _ : state) benchmark::DoNotOptimize(hf::extract_duals(B));
}
BENCHMARK(BM_extract_duals)->Arg(3)->Arg(7);

void BM_top_form_wedge(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  auto P = hf::PotentialSet::generic(m);
  auto bundle = hf::extract_duals(
      hf::build_B(ha::Algebra::cayley_dickson(m), P, hf::BVariant::Plain));
  ec::Form A = hf::build_A(P);
  for (auto _ : state) {
    ec::Form w = A;
    for (const auto& d : bundle.duals) w = ec::wedge(w, d);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_top_form_wedge)->Arg(1)->Arg(3);

void BM_verify_one(benchmark::State& state, const char* id, int m) {
  auto P = hf::PotentialSet::generic(m);
  cl::ConventionConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(cl::verify(id, P, cfg));
}
BENCHMARK_CAPTURE(BM_verify_one, C2_rank3, "C2", 3);
BENCHMARK_CAPTURE(BM_verify_one, C9_rank3, "C9", 3);
BENCHMARK_CAPTURE(BM_verify_one, C13_rank3, "C13", 3);

void BM_suite(benchmark::State& state) {
  cl::SuiteOptions opt;
  opt.P = hf::PotentialSet::generic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cl::run_suite(opt));
}
BENCHMARK(BM_suite)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
