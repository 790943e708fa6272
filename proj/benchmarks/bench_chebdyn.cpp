#include <benchmark/benchmark.h>

#include <complex>

#include "chebdyn/angle.hpp"
#include "chebdyn/chebyshev.hpp"
#include "chebdyn/cyclotomic.hpp"
#include "chebdyn/equidistribution.hpp"
#include "chebdyn/factorize.hpp"
#include "chebdyn/heights.hpp"
#include "chebdyn/integrality.hpp"
#include "chebdyn/resultant.hpp"

using namespace chebdyn;

static void BM_ChebPoly(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cheb_poly(Family::P, m));
}
BENCHMARK(BM_ChebPoly)->RangeMultiplier(4)->Range(16, 1024);

static void BM_CompositionLaw(benchmark::State& state) {
  const auto p = cheb_poly(Family::P, 12);
  const auto q = cheb_poly(Family::P, 12);
  for (auto _ : state) benchmark::DoNotOptimize(p.compose(q));
}
BENCHMARK(BM_CompositionLaw);

static void BM_SylvesterResultant(benchmark::State& state) {
  // Res_x(Phi_N(x), x^2 - w x + 1) over Z[w], the conjugate-polynomial kernel.
  const std::uint64_t N = static_cast<std::uint64_t>(state.range(0));
  const auto phi = cyclotomic_poly(N);
  std::vector<IntPolynomial> f;
  for (const auto& c : phi.coefficients()) f.push_back(IntPolynomial::constant(c));
  const std::vector<IntPolynomial> g{IntPolynomial{1}, IntPolynomial{0, -1}, IntPolynomial{1}};
  for (auto _ : state) benchmark::DoNotOptimize(resultant_x(f, g));
}
BENCHMARK(BM_SylvesterResultant)->Arg(35)->Arg(101)->Arg(210)->Unit(benchmark::kMillisecond);

static void BM_NormEvaluation(benchmark::State& state) {
  const auto& psi = norm_polynomial(Family::P, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(psi.eval_homogeneous(BigInt(1), BigInt(2)));
}
BENCHMARK(BM_NormEvaluation)->Arg(100)->Arg(1000)->Arg(2000);

static void BM_HeightIterative(benchmark::State& state) {
  ChebyshevMap p2(Family::P, 2);
  for (auto _ : state) benchmark::DoNotOptimize(local_height_arch_iterative({3.0, 0.5}, p2, 1e-14));
}
BENCHMARK(BM_HeightIterative);

static void BM_HeightQuadrature(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(local_height_arch_quadrature({0.5, 0.0}, n));
}
BENCHMARK(BM_HeightQuadrature)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);

static void BM_Factorize(benchmark::State& state) {
  const BigInt n = BigInt("1073741827") * BigInt("1073742851") * 360;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize)->Unit(benchmark::kMillisecond);

// Norm polynomials are memoized, so iterations after the first time only the
// resultant evaluations and factorizations.
static void BM_FinitenessScan(benchmark::State& state) {
  ChebyshevMap p2(Family::P, 2);
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(finiteness_scan(Rational(BigInt(1), BigInt(2)), PlaceSet{}, n_max, p2));
}
BENCHMARK(BM_FinitenessScan)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_CountInInterval(benchmark::State& state) {
  const Interval I(-0.333, 1.234);
  std::uint64_t N = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_in_interval(N, I));
    N = N == 5000 ? 1000 : N + 1;
  }
}
BENCHMARK(BM_CountInInterval);

static void BM_GapProbe(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(baker_gap_probe(Rational(BigInt(1), BigInt(2)), 2000));
}
BENCHMARK(BM_GapProbe)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
