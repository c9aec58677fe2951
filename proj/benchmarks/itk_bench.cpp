#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include <itk/cyclotomic.hpp>
#include <itk/lambda.hpp>
#include <itk/module_structure.hpp>

namespace {

const itk::PadicContext& ctx() {
  static itk::PadicContext c(3, 20, 200);
  return c;
}

itk::LambdaElement random_element(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const mpz_class mod = ctx().pow_p(ctx().precision());
  std::vector<itk::PadicInt> coeffs;
  coeffs.reserve(ctx().truncation());
  for (int j = 0; j < ctx().truncation(); ++j) {
    mpz_class v(static_cast<unsigned long>(rng()));
    v <<= 64;
    v += static_cast<unsigned long>(rng());
    coeffs.push_back(ctx().from_integer(v % mod));
  }
  return itk::LambdaElement::from_coeffs(ctx(), std::move(coeffs));
}

}  // namespace

static void BM_lambda_mul(benchmark::State& state) {
  itk::LambdaElement f = random_element(11);
  itk::LambdaElement g = random_element(12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_lambda_mul);

static void BM_weierstrass_prepare(benchmark::State& state) {
  itk::LambdaElement u = random_element(13);
  if (ctx().capped_valuation(u.coeff(0)) > 0) {
    u = u + itk::LambdaElement::from_int_poly(
                ctx(), itk::IntPoly(std::vector<mpz_class>{1}));
  }
  itk::IntPoly dist(std::vector<mpz_class>{6, 3, 12, 3, 9, 6, 1});
  itk::LambdaElement f =
      (u * itk::LambdaElement::from_int_poly(ctx(), dist)).mul_pow_p(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(itk::weierstrass_prepare(f));
  }
}
BENCHMARK(BM_weierstrass_prepare);

static void BM_iota(benchmark::State& state) {
  itk::LambdaElement f = itk::LambdaElement::from_int_poly(
      ctx(), itk::cyclotomic_phi(ctx().p(), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(itk::iota(f));
  }
}
BENCHMARK(BM_iota);

static void BM_bezout_pm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(itk::bezout_pm(n, ctx()));
  }
}
BENCHMARK(BM_bezout_pm)->Arg(1)->Arg(2)->Arg(3);

static void BM_sylvester_resultant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  itk::IntPoly f = itk::cyclotomic_phi(3, 3);
  itk::IntPoly g = itk::cyclotomic_omega(3, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(itk::sylvester_resultant(f, g));
  }
}
BENCHMARK(BM_sylvester_resultant)->Arg(1)->Arg(2);

static void BM_coinvariant_order(benchmark::State& state) {
  const int c = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(itk::coinvariant_order(c, n, ctx()));
  }
}
BENCHMARK(BM_coinvariant_order)->Args({3, 2})->Args({4, 3});

BENCHMARK_MAIN();
