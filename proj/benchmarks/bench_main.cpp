#include <benchmark/benchmark.h>

#include <random>

#include "alia/invariants.hpp"
#include "alia/json_io.hpp"
#include "alia/presets.hpp"
#include "alia/truncated_current.hpp"

using namespace alia;

namespace {

std::string preset(const char* name) { return std::string(ALIA_PRESET_DIR) + "/" + name; }

CycScalar random_scalar(std::mt19937& rng, long order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::vector<Rational> c(euler_phi(order));
  for (auto& x : c) x = Rational(num(rng), 1 + (num(rng) & 3));
  return CycScalar(order, c);
}

}  // namespace

static void BM_cyclotomic_mul(benchmark::State& state) {
  std::mt19937 rng(1);
  long order = state.range(0);
  CycScalar a = random_scalar(rng, order), b = random_scalar(rng, order);
  for (auto _ : state) {
    CycScalar c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_cyclotomic_mul)->Arg(5)->Arg(12)->Arg(60);

static void BM_kernel_basis(benchmark::State& state) {
  std::mt19937 rng(2);
  long n = state.range(0);
  ExactMatrix m(n, n + 2, 1);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n + 2; ++j) m.at(i, j) = CycScalar::integer(coef(rng), 1);
  for (auto _ : state) {
    auto k = m.kernel_basis();
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_kernel_basis)->Arg(6)->Arg(12)->Arg(20);

static void BM_invariant_basis_z5(benchmark::State& state) {
  GroupAction action = load_action_config(preset("sl2_z5.json"));
  for (auto _ : state) {
    auto filt = InvariantFiltration::build(action, state.range(0));
    benchmark::DoNotOptimize(filt.size());
  }
}
BENCHMARK(BM_invariant_basis_z5)->Arg(13)->Arg(30);

static void BM_quotient_d6(benchmark::State& state) {
  GroupAction action = load_action_config(preset("sl3_d6.json"));
  SpherePoint b_point = SpherePoint::finite(-CycScalar::one(action.field_order()));
  for (auto _ : state) {
    auto q = quotient_by_jet_ideal(action, b_point, state.range(0));
    benchmark::DoNotOptimize(q.algebra.dim());
  }
}
BENCHMARK(BM_quotient_d6)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_twisted_current_build(benchmark::State& state) {
  auto g = lie_preset("sl3", 12);
  GroupAction action = load_action_config(preset("sl3_d6.json"));
  const ExactMatrix& gamma0 = action.elements()[action.element_by_word("c*b")].lie;
  for (auto _ : state) {
    auto T = build_twisted_current(g, gamma0, state.range(0));
    benchmark::DoNotOptimize(T.algebra.dim());
  }
}
BENCHMARK(BM_twisted_current_build)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
