// Serial reference loops against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "bausteine/batch.hpp"
#include "support/generators.hpp"

namespace {

using bausteine::batch::Execution;
namespace testing = bausteine::testing;

const std::vector<bausteine::Term>& confluence_terms() {
  static const auto terms = [] {
    testing::Rng rng(2024);
    std::vector<bausteine::Term> out;
    for (int i = 0; i < 500; ++i) out.push_back(testing::random_closed_term(rng, 15));
    return out;
  }();
  return terms;
}

const std::vector<bausteine::Transform>& transforms5() {
  static const auto t = bausteine::enumerate_transforms(5);
  return t;
}

const std::vector<bausteine::epr::Formula>& formulas() {
  static const auto fs = [] {
    testing::Rng rng(7);
    std::vector<bausteine::epr::Formula> out;
    for (int i = 0; i < 200; ++i) out.push_back(testing::random_epr_formula(rng));
    return out;
  }();
  return fs;
}

template <Execution Exec>
void BM_Confluence(benchmark::State& state) {
  for (auto _ : state) {
    auto r = bausteine::batch::confluence(confluence_terms(), 1000, Exec);
    benchmark::DoNotOptimize(r);
  }
}

template <Execution Exec>
void BM_VerifyTransforms(benchmark::State& state) {
  for (auto _ : state) {
    auto r = bausteine::batch::verify_transforms(transforms5(), Exec);
    benchmark::DoNotOptimize(r);
  }
}

template <Execution Exec>
void BM_DecideAll(benchmark::State& state) {
  for (auto _ : state) {
    auto r = bausteine::batch::decide_all(formulas(), Exec);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_Confluence<Execution::Serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Confluence<Execution::Parallel>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyTransforms<Execution::Serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyTransforms<Execution::Parallel>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecideAll<Execution::Serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecideAll<Execution::Parallel>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
