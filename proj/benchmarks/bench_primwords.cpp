/* Copyright 2026 The primwords Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <benchmark/benchmark.h>

#include <random>

#include "primwords/enumerate.hpp"
#include "primwords/morphism.hpp"
#include "primwords/registry.hpp"

namespace {

using namespace primwords;

Word random_word(std::size_t len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Symbol> symbols(len);
  for (auto& s : symbols) s = static_cast<Symbol>(rng() % 2);
  return Word(Alphabet("ab"), std::move(symbols));
}

void BM_IsPrimitive(benchmark::State& state) {
  const Word w = random_word(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsPrimitive)->RangeMultiplier(4)->Range(16, 1 << 14)->Complexity(benchmark::oN);

void BM_DivisorOracle(benchmark::State& state) {
  const Word w = power(random_word(static_cast<std::size_t>(state.range(0)) / 4, 2), 4);
  for (auto _ : state) benchmark::DoNotOptimize(registry::oracle_is_primitive(w));
}
BENCHMARK(BM_DivisorOracle)->RangeMultiplier(4)->Range(16, 1 << 14);

void BM_MaxPower(benchmark::State& state) {
  const Word w = random_word(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(max_power(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxPower)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);

void BM_SquareFreeTernaryEnumeration(benchmark::State& state) {
  const Alphabet abc("abc");
  for (auto _ : state) {
    std::size_t count = 0;
    auto stream = enumerate_k_power_free_words(abc, 2, static_cast<std::size_t>(state.range(0)));
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SquareFreeTernaryEnumeration)->DenseRange(10, 22, 4);

void BM_IsCode(benchmark::State& state) {
  const Alphabet ab("ab");
  const std::vector<Word> set{Word::parse(ab, "aba"), Word::parse(ab, "baab"), Word::parse(ab, "abbab"),
                              Word::parse(ab, "bbaabb")};
  for (auto _ : state) benchmark::DoNotOptimize(morphism::is_code(set));
}
BENCHMARK(BM_IsCode);

void BM_NPrimitive(benchmark::State& state) {
  const auto f = morphism::make_counterexample_family(12);
  for (auto _ : state) benchmark::DoNotOptimize(morphism::is_n_primitive(f, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_NPrimitive)->DenseRange(6, 12, 2);

void BM_TkCertificate(benchmark::State& state) {
  const auto f = morphism::Morphism::parse(Alphabet("ab"), Alphabet("ab"), {"abbab", "baabb"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(morphism::certify_primitive_binary_via_tk(f, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_TkCertificate)->DenseRange(2, 5);

void BM_VerifyStatement(benchmark::State& state) {
  const auto id = static_cast<registry::StatementId>(state.range(0));
  state.SetLabel(std::string(registry::to_string(id)));
  for (auto _ : state) benchmark::DoNotOptimize(registry::verify(id));
}
BENCHMARK(BM_VerifyStatement)
    ->Arg(static_cast<int>(registry::StatementId::CONJ_COUNT))
    ->Arg(static_cast<int>(registry::StatementId::UNIFORM_BINARY_2PRIM))
    ->Arg(static_cast<int>(registry::StatementId::TK_SUFFICIENT))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
