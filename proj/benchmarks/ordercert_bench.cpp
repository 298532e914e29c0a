#include <benchmark/benchmark.h>

#include <random>

#include "ordercert/checker.hpp"
#include "ordercert/scripts.hpp"
#include "ordercert/serialize.hpp"
#include "ordercert/sign_search.hpp"

using namespace ordercert;

static void BM_ComposeDeltaPowers(benchmark::State& state) {
  const PLMap d = GeneratorSet::standard().delta.x_part;
  const PLMap a = GeneratorSet::standard().alpha.x_part;
  for (auto _ : state) {
    PLMap m;
    for (int i = 0; i < state.range(0); ++i) m = compose(compose(m, d), a);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_ComposeDeltaPowers)->Arg(4)->Arg(16)->Arg(64);

static void BM_ComputeEpsilon(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compute_epsilon());
}
BENCHMARK(BM_ComputeEpsilon);

static void BM_VerifyRelations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations());
}
BENCHMARK(BM_VerifyRelations)->Unit(benchmark::kMillisecond);

static void BM_VerifyMirroredRelations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_mirrored_relations());
}
BENCHMARK(BM_VerifyMirroredRelations)->Unit(benchmark::kMillisecond);

static void BM_BuildFactBase(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(h_fact_base());
}
BENCHMARK(BM_BuildFactBase)->Unit(benchmark::kMillisecond);

static void BM_CheckTheorem(benchmark::State& state) {
  const FactBase facts = h_fact_base();
  const Derivation d = script_theorem_main();
  for (auto _ : state) benchmark::DoNotOptimize(check_derivation(d, facts));
  state.counters["steps"] = static_cast<double>(d.step_count());
}
BENCHMARK(BM_CheckTheorem)->Unit(benchmark::kMillisecond);

static void BM_TheoremCertificateRoundTrip(benchmark::State& state) {
  const Derivation d = script_theorem_main();
  for (auto _ : state) {
    const std::string bytes = dump_certificate(make_certificate(CertificateKind::Derivation, to_json(d), false));
    benchmark::DoNotOptimize(derivation_from_json(parse_certificate(bytes).payload));
  }
}
BENCHMARK(BM_TheoremCertificateRoundTrip)->Unit(benchmark::kMillisecond);

static void BM_EvaluateRandomWords(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const GeneratorSet g = GeneratorSet::standard();
  std::vector<GeneratorWord> words;
  for (int i = 0; i < 64; ++i) {
    std::vector<GeneratorWord::Letter> letters;
    for (int j = 0; j < 12; ++j)
      letters.push_back({static_cast<Symbol>(rng() % 4), rng() % 2 ? 1L : -1L});
    words.emplace_back(letters);
  }
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(word_to_element(w, g)(Point{Rational(1, 7), Rational(2, 3)}));
  }
}
BENCHMARK(BM_EvaluateRandomWords)->Unit(benchmark::kMillisecond);

static void BM_SignSearchLattice(benchmark::State& state) {
  const auto oracle = LatticeOracle::standard();
  const SearchLimits limits{static_cast<std::size_t>(state.range(0)), 4096};
  for (auto _ : state)
    benchmark::DoNotOptimize(sign_search({FreeWord::atom("x"), FreeWord::atom("y")}, limits, oracle));
}
BENCHMARK(BM_SignSearchLattice)->DenseRange(2, 6, 2);

BENCHMARK_MAIN();
