#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "troppic/io.hpp"
#include "troppic/picard.hpp"
#include "troppic/tropoly.hpp"

namespace {

using namespace troppic;

Fan load(const char* name) {
  return io::fan_from_json(io::read_json_file(std::filesystem::path(TROPPIC_SOURCE_DIR) / "fans" /
                                              (std::string(name) + ".json")));
}

IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-5, 5);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 64);

void BM_PicardGroup(benchmark::State& state, const char* name) {
  const Fan fan = load(name);
  for (auto _ : state) benchmark::DoNotOptimize(picard_group(fan));
}
BENCHMARK_CAPTURE(BM_PicardGroup, p1xp1, "p1xp1");
BENCHMARK_CAPTURE(BM_PicardGroup, p3, "p3");
BENCHMARK_CAPTURE(BM_PicardGroup, hirzebruch_f3, "hirzebruch_f3");

void BM_ReduceToFunction(benchmark::State& state) {
  const auto chart = std::make_shared<const AffineToricMonoid>(2, std::vector<IntVector>{});
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4);
  std::vector<std::pair<IntVector, TropRat>> terms;
  for (int i = 0; i < state.range(0); ++i)
    terms.emplace_back(IntVector{e(rng), e(rng)}, TropRat(c(rng)));
  const TropRatPolynomial p(chart, terms);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_function(p));
}
BENCHMARK(BM_ReduceToFunction)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
