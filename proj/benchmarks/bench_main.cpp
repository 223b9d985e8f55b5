#include <benchmark/benchmark.h>

#include <random>

#include "hopfkit/doubles.hpp"
#include "hopfkit/linsolve.hpp"

using namespace hopfkit;

namespace {

Presentation kg(const char* g) { return hopf::group_algebra(GroupTable::named(g), Field()); }

void BM_StarTableDoubleS3(benchmark::State& state) {
  const Presentation d = doubles::drinfeld_double(kg("S3"));
  for (auto _ : state) benchmark::DoNotOptimize(star::build_star_product(d).alg.table.size());
}
BENCHMARK(BM_StarTableDoubleS3)->Unit(benchmark::kMillisecond);

// random sparse rational matrix, about 4 entries per row
void BM_SparseElimination(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field q;
  std::mt19937 rng(11);
  std::vector<SparseVec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SparseVec::Entry> e{{i, q.one()}};
    for (int k = 0; k < 3; ++k) e.emplace_back(rng() % n, q.from_int(static_cast<long>(rng() % 7) - 3));
    rows.push_back(SparseVec::from_entries(std::move(e)));
  }
  for (auto _ : state) {
    RowEchelon ech(n);
    for (const auto& r : rows) ech.insert(r);
    benchmark::DoNotOptimize(ech.rank());
  }
}
BENCHMARK(BM_SparseElimination)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Pentagon(benchmark::State& state) {
  const Presentation a = kg(state.range(0) == 3 ? "Z3" : "S3");
  const Algebra h = doubles::heisenberg_double(a);
  const Tensor w = doubles::canonical_w(a);
  for (auto _ : state) benchmark::DoNotOptimize(doubles::pentagon_sides(h, w).lhs.coeffs().nnz());
}
BENCHMARK(BM_Pentagon)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
