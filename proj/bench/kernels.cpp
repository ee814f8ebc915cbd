#include <benchmark/benchmark.h>

#include "germlab/germkit.hpp"
#include "germlab/parse.hpp"
#include "support/gen.hpp"

using namespace germlab;

namespace {

PolyMatrix<Rational> random_matrix(std::size_t rows, std::size_t cols) {
  auto r = make_ring<Rational>({"x", "y", "z", "w"});
  Sampler rng(3);
  PolyMatrix<Rational> A(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) A.at(i, j) = gen::poly(r, rng, 3, 2);
  return A;
}

struct NormalFormData {
  PolyList<Rational> fs, basis;
};

const NormalFormData& normal_form_data() {
  static const NormalFormData d = [] {
    auto r = make_ring<Rational>({"x", "y", "z"});
    PolyList<Rational> gens;
    for (const char* s : {"x^2 - y*z", "y^2 - x*z + z^3", "z^2 - x*y"}) gens.push_back(parse_polynomial<Rational>(s, r));
    NormalFormData out;
    out.basis = standard_basis(gens, r);
    Sampler rng(4);
    for (int i = 0; i < 200; ++i) out.fs.push_back(gen::poly(r, rng, 6, 6));
    return out;
  }();
  return d;
}

void minors_serial_bench(benchmark::State& state) {
  auto A = random_matrix(5, 6);
  for (auto _ : state) benchmark::DoNotOptimize(minors_serial(A, static_cast<std::size_t>(state.range(0))));
}

void minors_parallel_bench(benchmark::State& state) {
  auto A = random_matrix(5, 6);
  for (auto _ : state) benchmark::DoNotOptimize(minors_parallel(A, static_cast<std::size_t>(state.range(0))));
}

void normal_forms_serial_bench(benchmark::State& state) {
  const auto& d = normal_form_data();
  for (auto _ : state) benchmark::DoNotOptimize(normal_forms_serial(d.fs, d.basis));
}

void normal_forms_parallel_bench(benchmark::State& state) {
  const auto& d = normal_form_data();
  for (auto _ : state) benchmark::DoNotOptimize(normal_forms_parallel(d.fs, d.basis));
}

}  // namespace

BENCHMARK(minors_serial_bench)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(minors_parallel_bench)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(normal_forms_serial_bench)->Unit(benchmark::kMillisecond);
BENCHMARK(normal_forms_parallel_bench)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
