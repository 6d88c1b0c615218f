// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "drep/cohomology.hpp"
#include "drep/io.hpp"

namespace {

using namespace drep;

nc::Resolution load(const std::string& file) {
  std::ifstream in(std::string(DREP_DATA_DIR) + "/" + file);
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse_algebra(buf.str(), file.substr(0, file.find('.')));
}

gb::GroebnerOptions field_of(const benchmark::State& state) {
  gb::GroebnerOptions o;
  if (state.range(0) == 1) o.field = gb::Field::Prime;
  return o;
}

// Reduced Gröbner basis of the commuting-variety ideal of two n x n matrices.
void BM_CommutingIdeal(benchmark::State& state) {
  auto ea = expand::expand(load("kxy.alg"), static_cast<std::size_t>(state.range(1)));
  coh::CochainComplex cx(ea);
  std::vector<gb::Element> gens;
  for (const auto& p : expand::h0_ideal(ea)) gens.push_back(cx.to_element(p, 0));
  auto opts = field_of(state);
  std::size_t size = 0;
  for (auto _ : state) {
    auto g = gb::buchberger(gens, opts);
    size = g.elements().size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["basis"] = static_cast<double>(size);
}
BENCHMARK(BM_CommutingIdeal)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);

// Module Gröbner basis of the boundaries in degree -m.
void BM_Boundaries(benchmark::State& state, const char* file, std::size_t n, int m) {
  auto ea = expand::expand(load(file), n);
  auto opts = field_of(state);
  for (auto _ : state) {
    coh::CochainComplex cx(ea, opts);
    benchmark::DoNotOptimize(cx.boundaries(m).elements().size());
  }
}
BENCHMARK_CAPTURE(BM_Boundaries, kxy_n3_m2, "kxy.alg", 3, 2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Boundaries, kxyz_n2_m2, "kxyz.alg", 2, 2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Syzygies plus minimal generator selection for H^-m.
void BM_MinimalGenerators(benchmark::State& state, const char* file, std::size_t n, int m) {
  auto ea = expand::expand(load(file), n);
  auto opts = field_of(state);
  std::size_t count = 0;
  for (auto _ : state) {
    coh::CochainComplex cx(ea, opts);
    count = cx.h_presentation(m, std::nullopt, false).generator_count();
    benchmark::DoNotOptimize(count);
  }
  state.counters["generators"] = static_cast<double>(count);
}
BENCHMARK_CAPTURE(BM_MinimalGenerators, kxy_n3_m1, "kxy.alg", 3, 1)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinimalGenerators, kxyz_n2_m2, "kxyz.alg", 2, 2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinimalGenerators, kxyz_n2_m3, "kxyz.alg", 2, 3)
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

// Hilbert series numerator of a monomial module.
void BM_HilbertNumerator(benchmark::State& state) {
  auto ea = expand::expand(load("kxy.alg"), 3);
  coh::CochainComplex cx(ea);
  const auto& g = cx.boundaries(1);
  for (auto _ : state) benchmark::DoNotOptimize(gb::hilbert_numerator(g, cx.nvars()));
}
BENCHMARK(BM_HilbertNumerator)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
