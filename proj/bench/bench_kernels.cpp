// Serial reference loops against the OpenMP kernels on a 2D grid.
#include <benchmark/benchmark.h>

#include "glh/ansatz.hpp"
#include "glh/kernel.hpp"
#include "glh/profile.hpp"
#include "glh/residual.hpp"

namespace {

const glh::ProfilePair& profile() {
  static const glh::ProfilePair p =
      glh::solve_profile(glh::GLParams{}, {1, 1}, glh::make_geometric_grid(1e-3, 1.0025, 60.0), 1e-10);
  return p;
}

glh::VortexConfig config() {
  glh::VortexConfig c;
  c.epsilon = 5e-2;
  c.k = 2;
  c.d_hat = 1.0;
  return c;
}

glh::Grid2D grid(benchmark::State& state) {
  return glh::square_grid(30.0, 30.0 / static_cast<double>(state.range(0)));
}

void BM_Ansatz(benchmark::State& state, glh::Exec exec) {
  const glh::Grid2D g = grid(state);
  for (auto _ : state) benchmark::DoNotOptimize(glh::build_ansatz(profile(), config(), g, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

void BM_S0(benchmark::State& state, bool parallel) {
  const glh::ComplexField2D v = glh::build_ansatz(profile(), config(), grid(state));
  glh::ComplexField2D out(v.grid);
  out.valid.assign(v.grid.size(), 0);
  for (auto _ : state) {
    if (parallel) {
      glh::detail::s0_parallel(v, profile().params, out);
    } else {
      glh::detail::s0_serial(v, profile().params, out);
    }
    benchmark::DoNotOptimize(out.plus.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(v.grid.size()));
}

void BM_S1(benchmark::State& state, bool parallel) {
  const glh::ComplexField2D v = glh::build_ansatz(profile(), config(), grid(state));
  glh::ComplexField2D out(v.grid);
  out.valid.assign(v.grid.size(), 0);
  for (auto _ : state) {
    if (parallel) {
      glh::detail::s1_parallel(v, 5e-2, 2, out);
    } else {
      glh::detail::s1_serial(v, 5e-2, 2, out);
    }
    benchmark::DoNotOptimize(out.plus.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(v.grid.size()));
}

void BM_L0(benchmark::State& state, bool parallel) {
  const glh::ComplexField2D phi = glh::sample_field(grid(state), glh::TranslationMode(profile(), 1));
  glh::ComplexField2D out(phi.grid);
  out.valid.assign(phi.grid.size(), 0);
  for (auto _ : state) {
    if (parallel) {
      glh::detail::l0_parallel(phi, profile(), 0.0, out);
    } else {
      glh::detail::l0_serial(phi, profile(), 0.0, out);
    }
    benchmark::DoNotOptimize(out.plus.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(phi.grid.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Ansatz, serial, glh::Exec::Serial)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Ansatz, parallel, glh::Exec::Parallel)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_S0, serial, false)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_S0, parallel, true)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_S1, serial, false)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_S1, parallel, true)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_L0, serial, false)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_L0, parallel, true)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
