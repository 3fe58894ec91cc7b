#include <benchmark/benchmark.h>

#include "lsmap/circuitgen.hpp"
#include "lsmap/pipeline.hpp"
#include "lsmap/steane.hpp"
#include "lsmap/surgery.hpp"

namespace {

lsmap::Circuit bench_circuit(int qubits, int gates) {
  lsmap::RandomCircuitParams p;
  p.n_qubits = qubits;
  p.n_gates = gates;
  return lsmap::random_circuit(p, 42);
}

void BM_ParseEmit(benchmark::State& state) {
  std::string text = lsmap::emit_qasm(bench_circuit(8, 200));
  for (auto _ : state)
    benchmark::DoNotOptimize(lsmap::parse_qasm(text));
}
BENCHMARK(BM_ParseEmit);

void BM_ScheduleExact(benchmark::State& state) {
  lsmap::Circuit c = lsmap::steane_encoder();
  lsmap::Qodg g = lsmap::build_qodg(c);
  lsmap::TimingModel t(3);
  for (auto _ : state) {
    auto s = lsmap::schedule(g, t, lsmap::ArchKind::Checkerboard,
                             {lsmap::SchedDirection::Alap, true,
                              lsmap::SchedSolver::Exact});
    benchmark::DoNotOptimize(s.makespan);
  }
}
BENCHMARK(BM_ScheduleExact);

void BM_ScheduleList(benchmark::State& state) {
  lsmap::Circuit c = bench_circuit(10, static_cast<int>(state.range(0)));
  lsmap::Qodg g = lsmap::build_qodg(c);
  lsmap::TimingModel t(3);
  for (auto _ : state) {
    auto s = lsmap::schedule(g, t, lsmap::ArchKind::TileBased,
                             {lsmap::SchedDirection::Alap, true,
                              lsmap::SchedSolver::List});
    benchmark::DoNotOptimize(s.makespan);
  }
}
BENCHMARK(BM_ScheduleList)->Arg(100)->Arg(400);

void BM_PlaceSmart(benchmark::State& state) {
  lsmap::Circuit c = lsmap::steane_encoder();
  lsmap::Architecture a(lsmap::ArchKind::TileBased, 3, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(lsmap::place_smart(c, a));
}
BENCHMARK(BM_PlaceSmart);

void BM_Pipeline(benchmark::State& state) {
  lsmap::Circuit c = bench_circuit(8, static_cast<int>(state.range(0)));
  lsmap::RunConfig cfg;
  cfg.rows = 3;
  cfg.cols = 3;
  cfg.solver = lsmap::SchedSolver::List;
  for (auto _ : state)
    benchmark::DoNotOptimize(lsmap::run_pipeline(cfg, c).report.n_swaps);
}
BENCHMARK(BM_Pipeline)->Arg(60)->Arg(200);

void BM_SurgeryCnot(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        lsmap::verify_cnot_construction(lsmap::CnotVariant::AncillaZero).ok);
}
BENCHMARK(BM_SurgeryCnot);

void BM_SurgeryTswap(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lsmap::verify_tswap().ok);
}
BENCHMARK(BM_SurgeryTswap);

}  // namespace

BENCHMARK_MAIN();
