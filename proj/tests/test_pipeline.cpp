#include "doctest.h"
#include "lsmap/circuitgen.hpp"
#include "lsmap/pipeline.hpp"
#include "lsmap/steane.hpp"

using namespace lsmap;

TEST_CASE("an empty circuit flows through with all-zero metrics") {
  Circuit c;
  c.n_qubits = 2;
  RunConfig cfg;
  cfg.rows = 1;
  cfg.cols = 2;
  PipelineResult res = run_pipeline(cfg, c);
  CHECK(res.report.scheduled_latency == 0);
  CHECK(res.report.routed_latency == 0);
  CHECK(res.report.n_swaps == 0);
  CHECK(res.report.operation_overhead == 0.0);
}

TEST_CASE("a nearest-neighbour circuit has zero overheads") {
  Circuit c = parse_qasm("qubits 2\nprepz q0\nprepz q1\ncnot q0,q1\n");
  RunConfig cfg;
  cfg.rows = 1;
  cfg.cols = 2;
  PipelineResult res = run_pipeline(cfg, c);
  CHECK(res.report.n_swaps == 0);
  CHECK(res.report.operation_overhead == 0.0);
  CHECK(res.report.latency_overhead == 0.0);
  CHECK(res.report.routed_latency == res.report.scheduled_latency);
}

TEST_CASE("overhead formulas recompute from the raw fields") {
  Circuit c = steane_encoder();
  RunConfig cfg;  // tile fabric, 3x3
  PipelineResult res = run_pipeline(cfg, c);
  const MetricsReport& m = res.report;
  CHECK(m.operation_overhead ==
        doctest::Approx(static_cast<double>(m.n_swaps) / m.stats.n_gates));
  CHECK(m.latency_overhead ==
        doctest::Approx(
            static_cast<double>(m.routed_latency - m.scheduled_latency) /
            static_cast<double>(m.scheduled_latency)));
  CHECK(m.qubit_efficiency == 0.25);
}

TEST_CASE("reports are schema-stable and deterministic") {
  Circuit c = steane_encoder();
  RunConfig cfg;
  auto once = [&]() {
    PipelineResult res = run_pipeline(cfg, c);
    return report_json(cfg, res.report) + emit_qasm(res.routed.circuit);
  };
  std::string a = once();
  CHECK(a == once());
  CHECK(a.find("\"scheduled_latency\"") != std::string::npos);
  CHECK(a.find("wall_ms") == std::string::npos);
}

TEST_CASE("pipeline rejects circuits larger than the fabric") {
  Circuit c = steane_encoder();
  RunConfig cfg;
  cfg.rows = 2;
  cfg.cols = 2;
  CHECK_THROWS(run_pipeline(cfg, c));
}

TEST_CASE("physical emission through the pipeline") {
  Circuit c = parse_qasm("qubits 2\nprepz q0\nprepz q1\ncnot q0,q1\n");
  RunConfig cfg;
  cfg.rows = 1;
  cfg.cols = 2;
  cfg.emit = EmitLevel::Physical;
  PipelineResult res = run_pipeline(cfg, c);
  REQUIRE(res.physical.has_value());
  CHECK(res.physical->n_qubits > 0);
  CHECK(res.physical->gate_count() > 0);
}

TEST_CASE("commutation experiment reports the latency reduction") {
  RunConfig cfg;
  cfg.arch = ArchKind::Checkerboard;
  auto table = compare_experiment(CompareMode::Commutation,
                                  {{"7-enc", steane_encoder()}}, cfg);
  REQUIRE(table.rows.size() == 1);
  REQUIRE(table.columns.size() == 3);
  double l_plain = table.rows[0][0];
  double l_comm = table.rows[0][1];
  double red = table.rows[0][2];
  CHECK(l_comm <= l_plain);
  CHECK(red == doctest::Approx(100.0 * (l_plain - l_comm) / l_plain));
  // CSV and JSON exports carry the same cells
  std::string csv = table.to_csv();
  CHECK(csv.find("latency_commute") != std::string::npos);
  CHECK(table.to_json().find("reduction_pct") != std::string::npos);
}

TEST_CASE("architecture experiment emits both overhead columns") {
  RandomCircuitParams p;
  p.n_qubits = 5;
  p.n_gates = 20;
  Circuit c = random_circuit(p, 11);
  RunConfig cfg;
  cfg.rows = 3;
  cfg.cols = 2;
  cfg.solver = SchedSolver::List;
  auto table = compare_experiment(CompareMode::Arch, {{"rand", c}}, cfg);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.columns.size() == 8);
  CHECK(table.rows[0].size() == 8);
}

TEST_CASE("placement experiment compares smart and naive") {
  Circuit c = steane_encoder();
  RunConfig cfg;
  auto table = compare_experiment(CompareMode::Placement,
                                  {{"7-enc", c}}, cfg);
  REQUIRE(table.rows.size() == 1);
  // smart never inserts more swaps on this benchmark
  CHECK(table.rows[0][2] <= table.rows[0][0]);
}
