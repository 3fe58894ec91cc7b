#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsmap/ftlib.hpp"
#include "lsmap/qodg.hpp"
#include "lsmap/route.hpp"
#include "lsmap/schedule.hpp"

namespace lsmap {

enum class EmitLevel { Logical, Physical };

struct RunConfig {
  ArchKind arch = ArchKind::TileBased;
  int rows = 3;
  int cols = 3;
  int d = 3;
  SchedDirection sched = SchedDirection::Alap;
  bool commute = true;
  SchedSolver solver = SchedSolver::Exact;
  bool smart_place = true;
  int window = 10;
  EmitLevel emit = EmitLevel::Logical;
  std::uint64_t seed = 0;  // random-circuit generators in experiment modes
};

struct MetricsReport {
  CircuitStats stats;
  std::int64_t scheduled_latency = 0;  // L_S
  std::int64_t routed_latency = 0;     // L_R
  double latency_overhead = 0.0;       // (L_R - L_S) / L_S
  int n_swaps = 0;
  double operation_overhead = 0.0;     // swaps / gates
  double qubit_efficiency = 0.0;
  double wall_ms = 0.0;  // not part of the canonical report serialization
};

struct PipelineResult {
  Circuit scheduled_stream;  // input ordered by the schedule
  Placement placement;
  RoutedCircuit routed;
  std::optional<Circuit> physical;
  MetricsReport report;
};

// parse -> QODG -> schedule -> place -> route -> (expand): the full pass
// order, with the window rescheduling inheriting the commutation flag.
PipelineResult run_pipeline(const RunConfig& cfg, const Circuit& input);

// Canonical machine-readable report. Deterministic for a fixed config and
// input; wall-clock time is only included on request.
std::string report_json(const RunConfig& cfg, const MetricsReport& m,
                        bool include_runtime = false);

enum class CompareMode { Commutation, Arch, Placement };

struct ComparisonTable {
  std::vector<std::string> columns;
  std::vector<std::string> row_names;
  std::vector<std::vector<double>> rows;

  std::string to_csv() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Experiment grids: scheduling with/without commutation, checkerboard
// vs tile-based overheads, smart vs naive placement.
ComparisonTable compare_experiment(
    CompareMode mode,
    const std::vector<std::pair<std::string, Circuit>>& benchmarks,
    const RunConfig& cfg);

}  // namespace lsmap
