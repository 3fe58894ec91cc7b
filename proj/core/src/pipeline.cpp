#include "lsmap/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace lsmap {

namespace {

// The routed order of the input: instructions sorted by start time, ties
// by stream position. This is the stream the sliding window consumes.
Circuit ordered_by_schedule(const Circuit& c, const Schedule& s) {
  auto gates = c.gates();
  std::vector<size_t> idx(gates.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return s.start[a] < s.start[b];
  });
  Circuit out;
  out.n_qubits = c.n_qubits;
  for (size_t i : idx) out.steps.push_back({*gates[i]});
  return out;
}

}  // namespace

PipelineResult run_pipeline(const RunConfig& cfg, const Circuit& input) {
  auto t0 = std::chrono::steady_clock::now();
  PipelineResult res;

  TimingModel timing(cfg.d);
  Architecture arch(cfg.arch, cfg.rows, cfg.cols);
  if (input.n_qubits > arch.n_locations())
    throw std::invalid_argument("architecture too small for this circuit");

  Qodg g = build_qodg(input);
  SchedulePolicy pol{cfg.sched, cfg.commute, cfg.solver};
  Schedule sched = schedule(g, timing, cfg.arch, pol);
  res.scheduled_stream = ordered_by_schedule(input, sched);

  res.placement = cfg.smart_place ? place_smart(input, arch)
                                  : place_naive(input, arch);

  RouterConfig rcfg{cfg.window, cfg.commute};
  res.routed = route(res.scheduled_stream, arch, res.placement, timing, rcfg);

  if (cfg.emit == EmitLevel::Physical) {
    QSymbolTable sym = build_symbol_table(arch, res.placement, cfg.d);
    res.physical = expand_physical(res.routed, sym, arch, timing);
  }

  MetricsReport& m = res.report;
  m.stats = characterize(input);
  m.scheduled_latency = sched.makespan;
  m.routed_latency = res.routed.makespan;
  m.n_swaps = res.routed.n_swaps;
  m.latency_overhead =
      m.scheduled_latency > 0
          ? static_cast<double>(m.routed_latency - m.scheduled_latency) /
                static_cast<double>(m.scheduled_latency)
          : 0.0;
  m.operation_overhead =
      m.stats.n_gates > 0
          ? static_cast<double>(m.n_swaps) / m.stats.n_gates
          : 0.0;
  m.qubit_efficiency = arch.qubit_efficiency();
  m.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return res;
}

std::string report_json(const RunConfig& cfg, const MetricsReport& m,
                        bool include_runtime) {
  nlohmann::ordered_json j;
  j["config"] = {
      {"arch", cfg.arch == ArchKind::Checkerboard ? "c" : "t"},
      {"rows", cfg.rows},
      {"cols", cfg.cols},
      {"distance", cfg.d},
      {"sched", cfg.sched == SchedDirection::Alap ? "alap" : "asap"},
      {"commute", cfg.commute ? "on" : "off"},
      {"solver", cfg.solver == SchedSolver::Exact ? "exact" : "list"},
      {"place", cfg.smart_place ? "smart" : "naive"},
      {"window", cfg.window},
      {"emit", cfg.emit == EmitLevel::Physical ? "physical" : "logical"},
  };
  j["circuit"] = {
      {"qubits", m.stats.n_qubits},   {"gates", m.stats.n_gates},
      {"cnots", m.stats.n_cnots},     {"rcg", m.stats.rcg},
      {"rcd", m.stats.rcd},           {"rtsg", m.stats.rtsg},
  };
  j["result"] = {
      {"scheduled_latency", m.scheduled_latency},
      {"routed_latency", m.routed_latency},
      {"latency_overhead", m.latency_overhead},
      {"swaps", m.n_swaps},
      {"operation_overhead", m.operation_overhead},
      {"qubit_efficiency", m.qubit_efficiency},
  };
  if (include_runtime) j["result"]["wall_ms"] = m.wall_ms;
  return j.dump(2) + "\n";
}

std::string ComparisonTable::to_csv() const {
  std::ostringstream out;
  out << "benchmark";
  for (const auto& c : columns) out << ',' << c;
  out << '\n';
  for (size_t r = 0; r < rows.size(); r++) {
    out << row_names[r];
    for (double v : rows[r]) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

std::string ComparisonTable::to_text() const {
  std::ostringstream out;
  size_t name_w = 9;
  for (const auto& n : row_names) name_w = std::max(name_w, n.size());
  out << std::string(name_w, ' ');
  for (const auto& c : columns) {
    out << "  ";
    out.width(static_cast<int>(std::max<size_t>(c.size(), 12)));
    out << c;
  }
  out << '\n';
  for (size_t r = 0; r < rows.size(); r++) {
    out.width(static_cast<int>(name_w));
    out << row_names[r];
    for (size_t c = 0; c < rows[r].size(); c++) {
      out << "  ";
      out.width(static_cast<int>(std::max<size_t>(columns[c].size(), 12)));
      out << rows[r][c];
    }
    out << '\n';
  }
  return out.str();
}

std::string ComparisonTable::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (size_t r = 0; r < rows.size(); r++) {
    nlohmann::ordered_json row;
    row["benchmark"] = row_names[r];
    for (size_t c = 0; c < columns.size(); c++) row[columns[c]] = rows[r][c];
    j.push_back(row);
  }
  return j.dump(2) + "\n";
}

ComparisonTable compare_experiment(
    CompareMode mode,
    const std::vector<std::pair<std::string, Circuit>>& benchmarks,
    const RunConfig& cfg) {
  ComparisonTable t;
  TimingModel timing(cfg.d);
  switch (mode) {
    case CompareMode::Commutation: {
      t.columns = {"latency_plain", "latency_commute", "reduction_pct"};
      for (const auto& [name, circuit] : benchmarks) {
        Qodg g = build_qodg(circuit);
        SchedulePolicy off{cfg.sched, false, cfg.solver};
        SchedulePolicy on{cfg.sched, true, cfg.solver};
        auto l_off = schedule(g, timing, cfg.arch, off).makespan;
        auto l_on = schedule(g, timing, cfg.arch, on).makespan;
        double red = l_off > 0 ? 100.0 * static_cast<double>(l_off - l_on) /
                                     static_cast<double>(l_off)
                               : 0.0;
        t.row_names.push_back(name);
        t.rows.push_back({static_cast<double>(l_off),
                          static_cast<double>(l_on), red});
      }
      break;
    }
    case CompareMode::Arch: {
      t.columns = {"c_swaps",          "c_op_overhead",  "c_lat_overhead",
                   "t_swaps",          "t_op_overhead",  "t_lat_overhead",
                   "op_reduction_pct", "lat_reduction_pct"};
      for (const auto& [name, circuit] : benchmarks) {
        RunConfig cc = cfg;
        cc.arch = ArchKind::Checkerboard;
        RunConfig tc = cfg;
        tc.arch = ArchKind::TileBased;
        auto rc = run_pipeline(cc, circuit).report;
        auto rt = run_pipeline(tc, circuit).report;
        double op_red = rc.operation_overhead > 0
                            ? 100.0 * (rc.operation_overhead -
                                       rt.operation_overhead) /
                                  rc.operation_overhead
                            : 0.0;
        double lat_red = rc.latency_overhead > 0
                             ? 100.0 * (rc.latency_overhead -
                                        rt.latency_overhead) /
                                   rc.latency_overhead
                             : 0.0;
        t.row_names.push_back(name);
        t.rows.push_back({static_cast<double>(rc.n_swaps),
                          rc.operation_overhead, rc.latency_overhead,
                          static_cast<double>(rt.n_swaps),
                          rt.operation_overhead, rt.latency_overhead, op_red,
                          lat_red});
      }
      break;
    }
    case CompareMode::Placement: {
      t.columns = {"naive_swaps", "naive_lat_overhead", "smart_swaps",
                   "smart_lat_overhead", "swap_reduction_pct",
                   "lat_reduction_pct"};
      for (const auto& [name, circuit] : benchmarks) {
        RunConfig nc = cfg;
        nc.smart_place = false;
        RunConfig sc = cfg;
        sc.smart_place = true;
        auto rn = run_pipeline(nc, circuit).report;
        auto rs = run_pipeline(sc, circuit).report;
        double swap_red =
            rn.n_swaps > 0
                ? 100.0 * (rn.n_swaps - rs.n_swaps) / rn.n_swaps
                : 0.0;
        double lat_red = rn.latency_overhead > 0
                             ? 100.0 * (rn.latency_overhead -
                                        rs.latency_overhead) /
                                   rn.latency_overhead
                             : 0.0;
        t.row_names.push_back(name);
        t.rows.push_back({static_cast<double>(rn.n_swaps),
                          rn.latency_overhead,
                          static_cast<double>(rs.n_swaps),
                          rs.latency_overhead, swap_red, lat_red});
      }
      break;
    }
  }
  return t;
}

}  // namespace lsmap
