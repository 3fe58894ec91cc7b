#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsmap/arch.hpp"
#include "lsmap/placement.hpp"
#include "lsmap/schedule.hpp"

namespace lsmap {

struct RouterConfig {
  int window = 10;      // instruction buffer length
  bool commute = true;  // commutation setting inherited by rescheduling
};

// One routed non-NN CNOT: the control walked `path` (front = control's
// location, back = a CNOT-neighbour of the target) via one SWAP per hop.
struct RouteRecord {
  int instruction_id = -1;
  Location target;
  std::vector<Location> path;
  int bfs_distance = 0;
};

// A committed instruction with its start time and execution-time
// locations (b is meaningful for two-qubit kinds only).
struct PlacedOp {
  Instruction ins;
  std::int64_t start = 0;
  std::int64_t duration = 0;
  Location a;
  Location b;
};

struct RoutedCircuit {
  Circuit circuit;  // bundled output, inserted SWAPs flagged
  int n_swaps = 0;
  std::int64_t makespan = 0;
  std::vector<PlacedOp> ops;                    // by (start, commit order)
  std::vector<std::vector<int>> layout_trace;   // occupancy after each SWAP
  std::vector<RouteRecord> routes;
  Circuit source;   // the routed input, kept for replay validation
  int n_residents = 0;  // data qubits plus filler occupants of free cells
};

// Occupancy shared by router and validator: data qubits per placement,
// then one filler occupant per remaining free location in row-major
// order so every SWAP has two named operands.
int fill_occupancy(Architecture& arch, const Placement& p, int n_qubits);

// Sliding-window router. Consumes the scheduled circuit in stream order;
// scans the first half of the buffer for a CNOT between non-neighbouring
// locations; enumerates all BFS-shortest SWAP paths that bring the
// control next to the target; scores each path by its SWAP cycles minus
// the cycles that interleave with earlier work, plus the shortest-path
// cycles the moved layout leaves for the upcoming CNOTs; inserts the best
// path's SWAPs and reschedules the buffer ASAP before emitting.
RoutedCircuit route(const Circuit& scheduled, const Architecture& arch,
                    const Placement& p, const TimingModel& t,
                    const RouterConfig& cfg);

// Replays the routed circuit from the initial placement and reports every
// violated property: CNOT between non-neighbours, SWAP between
// non-adjacent locations, overlapping primitives with intersecting
// reservations, per-qubit gate order changed beyond commutable
// reordering, or an inserted path longer than the BFS distance.
std::vector<std::string> validate_routed(const RoutedCircuit& rc,
                                         const Architecture& arch,
                                         const Placement& p0,
                                         const TimingModel& t);

}  // namespace lsmap
