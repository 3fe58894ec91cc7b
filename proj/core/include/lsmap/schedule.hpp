#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsmap/qodg.hpp"
#include "lsmap/timing.hpp"

namespace lsmap {

enum class SchedDirection { Asap, Alap };
enum class SchedSolver { Exact, List };

struct SchedulePolicy {
  SchedDirection direction = SchedDirection::Asap;
  bool commute = false;
  SchedSolver solver = SchedSolver::Exact;
};

// Start times for every QODG node (indexed like Qodg::nodes), in SC cycles.
struct Schedule {
  std::vector<std::int64_t> start;
  std::vector<std::int64_t> duration;
  std::int64_t makespan = 0;
};

// Minimizes total latency subject to the dependency constraints:
//   commute off: start[i] + dur[i] <= start[j] for every edge (i, j);
//   commute on:  the same for true edges, while name edges only require
//                the two CNOTs to execute in some order without overlap.
// Ops sharing a qubit stay serialized in stream order across commutable
// runs, so a CNOT can never overtake a non-commuting neighbour on the
// same qubit. The exact solver proves optimality by branch-and-bound over
// name-edge orientations (longest path per orientation); the list solver
// is a critical-path greedy that satisfies the same constraints.
// ALAP is the mirrored ASAP schedule of the reversed graph.
Schedule schedule(const Qodg& g, const TimingModel& t, ArchKind arch,
                  const SchedulePolicy& p);

struct ScheduleViolation {
  int edge_index;
  std::string what;
};

std::vector<ScheduleViolation> validate_schedule(const Qodg& g,
                                                 const Schedule& s,
                                                 const SchedulePolicy& p);

// Bundles instructions with equal start times and inserts qwait
// instructions so the emitted stream reproduces every start time exactly.
// Requires a schedule that never starts two instructions touching the
// same qubit in the same cycle.
Circuit to_parallel_circuit(const Circuit& c, const Schedule& s);

}  // namespace lsmap
