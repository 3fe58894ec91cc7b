#include "doctest.h"
#include "lsmap/circuitgen.hpp"
#include "lsmap/schedule.hpp"
#include "oracles.hpp"

using namespace lsmap;

namespace {
const TimingModel t3(3);

Schedule run(const Circuit& c, SchedDirection dir, bool commute,
             SchedSolver solver = SchedSolver::Exact,
             ArchKind arch = ArchKind::Checkerboard) {
  return schedule(build_qodg(c), t3, arch, {dir, commute, solver});
}
}  // namespace

TEST_CASE("independent gates run in parallel") {
  Circuit c = parse_qasm("qubits 2\nh q0\nh q1\n");
  Schedule s = run(c, SchedDirection::Asap, false);
  CHECK(s.start[0] == 0);
  CHECK(s.start[1] == 0);
  CHECK(s.makespan == 12);
}

TEST_CASE("a dependent chain sums the table durations") {
  Circuit c = parse_qasm("qubits 1\nh q0\ns q0\n");
  Schedule s = run(c, SchedDirection::Asap, false);
  CHECK(s.start[0] == 0);
  CHECK(s.start[1] == 12);
  CHECK(s.makespan == 12 + 42);
}

TEST_CASE("commutation picks the cheaper CNOT order") {
  // cnot a,b; t b; cnot a,c -- running cnot a,c first shortens the path
  Circuit c = parse_qasm("qubits 3\ncnot q0,q1\nt q1\ncnot q0,q2\n");
  Schedule off = run(c, SchedDirection::Asap, false);
  Schedule on = run(c, SchedDirection::Asap, true);
  CHECK(on.makespan <= off.makespan);
  Qodg g = build_qodg(c);
  CHECK(on.makespan ==
        oracle::min_over_orientations(g, t3, ArchKind::Checkerboard));
}

TEST_CASE("exact solver equals the orientation oracle on random circuits") {
  RandomCircuitParams p;
  p.n_qubits = 5;
  p.n_gates = 10;
  p.prep_first = false;
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 60; seed++) {
    Circuit c = random_circuit(p, seed);
    Qodg g = build_qodg(c);
    if (g.name_edge_count() > 6) continue;
    checked++;
    Schedule s = run(c, SchedDirection::Asap, true);
    CHECK(s.makespan ==
          oracle::min_over_orientations(g, t3, ArchKind::Checkerboard));
    Schedule off = run(c, SchedDirection::Asap, false);
    CHECK(s.makespan <= off.makespan);
  }
}

TEST_CASE("ALAP mirrors ASAP and keeps the same makespan") {
  RandomCircuitParams p;
  p.n_qubits = 4;
  p.n_gates = 14;
  for (std::uint64_t seed = 1; seed <= 10; seed++) {
    Circuit c = random_circuit(p, seed);
    Qodg g = build_qodg(c);
    for (bool commute : {false, true}) {
      Schedule fwd = run(c, SchedDirection::Asap, commute);
      Schedule bwd = run(c, SchedDirection::Alap, commute);
      CHECK(fwd.makespan == bwd.makespan);
      CHECK(validate_schedule(g, bwd, {SchedDirection::Alap, commute,
                                       SchedSolver::Exact})
                .empty());
    }
  }
}

TEST_CASE("list scheduling is feasible and no better than exact") {
  RandomCircuitParams p;
  p.n_qubits = 5;
  p.n_gates = 20;
  for (std::uint64_t seed = 1; seed <= 10; seed++) {
    Circuit c = random_circuit(p, seed);
    Qodg g = build_qodg(c);
    for (bool commute : {false, true}) {
      Schedule ls = run(c, SchedDirection::Asap, commute, SchedSolver::List);
      CHECK(validate_schedule(g, ls, {SchedDirection::Asap, commute,
                                      SchedSolver::List})
                .empty());
      Schedule ex = run(c, SchedDirection::Asap, commute);
      CHECK(ex.makespan <= ls.makespan);
    }
  }
}

TEST_CASE("validate_schedule reports the broken edge") {
  Circuit c = parse_qasm("qubits 1\nh q0\ns q0\n");
  Qodg g = build_qodg(c);
  Schedule s = run(c, SchedDirection::Asap, false);
  s.start[1] -= 1;  // one cycle early across a true edge
  auto violations =
      validate_schedule(g, s, {SchedDirection::Asap, false,
                               SchedSolver::Exact});
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].edge_index == 0);
}

TEST_CASE("commuting CNOTs may not run in parallel") {
  Circuit c = parse_qasm("qubits 3\ncnot q0,q1\ncnot q0,q2\n");
  Qodg g = build_qodg(c);
  Schedule s;
  s.duration = {9, 9};
  s.start = {0, 0};
  s.makespan = 9;
  auto violations = validate_schedule(
      g, s, {SchedDirection::Asap, true, SchedSolver::Exact});
  CHECK(!violations.empty());
}

TEST_CASE("bundling by start time with gap waits") {
  Circuit c = parse_qasm("qubits 2\nh q0\nh q1\nx q0\n");
  Qodg g = build_qodg(c);
  Schedule s = schedule(g, t3, ArchKind::Checkerboard,
                        {SchedDirection::Asap, false, SchedSolver::Exact});
  Circuit par = to_parallel_circuit(c, s);
  REQUIRE(par.steps.size() == 3);  // {h,h}, qwait 12, {x}
  CHECK(par.steps[0].size() == 2);
  CHECK(par.steps[1][0].kind == GateKind::Wait);
  CHECK(par.steps[1][0].wait_cycles == 12);
  CHECK(par.steps[2][0].kind == GateKind::X);
}

TEST_CASE("to_parallel_circuit rejects same-start collisions") {
  Circuit c = parse_qasm("qubits 1\nh q0\nx q0\n");
  Schedule s;
  s.duration = {12, 1};
  s.start = {0, 0};
  s.makespan = 12;
  CHECK_THROWS(to_parallel_circuit(c, s));
}
