#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsmap {

enum class GateKind {
  I,
  X,
  Y,
  Z,
  H,
  S,
  Sdag,
  T,
  Tdag,
  PrepZ,
  PrepX,
  MeasZ,
  MeasX,
  Cnot,
  Swap,
  Wait,
};

const char* gate_name(GateKind k);
int gate_arity(GateKind k);
bool is_two_qubit(GateKind k);

// One logical operation. Qubits are canonical indices into the circuit's
// qubit list; `wait_cycles` is only meaningful for Wait instructions and
// `inserted` marks movement operations added by the router.
struct Instruction {
  int id = -1;
  GateKind kind = GateKind::I;
  std::vector<int> qubits;
  int wait_cycles = 0;
  bool inserted = false;

  bool uses(int q) const {
    for (int o : qubits)
      if (o == q) return true;
    return false;
  }
};

// A circuit is an ordered list of timesteps; each timestep is a parallel
// bundle of instructions. Within one bundle no qubit may appear twice.
// A Wait instruction forms a timestep of its own and stretches the issue
// gap to the next bundle (see the dialect notes in emit_qasm).
struct Circuit {
  int n_qubits = 0;
  std::vector<std::vector<Instruction>> steps;

  std::vector<const Instruction*> instructions() const;  // excludes nothing
  std::vector<const Instruction*> gates() const;         // excludes Wait
  int gate_count() const;
  int cnot_count() const;
  int next_id() const;
};

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& what_);
};

// Line-oriented QASM dialect:
//   qubits N
//   h q0 / cnot q0,q1 / swap q1,q2 / qwait 3 / ...
//   { h q0 | x q1 }        parallel bundle
//   # comment
// Identifiers of the form q<k> address qubit k directly; any other
// identifier is bound to the lowest unused index at first use.
Circuit parse_qasm(const std::string& text);

// Canonical emission; parse_qasm(emit_qasm(c)) is structurally identical
// to c. Consecutive bundles issue 1 cycle apart; `qwait n` widens the gap
// between its neighbours to n cycles start-to-start.
std::string emit_qasm(const Circuit& c);

bool structurally_equal(const Circuit& a, const Circuit& b);

}  // namespace lsmap
