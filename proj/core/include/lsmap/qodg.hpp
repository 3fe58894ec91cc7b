#pragma once

#include <vector>

#include "lsmap/circuit.hpp"

namespace lsmap {

enum class DepKind { True, Name };

// Quantum operation dependency graph. Nodes are the circuit's non-wait
// instructions in stream order; for every qubit, consecutive instructions
// touching it are connected. An edge is a name dependency iff both
// endpoints are CNOTs and the shared qubit plays the same role on both
// (control-control or target-target); such pairs are commutable.
struct Qodg {
  struct Edge {
    int from;  // node index
    int to;
    DepKind kind;
    int qubit;  // the shared qubit that induced the edge
  };

  std::vector<Instruction> nodes;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out_edges;  // node -> edge indices
  std::vector<std::vector<int>> in_edges;

  int n_qubits = 0;

  int true_edge_count() const;
  int name_edge_count() const;
};

Qodg build_qodg(const Circuit& c);

// Node indices in topological order of the TRUE-edge subgraph.
// Throws std::runtime_error if the TRUE edges contain a cycle.
std::vector<int> true_topological_order(const Qodg& g);

struct CircuitStats {
  int n_qubits = 0;
  int n_gates = 0;
  int n_cnots = 0;
  double rcg = 0.0;   // CNOT fraction of all gates
  double rcd = 0.0;   // name-dependency fraction of QODG edges
  double rtsg = 0.0;  // S/T (and adjoint) fraction of all gates
};

CircuitStats characterize(const Circuit& c);

}  // namespace lsmap
