#include "lsmap/circuitgen.hpp"

namespace lsmap {

Circuit random_circuit(const RandomCircuitParams& p, std::uint64_t seed) {
  Rng rng(seed);
  Circuit c;
  c.n_qubits = p.n_qubits;
  int id = 0;
  auto push = [&](GateKind k, std::vector<int> qs) {
    Instruction ins;
    ins.id = id++;
    ins.kind = k;
    ins.qubits = std::move(qs);
    c.steps.push_back({ins});
  };
  if (p.prep_first)
    for (int q = 0; q < p.n_qubits; q++) push(GateKind::PrepZ, {q});

  static const GateKind plain[] = {GateKind::H, GateKind::X, GateKind::Z};
  static const GateKind expensive[] = {GateKind::S, GateKind::T,
                                       GateKind::Sdag, GateKind::Tdag};
  for (int g = 0; g < p.n_gates; g++) {
    if (p.n_qubits >= 2 && rng.below(100) < p.cnot_percent) {
      int a = rng.below(p.n_qubits);
      int b = rng.below(p.n_qubits - 1);
      if (b >= a) b++;
      push(GateKind::Cnot, {a, b});
    } else if (rng.below(100) < p.tsg_percent) {
      push(expensive[rng.below(4)], {rng.below(p.n_qubits)});
    } else {
      push(plain[rng.below(3)], {rng.below(p.n_qubits)});
    }
  }
  return c;
}

}  // namespace lsmap
