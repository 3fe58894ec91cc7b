#include "lsmap/surgery.hpp"

#include <bit>

namespace lsmap {

namespace {

PauliString step_operator(const MeasureStep& s) {
  PauliString op = PauliString::single(s.p1, s.basis);
  if (s.p2 >= 0) op = op.times(PauliString::single(s.p2, s.basis));
  return op;
}

PauliString ancilla_stabilizer(int patch, char state) {
  return PauliString::single(patch, state == '0' ? 'Z' : 'X');
}

// Solve for a Pauli P supported on `support` with prescribed
// anticommutation bits against the flow targets. Plain GF(2) elimination
// over the 2 * |support| unknowns.
bool correction_exists(const std::vector<PauliString>& targets,
                       const std::vector<bool>& want_anticommute,
                       std::uint32_t support) {
  std::vector<int> sites;
  for (int i = 0; i < 32; i++)
    if (support & (1u << i)) sites.push_back(i);
  int cols = 2 * static_cast<int>(sites.size());
  int rows = static_cast<int>(targets.size());
  // row per target: [x_p coeffs (= target z bits), z_p coeffs (= target x)]
  std::vector<std::uint64_t> m(rows, 0);
  std::vector<bool> rhs = want_anticommute;
  for (int r = 0; r < rows; r++) {
    for (size_t c = 0; c < sites.size(); c++) {
      if (targets[r].z & (1u << sites[c])) m[r] |= 1ull << c;
      if (targets[r].x & (1u << sites[c])) m[r] |= 1ull << (sites.size() + c);
    }
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; col++) {
    std::uint64_t mask = 1ull << col;
    int pivot = -1;
    for (int r = rank; r < rows; r++)
      if (m[r] & mask) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    std::swap(rhs[rank], rhs[pivot]);
    for (int r = 0; r < rows; r++)
      if (r != rank && (m[r] & mask)) {
        m[r] ^= m[rank];
        rhs[r] = rhs[r] ^ rhs[rank];
      }
    rank++;
  }
  for (int r = 0; r < rows; r++)
    if (m[r] == 0 && rhs[r]) return false;
  return true;
}

}  // namespace

VerifyResult verify_construction(const SurgeryConstruction& c) {
  VerifyResult res;
  StabilizerTableau tab(c.n_patches);
  for (auto [patch, state] : c.ancillas)
    tab.add_stabilizer(ancilla_stabilizer(patch, state));
  std::vector<int> flow_idx;
  for (const auto& f : c.flows) flow_idx.push_back(tab.track(f.name, f.in));

  for (size_t k = 0; k < c.steps.size(); k++) {
    MeasurementOutcome o = tab.measure(step_operator(c.steps[k]));
    if (o.collapsed_logical) {
      res.ok = false;
      res.detail = c.name + ": step " + std::to_string(k + 1) +
                   " measures a logical degree of freedom";
      return res;
    }
    if (o.deterministic) {
      res.ok = false;
      res.detail = c.name + ": step " + std::to_string(k + 1) +
                   " is deterministic (measures a stabilizer)";
      return res;
    }
    if (auto broken = tab.broken_invariant()) {
      res.ok = false;
      res.detail = c.name + ": " + *broken;
      return res;
    }
  }

  std::vector<PauliString> reduced;
  for (size_t i = 0; i < c.flows.size(); i++) {
    auto r = tab.reduce_to(tab.tracked(static_cast<int>(i)), c.flows[i].out);
    if (!r) {
      res.ok = false;
      res.detail = c.name + ": " + c.flows[i].name +
                   " does not land on its destination (got " +
                   tab.tracked(static_cast<int>(i)).to_string(c.n_patches) +
                   ")";
      return res;
    }
    reduced.push_back(*r);
  }
  res.flow_phases = reduced;

  std::vector<PauliString> targets;
  for (const auto& f : c.flows) targets.push_back(f.out);
  int k = tab.n_outcomes();
  for (std::uint64_t branch = 0; branch < (1ull << k); branch++) {
    std::vector<bool> want;
    for (const auto& r : reduced) want.push_back(r.sign_on(branch));
    if (!correction_exists(targets, want, c.output_patches)) {
      res.ok = false;
      res.detail = c.name + ": no Pauli correction exists for branch " +
                   std::to_string(branch);
      return res;
    }
    res.branches_checked++;
  }
  return res;
}

SurgeryConstruction cnot_construction(CnotVariant v) {
  // patches: 0 = control, 1 = ancilla, 2 = target
  SurgeryConstruction c;
  c.n_patches = 3;
  c.output_patches = 0b101;
  if (v == CnotVariant::AncillaZero) {
    c.name = "measurement-based CNOT (ancilla |0>)";
    c.ancillas = {{1, '0'}};
    c.steps = {{'X', 1, 2}, {'Z', 0, 1}, {'X', 1}};
  } else {
    c.name = "measurement-based CNOT (ancilla |+>)";
    c.ancillas = {{1, '+'}};
    c.steps = {{'Z', 0, 1}, {'X', 1, 2}, {'Z', 1}};
  }
  auto P = [](const std::string& s) { return PauliString::from_letters(s); };
  c.flows = {
      {"X on control", P("XII"), P("XIX")},
      {"Z on control", P("ZII"), P("ZII")},
      {"X on target", P("IIX"), P("IIX")},
      {"Z on target", P("IIZ"), P("ZIZ")},
  };
  return c;
}

SurgeryConstruction move_construction(MoveKind k) {
  auto P = [](const std::string& s) { return PauliString::from_letters(s); };
  SurgeryConstruction c;
  switch (k) {
    case MoveKind::Horizontal:
      // 0 = source, 1 = destination (same row; X-type joint measurement)
      c.name = "horizontal movement";
      c.n_patches = 2;
      c.ancillas = {{1, '0'}};
      c.steps = {{'X', 0, 1}, {'Z', 0}};
      c.flows = {{"X", P("XI"), P("IX")}, {"Z", P("ZI"), P("IZ")}};
      c.output_patches = 0b10;
      break;
    case MoveKind::Vertical:
      // 0 = source, 1 = destination (same column; Z-type joint measurement)
      c.name = "vertical movement";
      c.n_patches = 2;
      c.ancillas = {{1, '+'}};
      c.steps = {{'Z', 0, 1}, {'X', 0}};
      c.flows = {{"X", P("XI"), P("IX")}, {"Z", P("ZI"), P("IZ")}};
      c.output_patches = 0b10;
      break;
    case MoveKind::Corner:
      // 0 = source A, 1 = elbow B (below A), 2 = destination D (beside B).
      // Vertical hop then horizontal hop; the trailing Z measurement on B
      // releases the elbow so the state ends on D alone.
      c.name = "corner movement";
      c.n_patches = 3;
      c.ancillas = {{1, '+'}, {2, '0'}};
      c.steps = {{'Z', 0, 1}, {'X', 1, 2}, {'X', 0}, {'Z', 1}};
      c.flows = {{"X", P("XII"), P("IIX")}, {"Z", P("ZII"), P("IIZ")}};
      c.output_patches = 0b100;
      break;
  }
  return c;
}

SurgeryConstruction tswap_construction(TswapCase cs) {
  auto P = [](int n, int site, char p) {
    PauliString s = PauliString::single(site, p);
    (void)n;
    return s;
  };
  SurgeryConstruction c;
  if (cs == TswapCase::Identity) {
    c.name = "tile swap (identity case)";
    c.n_patches = 2;
    c.steps = {};
    c.flows = {{"X0", P(2, 0, 'X'), P(2, 0, 'X')},
               {"Z0", P(2, 0, 'Z'), P(2, 0, 'Z')},
               {"X1", P(2, 1, 'X'), P(2, 1, 'X')},
               {"Z1", P(2, 1, 'Z'), P(2, 1, 'Z')}};
    c.output_patches = 0b11;
    return c;
  }
  // Patches: 0 = A1, 1 = B1, 2 = A2, 3 = D2, 4 = C2, 5 = D1.
  // Qubit alpha walks A1 -> B1 -> A2, beta walks D2 -> C2 -> D1; all hops
  // are in-row, so every joint measurement is X-type and every release is
  // a Z measurement.
  c.name = "tile swap (qubits in A1 and D2)";
  c.n_patches = 6;
  c.ancillas = {{1, '0'}, {2, '0'}, {4, '0'}, {5, '0'}};
  c.steps = {
      {'X', 0, 1},  // merge A1, B1
      {'X', 3, 4},  // merge D2, C2
      {'X', 1, 2},  // merge B1, A2
      {'X', 4, 5},  // merge C2, D1
      {'Z', 3},     // measure D2
      {'Z', 0},     // measure A1
      {'Z', 1},     // measure B1
      {'Z', 4},     // measure C2
  };
  c.flows = {{"X of A1-qubit", P(6, 0, 'X'), P(6, 2, 'X')},
             {"Z of A1-qubit", P(6, 0, 'Z'), P(6, 2, 'Z')},
             {"X of D2-qubit", P(6, 3, 'X'), P(6, 5, 'X')},
             {"Z of D2-qubit", P(6, 3, 'Z'), P(6, 5, 'Z')}};
  c.output_patches = 0b100100;
  return c;
}

SurgeryConstruction tcnot_construction(TcnotCase cs) {
  auto S = [](int site, char p) { return PauliString::single(site, p); };
  SurgeryConstruction c;
  if (cs == TcnotCase::Identity) {
    c.name = "tile CNOT (identity case)";
    c.n_patches = 2;
    c.steps = {};
    c.flows = {{"X0", S(0, 'X'), S(0, 'X')},
               {"Z0", S(0, 'Z'), S(0, 'Z')},
               {"X1", S(1, 'X'), S(1, 'X')},
               {"Z1", S(1, 'Z'), S(1, 'Z')}};
    c.output_patches = 0b11;
    return c;
  }
  // Patches: 0 = A1, 1 = B1, 2 = D1, 3 = D2, 4 = C2.
  // Control moves A1 -> B1 and target D2 -> C2 (in-row hops), then the
  // elbow ancilla D1 (below B1, beside C2) runs the measurement-based
  // CNOT: joint X with the target, joint Z with the control, X readout.
  c.name = "tile CNOT (control A1, target D2)";
  c.n_patches = 5;
  c.ancillas = {{1, '0'}, {4, '0'}, {2, '0'}};
  c.steps = {
      {'X', 0, 1},  // merge A1, B1
      {'X', 3, 4},  // merge D2, C2
      {'Z', 0},     // measure A1
      {'Z', 3},     // measure D2
      {'X', 2, 4},  // merge D1, C2
      {'Z', 1, 2},  // merge B1, D1
      {'X', 2},     // measure D1
  };
  auto two = [&](int a, char pa, int b, char pb) {
    return S(a, pa).times(S(b, pb));
  };
  c.flows = {{"X on control", S(0, 'X'), two(1, 'X', 4, 'X')},
             {"Z on control", S(0, 'Z'), S(1, 'Z')},
             {"X on target", S(3, 'X'), S(4, 'X')},
             {"Z on target", S(3, 'Z'), two(1, 'Z', 4, 'Z')}};
  c.output_patches = 0b10010;
  return c;
}

VerifyResult verify_cnot_construction(CnotVariant v) {
  return verify_construction(cnot_construction(v));
}
VerifyResult verify_move(MoveKind k) {
  return verify_construction(move_construction(k));
}
VerifyResult verify_tswap(TswapCase c) {
  return verify_construction(tswap_construction(c));
}
VerifyResult verify_tcnot(TcnotCase c) {
  return verify_construction(tcnot_construction(c));
}

std::vector<SurgeryConstruction> single_step_mutants(
    const SurgeryConstruction& c) {
  std::vector<SurgeryConstruction> out;
  for (size_t k = 0; k < c.steps.size(); k++) {
    SurgeryConstruction flipped = c;
    flipped.name += " [mutant: flip step " + std::to_string(k + 1) + "]";
    flipped.steps[k].basis = flipped.steps[k].basis == 'X' ? 'Z' : 'X';
    out.push_back(std::move(flipped));

    SurgeryConstruction dropped = c;
    dropped.name += " [mutant: drop step " + std::to_string(k + 1) + "]";
    dropped.steps.erase(dropped.steps.begin() + static_cast<long>(k));
    out.push_back(std::move(dropped));
  }
  return out;
}

std::vector<SurgerySuiteEntry> run_surgery_suite() {
  std::vector<std::pair<std::string, SurgeryConstruction>> cases = {
      {"cnot-ancilla-zero", cnot_construction(CnotVariant::AncillaZero)},
      {"cnot-ancilla-plus", cnot_construction(CnotVariant::AncillaPlus)},
      {"move-horizontal", move_construction(MoveKind::Horizontal)},
      {"move-vertical", move_construction(MoveKind::Vertical)},
      {"move-corner", move_construction(MoveKind::Corner)},
      {"t-swap-a1-d2", tswap_construction(TswapCase::A1D2)},
      {"t-cnot-a1-d2", tcnot_construction(TcnotCase::A1D2)},
  };
  std::vector<SurgerySuiteEntry> table;
  for (auto& [name, c] : cases) {
    SurgerySuiteEntry e;
    e.name = name;
    VerifyResult r = verify_construction(c);
    e.passed = r.ok;
    e.branches = r.branches_checked;
    e.detail = r.detail;
    for (const auto& m : single_step_mutants(c)) {
      e.mutants++;
      if (!verify_construction(m).ok) e.mutants_caught++;
    }
    if (e.mutants_caught != e.mutants) {
      e.passed = false;
      if (e.detail.empty()) e.detail = "an invalid mutant verified as correct";
    }
    table.push_back(std::move(e));
  }
  return table;
}

}  // namespace lsmap
