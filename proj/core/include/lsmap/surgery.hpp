#pragma once

#include <string>
#include <vector>

#include "lsmap/tableau.hpp"

namespace lsmap {

// One joint or single-patch measurement of a surgery sequence.
struct MeasureStep {
  char basis;   // 'X' or 'Z'
  int p1;
  int p2 = -1;  // -1: single-patch destructive measurement
};

// A lattice-surgery construction together with the operator flow it is
// supposed to implement. `flows` map an input logical operator to the
// Pauli it must become on the destination patches, up to the
// outcome-conditioned Pauli frame.
struct SurgeryConstruction {
  std::string name;
  int n_patches = 0;
  std::vector<std::pair<int, char>> ancillas;  // (patch, '0' or '+')
  std::vector<MeasureStep> steps;
  struct Flow {
    std::string name;
    PauliString in;
    PauliString out;
  };
  std::vector<Flow> flows;
  std::uint32_t output_patches = 0;  // correction support mask
};

struct VerifyResult {
  bool ok = true;
  int branches_checked = 0;
  std::string detail;  // first counterexample
  // symbolic flow results, index-aligned with flows (valid when reached)
  std::vector<PauliString> flow_phases;
};

// Runs the sequence symbolically, checks that every flow lands on its
// destination modulo the remaining stabilizers, and per outcome branch
// derives the Pauli correction from the recorded phases, failing on any
// branch where none exists.
VerifyResult verify_construction(const SurgeryConstruction& c);

enum class CnotVariant { AncillaZero, AncillaPlus };
enum class MoveKind { Horizontal, Vertical, Corner };
enum class TswapCase { A1D2, Identity };
enum class TcnotCase { A1D2, Identity };

SurgeryConstruction cnot_construction(CnotVariant v);
SurgeryConstruction move_construction(MoveKind k);
SurgeryConstruction tswap_construction(TswapCase c);
SurgeryConstruction tcnot_construction(TcnotCase c);

VerifyResult verify_cnot_construction(CnotVariant v);
VerifyResult verify_move(MoveKind k);
VerifyResult verify_tswap(TswapCase c = TswapCase::A1D2);
VerifyResult verify_tcnot(TcnotCase c = TcnotCase::A1D2);

// Single-step mutants: each step's basis flipped, and each step dropped.
std::vector<SurgeryConstruction> single_step_mutants(
    const SurgeryConstruction& c);

struct SurgerySuiteEntry {
  std::string name;
  bool passed = false;
  int branches = 0;
  int mutants = 0;
  int mutants_caught = 0;
  std::string detail;
};

// The full verification table behind `lsmap verify`.
std::vector<SurgerySuiteEntry> run_surgery_suite();

}  // namespace lsmap
