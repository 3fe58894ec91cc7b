#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsmap/pauli.hpp"

namespace lsmap {

struct MeasurementOutcome {
  // Deterministic outcomes report their value as a symbolic sign (an
  // operator already in the stabilizer group); random ones mint a fresh
  // outcome variable.
  bool deterministic = false;
  bool collapsed_logical = false;  // acted on a tracked degree of freedom
  int outcome_var = -1;            // for random measurements
  PauliString value;               // for deterministic: group member == op
};

// Logical-level stabilizer tableau with symbolically tracked measurement
// phases. Stabilizer generators and tracked logical operators evolve
// under Pauli measurements by the standard generator-replacement rule;
// every random outcome becomes a fresh boolean variable so a single
// symbolic run covers all branches.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(int n_patches);

  int n_patches() const { return n_; }
  int n_outcomes() const { return n_outcomes_; }

  void add_stabilizer(const PauliString& s);
  int track(const std::string& name, const PauliString& p);
  const PauliString& tracked(int idx) const { return tracked_[idx]; }
  const std::vector<PauliString>& stabilizers() const { return stabs_; }

  // Standard stabilizer measurement of a Hermitian Pauli string.
  //  - anticommutes with a generator: random outcome, generator replaced
  //    by (-1)^{m} op, anticommuting generators/tracked multiplied by the
  //    replaced one;
  //  - in the group (up to sign): deterministic, tableau unchanged;
  //  - commutes but outside the group: measures a tracked logical; the
  //    anticommuting tracked operator is consumed into the stabilizer.
  // A forced value may pin the branch of a random measurement; forcing a
  // deterministic measurement against its value throws.
  MeasurementOutcome measure(const PauliString& op,
                             std::optional<bool> forced = std::nullopt);

  // Is p equal to (phase) * target modulo the stabilizer group? If so the
  // returned string has the target's letters and carries the phase.
  std::optional<PauliString> reduce_to(const PauliString& p,
                                       const PauliString& target) const;

  // Membership with phase extraction: the group element equal to p's
  // letters, if any.
  std::optional<PauliString> group_member(const PauliString& p) const;

  // Commutation and independence of generators, pairing of tracked
  // operators. Returns a description of the first broken invariant.
  std::optional<std::string> broken_invariant() const;

  // Outcome substitutions recorded by forced measurements.
  std::uint64_t forced_mask() const { return forced_mask_; }
  std::uint64_t forced_values() const { return forced_values_; }

 private:
  int n_;
  int n_outcomes_ = 0;
  std::vector<PauliString> stabs_;
  std::vector<PauliString> tracked_;
  std::vector<std::string> tracked_names_;
  std::uint64_t forced_mask_ = 0;
  std::uint64_t forced_values_ = 0;
};

}  // namespace lsmap
