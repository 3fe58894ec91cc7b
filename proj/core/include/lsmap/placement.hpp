#pragma once

#include <cstdint>
#include <vector>

#include "lsmap/arch.hpp"
#include "lsmap/circuit.hpp"

namespace lsmap {

// Symmetric CNOT interaction counts between qubit pairs.
struct InteractionMatrix {
  int n = 0;
  std::vector<int> w;  // n * n

  int at(int k, int l) const { return w[k * n + l]; }
  int& at(int k, int l) { return w[k * n + l]; }
};

InteractionMatrix interaction_matrix(const Circuit& c);

// Manhattan distances between data locations, indexed like
// Architecture::index_of.
struct DistanceMatrix {
  int m = 0;
  std::vector<int> d;

  int at(int i, int j) const { return d[i * m + j]; }
};

DistanceMatrix distance_matrix(const Architecture& a);

// Injective qubit -> location assignment.
struct Placement {
  std::vector<Location> loc;  // indexed by qubit
};

std::int64_t qap_cost(const Placement& p, const InteractionMatrix& r,
                      const DistanceMatrix& d, const Architecture& a);

// Exact quadratic-assignment placement: minimizes the summed
// interaction-count x Manhattan-distance cost by branch-and-bound with an
// admissible remaining-cost bound. Ties resolve to the lexicographically
// smallest assignment. Intended for desk-scale instances.
Placement place_smart(const Circuit& c, const Architecture& a);

// Baseline: qubit i goes to the i-th location in row-major order.
Placement place_naive(const Circuit& c, const Architecture& a);

}  // namespace lsmap
