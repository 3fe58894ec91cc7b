#include "lsmap/placement.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lsmap {

InteractionMatrix interaction_matrix(const Circuit& c) {
  InteractionMatrix r;
  r.n = c.n_qubits;
  r.w.assign(static_cast<size_t>(r.n) * r.n, 0);
  for (const auto* ins : c.gates()) {
    if (ins->kind != GateKind::Cnot) continue;
    int k = ins->qubits[0], l = ins->qubits[1];
    r.at(k, l)++;
    r.at(l, k)++;
  }
  return r;
}

DistanceMatrix distance_matrix(const Architecture& a) {
  DistanceMatrix d;
  d.m = a.n_locations();
  d.d.assign(static_cast<size_t>(d.m) * d.m, 0);
  for (int i = 0; i < d.m; i++)
    for (int j = 0; j < d.m; j++) {
      Location li = a.location_at(i), lj = a.location_at(j);
      d.d[i * d.m + j] =
          std::abs(li.row - lj.row) + std::abs(li.col - lj.col);
    }
  return d;
}

std::int64_t qap_cost(const Placement& p, const InteractionMatrix& r,
                      const DistanceMatrix& d, const Architecture& a) {
  std::int64_t cost = 0;
  for (int k = 0; k < r.n; k++)
    for (int l = k + 1; l < r.n; l++)
      if (r.at(k, l) > 0)
        cost += static_cast<std::int64_t>(r.at(k, l)) *
                d.at(a.index_of(p.loc[k]), a.index_of(p.loc[l]));
  return cost;
}

namespace {

struct QapSolver {
  const InteractionMatrix& r;
  const DistanceMatrix& d;
  int n;
  int m;
  std::vector<int> assign;      // qubit -> location index, -1 unassigned
  std::vector<bool> used;       // location taken
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<int> best_assign;

  QapSolver(const InteractionMatrix& r_, const DistanceMatrix& d_)
      : r(r_), d(d_), n(r_.n), m(d_.m) {
    assign.assign(n, -1);
    used.assign(m, false);
  }

  // Admissible completion bound: every pair with at least one unassigned
  // qubit is charged its interaction count times the least distance still
  // achievable for that pair.
  std::int64_t remaining_bound(int next) const {
    std::int64_t bound = 0;
    int min_free_pair = std::numeric_limits<int>::max();
    std::vector<int> free_locs;
    for (int i = 0; i < m; i++)
      if (!used[i]) free_locs.push_back(i);
    for (size_t x = 0; x < free_locs.size(); x++)
      for (size_t y = x + 1; y < free_locs.size(); y++)
        min_free_pair = std::min(min_free_pair,
                                 d.at(free_locs[x], free_locs[y]));
    for (int k = 0; k < n; k++)
      for (int l = k + 1; l < n; l++) {
        if (r.at(k, l) == 0) continue;
        bool ka = k < next, la = l < next;
        if (ka && la) continue;
        if (!ka && !la) {
          bound += static_cast<std::int64_t>(r.at(k, l)) * min_free_pair;
          continue;
        }
        int fixed = ka ? assign[k] : assign[l];
        int min_d = std::numeric_limits<int>::max();
        for (int f : free_locs) min_d = std::min(min_d, d.at(fixed, f));
        bound += static_cast<std::int64_t>(r.at(k, l)) * min_d;
      }
    return bound;
  }

  void dfs(int next, std::int64_t cost) {
    if (next == n) {
      if (cost < best) {
        best = cost;
        best_assign = assign;
      }
      return;
    }
    if (cost + remaining_bound(next) >= best) return;
    for (int loc = 0; loc < m; loc++) {
      if (used[loc]) continue;
      std::int64_t added = 0;
      for (int k = 0; k < next; k++)
        if (r.at(k, next) > 0)
          added += static_cast<std::int64_t>(r.at(k, next)) *
                   d.at(assign[k], loc);
      assign[next] = loc;
      used[loc] = true;
      dfs(next + 1, cost + added);
      used[loc] = false;
      assign[next] = -1;
    }
  }
};

}  // namespace

Placement place_smart(const Circuit& c, const Architecture& a) {
  if (c.n_qubits > a.n_locations())
    throw std::invalid_argument("more qubits than locations");
  InteractionMatrix r = interaction_matrix(c);
  DistanceMatrix d = distance_matrix(a);
  QapSolver solver(r, d);
  solver.dfs(0, 0);
  Placement p;
  for (int q = 0; q < c.n_qubits; q++)
    p.loc.push_back(a.location_at(solver.best_assign[q]));
  return p;
}

Placement place_naive(const Circuit& c, const Architecture& a) {
  if (c.n_qubits > a.n_locations())
    throw std::invalid_argument("more qubits than locations");
  Placement p;
  for (int q = 0; q < c.n_qubits; q++) p.loc.push_back(a.location_at(q));
  return p;
}

}  // namespace lsmap
