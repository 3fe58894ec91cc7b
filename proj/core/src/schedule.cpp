#include "lsmap/schedule.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace lsmap {

namespace {

constexpr std::int64_t kInfeasible = std::numeric_limits<std::int64_t>::max();

struct DirectedEdge {
  int from;
  int to;
};

// Longest-path (ASAP) starts over a directed graph with node weights.
// Returns kInfeasible makespan if the graph has a cycle.
std::int64_t asap_starts(int n, const std::vector<DirectedEdge>& edges,
                         const std::vector<std::int64_t>& dur,
                         std::vector<std::int64_t>* starts_out) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (size_t i = 0; i < edges.size(); i++) {
    out[edges[i].from].push_back(static_cast<int>(i));
    indeg[edges[i].to]++;
  }
  std::vector<std::int64_t> start(n, 0);
  std::vector<int> ready;
  for (int v = n - 1; v >= 0; v--)
    if (indeg[v] == 0) ready.push_back(v);
  int seen = 0;
  std::int64_t makespan = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    seen++;
    makespan = std::max(makespan, start[v] + dur[v]);
    for (int ei : out[v]) {
      int w = edges[ei].to;
      start[w] = std::max(start[w], start[v] + dur[v]);
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (seen != n) return kInfeasible;
  if (starts_out) *starts_out = start;
  return makespan;
}

std::vector<std::int64_t> durations_for(const Qodg& g, const TimingModel& t,
                                        ArchKind arch) {
  std::vector<std::int64_t> dur;
  dur.reserve(g.nodes.size());
  for (const auto& ins : g.nodes) dur.push_back(t.duration(ins.kind, arch));
  return dur;
}

int role_on(const Instruction& ins, int q) {
  return ins.qubits.size() == 2 && ins.qubits[1] == q ? 1 : 0;
}

// Per-qubit serialization beyond the consecutive-pair edges: ops sharing
// a qubit run in stream order, except inside a maximal run of CNOTs that
// all share the qubit in the same role (those reorder freely through the
// name-edge disjunctions). Emitted as all-pairs edges between consecutive
// runs; `flip` reverses the stream for ALAP scheduling.
std::vector<DirectedEdge> block_edges(const Qodg& g, bool flip) {
  std::vector<DirectedEdge> out;
  for (int q = 0; q < g.n_qubits; q++) {
    std::vector<int> nodes;
    for (int v = 0; v < static_cast<int>(g.nodes.size()); v++)
      if (g.nodes[v].uses(q)) nodes.push_back(v);
    if (flip) std::reverse(nodes.begin(), nodes.end());
    std::vector<std::vector<int>> blocks;
    for (int v : nodes) {
      bool commutable =
          !blocks.empty() && g.nodes[v].kind == GateKind::Cnot &&
          g.nodes[blocks.back().back()].kind == GateKind::Cnot &&
          role_on(g.nodes[v], q) == role_on(g.nodes[blocks.back().back()], q);
      if (commutable)
        blocks.back().push_back(v);
      else
        blocks.push_back({v});
    }
    for (size_t b = 0; b + 1 < blocks.size(); b++)
      for (int u : blocks[b])
        for (int v : blocks[b + 1]) out.push_back({u, v});
  }
  return out;
}

struct Solved {
  std::vector<std::int64_t> start;
  std::int64_t makespan = kInfeasible;
};

// Branch-and-bound over name-edge orientations. Orientation entry `false`
// keeps the stream order (from -> to), `true` flips it. The bound is the
// longest path over the fixed edges plus the already oriented name edges,
// which never overestimates the completed makespan.
struct ExactSolver {
  int n;
  const std::vector<std::int64_t>& dur;
  std::vector<DirectedEdge> work;  // fixed edges + oriented prefix
  std::vector<DirectedEdge> name;
  Solved best;

  ExactSolver(int n_, const std::vector<std::int64_t>& dur_,
              std::vector<DirectedEdge> fixed, std::vector<DirectedEdge> name_)
      : n(n_), dur(dur_), work(std::move(fixed)), name(std::move(name_)) {}

  void dfs(size_t k) {
    std::vector<std::int64_t> starts;
    std::int64_t bound = asap_starts(n, work, dur, &starts);
    if (bound >= best.makespan) return;  // prunes cyclic partials as well
    if (k == name.size()) {
      best.makespan = bound;
      best.start = std::move(starts);
      return;
    }
    work.push_back(name[k]);
    dfs(k + 1);
    work.back() = {name[k].to, name[k].from};
    dfs(k + 1);
    work.pop_back();
  }
};

// Critical-path list scheduling over the same constraint set. Priority is
// the longest path to a sink with every edge in stream orientation; a
// name edge does not gate readiness, it only forbids overlap with an
// already placed commutable partner.
Solved list_schedule(const Qodg& g, const std::vector<std::int64_t>& dur,
                     bool commute, bool flip,
                     const std::vector<DirectedEdge>& hard,
                     const std::vector<DirectedEdge>& name) {
  int n = static_cast<int>(g.nodes.size());
  std::vector<std::int64_t> prio(n, 0);
  {
    std::vector<DirectedEdge> all = hard;
    all.insert(all.end(), name.begin(), name.end());
    std::vector<std::vector<int>> out(n);
    std::vector<int> order;
    std::vector<int> indeg(n, 0);
    for (const auto& e : all) {
      out[e.from].push_back(e.to);
      indeg[e.to]++;
    }
    std::vector<int> ready;
    for (int v = n - 1; v >= 0; v--)
      if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
      int v = ready.back();
      ready.pop_back();
      order.push_back(v);
      for (int w : out[v])
        if (--indeg[w] == 0) ready.push_back(w);
    }
    if (static_cast<int>(order.size()) != n)
      throw std::runtime_error("cycle among dependencies");
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      std::int64_t tail = 0;
      for (int w : out[v]) tail = std::max(tail, prio[w]);
      prio[v] = dur[v] + tail;
    }
  }

  (void)commute;
  (void)flip;
  std::vector<std::vector<int>> hard_in(n);
  for (size_t i = 0; i < hard.size(); i++) hard_in[hard[i].to].push_back(hard[i].from);
  std::vector<int> unplaced(n, 0);
  for (const auto& e : hard) unplaced[e.to]++;

  Solved s;
  s.start.assign(n, 0);
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; step++) {
    int pick = -1;
    for (int v = 0; v < n; v++)
      if (!placed[v] && unplaced[v] == 0 &&
          (pick < 0 || prio[v] > prio[pick]))
        pick = v;
    if (pick < 0) throw std::runtime_error("cycle among dependencies");

    std::int64_t t0 = 0;
    for (int u : hard_in[pick]) t0 = std::max(t0, s.start[u] + dur[u]);
    bool moved = true;
    while (moved) {
      moved = false;
      for (const auto& e : name) {
        int other = e.from == pick ? e.to : e.to == pick ? e.from : -1;
        if (other < 0 || !placed[other]) continue;
        std::int64_t a = s.start[other], b = a + dur[other];
        if (t0 < b && a < t0 + dur[pick]) {
          t0 = b;
          moved = true;
        }
      }
    }
    s.start[pick] = t0;
    placed[pick] = true;
    for (const auto& e : hard)
      if (e.from == pick) unplaced[e.to]--;
  }
  s.makespan = 0;
  for (int v = 0; v < n; v++)
    s.makespan = std::max(s.makespan, s.start[v] + dur[v]);
  return s;
}

Solved solve(const Qodg& g, const std::vector<std::int64_t>& dur,
             const SchedulePolicy& p, bool flip) {
  int n = static_cast<int>(g.nodes.size());
  auto oriented = [&](const Qodg::Edge& e) {
    return flip ? DirectedEdge{e.to, e.from} : DirectedEdge{e.from, e.to};
  };

  if (!p.commute) {
    std::vector<DirectedEdge> all;
    for (const auto& e : g.edges) all.push_back(oriented(e));
    if (p.solver == SchedSolver::List)
      return list_schedule(g, dur, false, flip, all, {});
    Solved s;
    s.makespan = asap_starts(n, all, dur, &s.start);
    if (s.makespan == kInfeasible)
      throw std::runtime_error("cycle among dependencies");
    return s;
  }

  std::vector<DirectedEdge> hard = block_edges(g, flip);
  std::vector<DirectedEdge> name;
  for (const auto& e : g.edges) {
    if (e.kind == DepKind::True)
      hard.push_back(oriented(e));
    else
      name.push_back(oriented(e));
  }
  if (p.solver == SchedSolver::List)
    return list_schedule(g, dur, true, flip, hard, name);
  ExactSolver solver(n, dur, std::move(hard), std::move(name));
  solver.dfs(0);
  if (solver.best.makespan == kInfeasible)
    throw std::runtime_error("cycle among true dependencies");
  return solver.best;
}

}  // namespace

Schedule schedule(const Qodg& g, const TimingModel& t, ArchKind arch,
                  const SchedulePolicy& p) {
  auto dur = durations_for(g, t, arch);
  bool flip = p.direction == SchedDirection::Alap;
  Solved sol = solve(g, dur, p, flip);
  Schedule s;
  s.duration = dur;
  s.makespan = sol.makespan;
  if (!flip) {
    s.start = sol.start;
  } else {
    s.start.resize(sol.start.size());
    for (size_t v = 0; v < sol.start.size(); v++)
      s.start[v] = sol.makespan - (sol.start[v] + dur[v]);
  }
  return s;
}

std::vector<ScheduleViolation> validate_schedule(const Qodg& g,
                                                 const Schedule& s,
                                                 const SchedulePolicy& p) {
  std::vector<ScheduleViolation> out;
  for (size_t i = 0; i < g.edges.size(); i++) {
    const auto& e = g.edges[i];
    std::int64_t end_from = s.start[e.from] + s.duration[e.from];
    std::int64_t end_to = s.start[e.to] + s.duration[e.to];
    if (e.kind == DepKind::True || !p.commute) {
      if (end_from > s.start[e.to])
        out.push_back({static_cast<int>(i),
                       "dependency not met: node " + std::to_string(e.from) +
                           " must finish before node " + std::to_string(e.to)});
    } else {
      bool ij = end_from <= s.start[e.to];
      bool ji = end_to <= s.start[e.from];
      if (!ij && !ji)
        out.push_back({static_cast<int>(i),
                       "commuting CNOTs " + std::to_string(e.from) + " and " +
                           std::to_string(e.to) + " overlap in time"});
    }
  }
  return out;
}

Circuit to_parallel_circuit(const Circuit& c, const Schedule& s) {
  auto gates = c.gates();
  if (gates.size() != s.start.size())
    throw std::invalid_argument("schedule does not cover the circuit");

  std::map<std::int64_t, std::vector<int>> by_start;
  for (size_t v = 0; v < gates.size(); v++)
    by_start[s.start[v]].push_back(static_cast<int>(v));

  Circuit out;
  out.n_qubits = c.n_qubits;
  int next_id = 0;
  std::int64_t prev_start = -1;
  for (auto& [start, members] : by_start) {
    if (prev_start >= 0) {
      std::int64_t gap = start - prev_start;
      if (gap > 1) {
        Instruction w;
        w.id = next_id++;
        w.kind = GateKind::Wait;
        w.wait_cycles = static_cast<int>(gap);
        out.steps.push_back({w});
      }
    }
    std::vector<bool> used(c.n_qubits, false);
    std::vector<Instruction> bundle;
    for (int v : members) {
      for (int q : gates[v]->qubits) {
        if (used[q])
          throw std::invalid_argument(
              "invalid schedule: two instructions on q" + std::to_string(q) +
              " start in the same cycle");
        used[q] = true;
      }
      Instruction ins = *gates[v];
      ins.id = next_id++;
      bundle.push_back(std::move(ins));
    }
    out.steps.push_back(std::move(bundle));
    prev_start = start;
  }
  return out;
}

}  // namespace lsmap
