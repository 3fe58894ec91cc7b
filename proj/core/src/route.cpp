#include "lsmap/route.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>

namespace lsmap {

namespace {

constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::max();

bool overlaps(std::int64_t s1, std::int64_t e1, std::int64_t s2,
              std::int64_t e2) {
  return s1 < e2 && s2 < e1;
}

// Per-resident timing bookkeeping. Hard bounds distinguish the role a
// CNOT plays on the qubit so commutable CNOTs may reorder; everything
// else serializes.
struct QubitTimes {
  std::int64_t end_any = 0;
  std::int64_t end_nonctrl = 0;  // floor for a new control-role CNOT
  std::int64_t end_nontgt = 0;   // floor for a new target-role CNOT
  // live commutable intervals: (start, end, role)
  std::vector<std::array<std::int64_t, 3>> cnots;
};

struct SimState {
  std::vector<int> occ;             // location index -> resident
  std::vector<Location> where;      // resident -> location
  std::vector<QubitTimes> times;
  std::map<PatchRef, std::vector<std::pair<std::int64_t, std::int64_t>>> busy;
  std::int64_t makespan = 0;
};

int role_of(const Instruction& ins, int q) {
  return ins.qubits.size() == 2 && ins.qubits[1] == q ? 1 : 0;
}

struct Router {
  const Architecture& geom;
  const TimingModel& timing;
  RouterConfig cfg;

  std::vector<Instruction> stream;
  size_t cursor = 0;
  std::deque<Instruction> buffer;

  SimState state;
  std::vector<PlacedOp> committed;
  std::vector<RouteRecord> routes;
  int n_residents = 0;
  int next_id = 0;
  int n_swaps = 0;

  Router(const Architecture& a, const TimingModel& t, const RouterConfig& c)
      : geom(a), timing(t), cfg(c) {}

  std::int64_t duration_of(const Instruction& ins) const {
    return timing.duration(ins.kind, geom.kind());
  }

  bool commutable_with(const Instruction& ins, int q, int role,
                       std::int64_t interval_role) const {
    return cfg.commute && ins.kind == GateKind::Cnot &&
           static_cast<std::int64_t>(role) == interval_role && q >= 0;
  }

  // Earliest feasible start for `ins` against `st`, honouring per-qubit
  // serialization (commutable CNOT pairs only need non-overlap) and patch
  // reservations.
  PlacedOp place(const SimState& st, const Instruction& ins) const {
    PlacedOp op;
    op.ins = ins;
    op.duration = duration_of(ins);
    op.a = st.where[ins.qubits[0]];
    if (ins.qubits.size() == 2) op.b = st.where[ins.qubits[1]];

    std::int64_t lower = 0;
    for (int q : ins.qubits) {
      const auto& qt = st.times[q];
      if (cfg.commute && ins.kind == GateKind::Cnot)
        lower = std::max(lower, role_of(ins, q) == 0 ? qt.end_nonctrl
                                                     : qt.end_nontgt);
      else
        lower = std::max(lower, qt.end_any);
    }

    std::vector<PatchRef> res;
    if (ins.qubits.size() == 2)
      res = geom.reservation({ins.kind, op.a, op.b, 0, op.duration});
    else
      res = geom.data_reservation(op.a);

    std::int64_t t = lower;
    while (true) {
      std::int64_t bump = -1;
      if (cfg.commute && ins.kind == GateKind::Cnot) {
        for (int q : ins.qubits) {
          int role = role_of(ins, q);
          for (const auto& iv : st.times[q].cnots)
            if (iv[2] == role && overlaps(t, t + op.duration, iv[0], iv[1]))
              bump = std::max(bump, iv[1]);
        }
      }
      for (const auto& p : res) {
        auto it = st.busy.find(p);
        if (it == st.busy.end()) continue;
        for (const auto& iv : it->second)
          if (overlaps(t, t + op.duration, iv.first, iv.second))
            bump = std::max(bump, iv.second);
      }
      if (bump < 0) break;
      t = bump;
    }
    op.start = t;
    return op;
  }

  void commit(SimState& st, const PlacedOp& op) const {
    std::int64_t end = op.start + op.duration;
    for (int q : op.ins.qubits) {
      auto& qt = st.times[q];
      qt.end_any = std::max(qt.end_any, end);
      if (op.ins.kind == GateKind::Cnot) {
        if (role_of(op.ins, q) == 0)
          qt.end_nontgt = std::max(qt.end_nontgt, end);
        else
          qt.end_nonctrl = std::max(qt.end_nonctrl, end);
        qt.cnots.push_back({op.start, end,
                            static_cast<std::int64_t>(role_of(op.ins, q))});
      } else {
        qt.end_nonctrl = std::max(qt.end_nonctrl, end);
        qt.end_nontgt = std::max(qt.end_nontgt, end);
      }
      std::int64_t floor = std::min(qt.end_nonctrl, qt.end_nontgt);
      std::erase_if(qt.cnots, [&](const auto& iv) { return iv[1] <= floor; });
    }
    std::vector<PatchRef> res;
    if (op.ins.qubits.size() == 2)
      res = geom.reservation({op.ins.kind, op.a, op.b, 0, op.duration});
    else
      res = geom.data_reservation(op.a);
    for (const auto& p : res) st.busy[p].emplace_back(op.start, end);
    if (op.ins.kind == GateKind::Swap) {
      std::swap(st.occ[geom.index_of(op.a)], st.occ[geom.index_of(op.b)]);
      std::swap(st.where[op.ins.qubits[0]], st.where[op.ins.qubits[1]]);
    }
    st.makespan = std::max(st.makespan, end);
  }

  bool sound_here(const Instruction& ins,
                  const std::vector<Location>& where) const {
    if (ins.qubits.size() != 2) return true;
    Location a = where[ins.qubits[0]], b = where[ins.qubits[1]];
    if (ins.kind == GateKind::Swap) return geom.are_move_neighbors(a, b);
    return geom.are_neighbors(a, b);
  }

  // All BFS-shortest SWAP walks from `src` to a goal location adjacent
  // (in the CNOT sense for CNOTs, movement sense for SWAPs) to `tgt`,
  // enumerated in lexicographic order.
  std::vector<std::vector<Location>> shortest_paths(Location src, Location tgt,
                                                    GateKind kind) const {
    std::vector<Location> goals = kind == GateKind::Swap
                                      ? geom.move_neighbors(tgt)
                                      : geom.neighbors(tgt);
    std::vector<int> dist(geom.n_locations(), -1);
    std::vector<Location> frontier{src};
    dist[geom.index_of(src)] = 0;
    while (!frontier.empty()) {
      std::vector<Location> next;
      for (Location l : frontier)
        for (Location n : geom.move_neighbors(l))
          if (dist[geom.index_of(n)] < 0) {
            dist[geom.index_of(n)] = dist[geom.index_of(l)] + 1;
            next.push_back(n);
          }
      frontier = std::move(next);
    }
    int best = std::numeric_limits<int>::max();
    for (Location g : goals)
      if (g != tgt && dist[geom.index_of(g)] >= 0)
        best = std::min(best, dist[geom.index_of(g)]);
    if (best == std::numeric_limits<int>::max())
      throw std::runtime_error("no route between operand locations");

    std::vector<std::vector<Location>> paths;
    std::vector<Location> walk{src};
    auto is_goal = [&](Location l) {
      return std::find(goals.begin(), goals.end(), l) != goals.end();
    };
    const size_t cap = 512;
    auto dfs = [&](auto&& self, Location cur) -> void {
      if (paths.size() >= cap) return;
      int dcur = dist[geom.index_of(cur)];
      if (dcur == best) {
        if (is_goal(cur)) paths.push_back(walk);
        return;
      }
      for (Location n : geom.move_neighbors(cur)) {
        if (dist[geom.index_of(n)] != dcur + 1) continue;
        if (dist[geom.index_of(n)] > best) continue;
        walk.push_back(n);
        self(self, n);
        walk.pop_back();
      }
    };
    if (best > 0) dfs(dfs, src);
    return paths;
  }

  // Score the path per the sliding-window rule: SWAP cycles minus the
  // cycles interleavable with already emitted work and the buffer prefix,
  // plus the shortest-path cycles remaining for upcoming CNOTs once the
  // layout has moved.
  std::int64_t score_path(const std::vector<Location>& path, size_t ins_pos) {
    std::int64_t swap_dur = timing.duration(GateKind::Swap, geom.kind());

    SimState sim = state;
    for (size_t i = 0; i < ins_pos; i++) commit(sim, place(sim, buffer[i]));
    std::int64_t window_end = sim.makespan;

    std::int64_t credit = 0;
    for (size_t h = 0; h + 1 < path.size(); h++) {
      Instruction sw;
      sw.kind = GateKind::Swap;
      sw.qubits = {sim.occ[geom.index_of(path[h])],
                   sim.occ[geom.index_of(path[h + 1])]};
      PlacedOp op = place(sim, sw);
      commit(sim, op);
      std::int64_t e = std::min(op.start + op.duration, window_end);
      std::int64_t s = std::min(op.start, window_end);
      credit += e - s;
    }
    std::int64_t hops = static_cast<std::int64_t>(path.size()) - 1;
    std::int64_t score = hops * swap_dur - credit;

    // look-ahead on the moved layout
    std::vector<Location> where = sim.where;
    std::int64_t ahead = 0;
    for (size_t i = ins_pos + 1; i < buffer.size(); i++) {
      const Instruction& other = buffer[i];
      if (other.kind != GateKind::Cnot) continue;
      Location a = where[other.qubits[0]], b = where[other.qubits[1]];
      if (geom.are_neighbors(a, b)) continue;
      ahead += hop_distance(a, b, GateKind::Cnot) * swap_dur;
    }
    return score + ahead;
  }

  std::int64_t hop_distance(Location src, Location tgt, GateKind kind) const {
    std::vector<Location> goals = kind == GateKind::Swap
                                      ? geom.move_neighbors(tgt)
                                      : geom.neighbors(tgt);
    std::vector<int> dist(geom.n_locations(), -1);
    std::vector<Location> frontier{src};
    dist[geom.index_of(src)] = 0;
    while (!frontier.empty()) {
      std::vector<Location> next;
      for (Location l : frontier)
        for (Location n : geom.move_neighbors(l))
          if (dist[geom.index_of(n)] < 0) {
            dist[geom.index_of(n)] = dist[geom.index_of(l)] + 1;
            next.push_back(n);
          }
      frontier = std::move(next);
    }
    int best = std::numeric_limits<int>::max();
    for (Location g : goals)
      if (g != tgt && dist[geom.index_of(g)] >= 0)
        best = std::min(best, dist[geom.index_of(g)]);
    return best;
  }

  // Scan the first half of the buffer for a two-qubit gate whose operands
  // are not adjacent, with the layout replayed through any pending SWAPs.
  void route_one() {
    size_t scan = std::max<size_t>(1, cfg.window / 2);
    scan = std::min(scan, buffer.size());

    std::vector<int> occ = state.occ;
    std::vector<Location> where = state.where;
    for (size_t i = 0; i < scan; i++) {
      const Instruction& ins = buffer[i];
      if (ins.qubits.size() == 2) {
        Location a = where[ins.qubits[0]], b = where[ins.qubits[1]];
        bool ok = ins.kind == GateKind::Swap ? geom.are_move_neighbors(a, b)
                                             : geom.are_neighbors(a, b);
        if (!ok) {
          auto paths = shortest_paths(a, b, ins.kind);
          std::int64_t best_score = kNever;
          size_t best = 0;
          for (size_t k = 0; k < paths.size(); k++) {
            std::int64_t sc = score_path(paths[k], i);
            if (sc < best_score) {
              best_score = sc;
              best = k;
            }
          }
          const auto& path = paths[best];
          routes.push_back({ins.id, b, path,
                            static_cast<int>(path.size()) - 1});
          std::vector<Instruction> swaps;
          for (size_t h = 0; h + 1 < path.size(); h++) {
            Instruction sw;
            sw.id = next_id++;
            sw.kind = GateKind::Swap;
            sw.inserted = true;
            sw.qubits = {occ[geom.index_of(path[h])],
                         occ[geom.index_of(path[h + 1])]};
            std::swap(occ[geom.index_of(path[h])],
                      occ[geom.index_of(path[h + 1])]);
            std::swap(where[sw.qubits[0]], where[sw.qubits[1]]);
            swaps.push_back(std::move(sw));
          }
          buffer.insert(buffer.begin() + static_cast<long>(i), swaps.begin(),
                        swaps.end());
          n_swaps += static_cast<int>(swaps.size());
          return;
        }
        if (ins.kind == GateKind::Swap) {
          std::swap(occ[geom.index_of(a)], occ[geom.index_of(b)]);
          std::swap(where[ins.qubits[0]], where[ins.qubits[1]]);
        }
      }
    }
  }

  // Reschedule the buffer ASAP on top of the committed state and emit the
  // earliest timestep bundle.
  void emit_bundle() {
    SimState sim = state;
    std::vector<PlacedOp> placed;
    std::vector<bool> sound;
    for (const auto& ins : buffer) {
      bool ok = sound_here(ins, sim.where);
      PlacedOp op = place(sim, ins);
      commit(sim, op);
      placed.push_back(op);
      sound.push_back(ok);
    }
    // Ops behind a CNOT that still awaits routing may not leave: its SWAPs
    // are not placed yet, so start times past it are provisional.
    size_t cut = buffer.size();
    for (size_t i = 0; i < buffer.size(); i++)
      if (!sound[i]) {
        cut = i;
        break;
      }
    std::int64_t first = kNever;
    for (size_t i = 0; i < cut; i++) first = std::min(first, placed[i].start);
    if (first == kNever)
      throw std::logic_error("router buffer contains no emittable gate");

    std::vector<size_t> emit;
    for (size_t i = 0; i < cut; i++)
      if (placed[i].start == first) emit.push_back(i);
    for (size_t i : emit) {
      commit(state, placed[i]);
      committed.push_back(placed[i]);
    }
    for (auto it = emit.rbegin(); it != emit.rend(); ++it)
      buffer.erase(buffer.begin() + static_cast<long>(*it));
  }

  void refill() {
    while (buffer.size() < static_cast<size_t>(cfg.window) &&
           cursor < stream.size())
      buffer.push_back(stream[cursor++]);
  }

  RoutedCircuit run(const Circuit& scheduled, const Placement& p) {
    if (cfg.window < 2) throw std::invalid_argument("window must be >= 2");

    for (const auto* ins : scheduled.gates()) stream.push_back(*ins);
    next_id = scheduled.next_id();

    Architecture layout = geom;
    n_residents = fill_occupancy(layout, p, scheduled.n_qubits);
    state.occ = layout.occupancy();
    state.where.assign(n_residents, Location{});
    for (int i = 0; i < layout.n_locations(); i++)
      if (state.occ[i] >= 0) state.where[state.occ[i]] = layout.location_at(i);
    state.times.assign(n_residents, {});

    refill();
    while (!buffer.empty()) {
      route_one();
      emit_bundle();
      refill();
    }

    RoutedCircuit rc;
    rc.source = scheduled;
    rc.n_swaps = n_swaps;
    rc.routes = std::move(routes);
    rc.n_residents = n_residents;

    std::stable_sort(committed.begin(), committed.end(),
                     [](const PlacedOp& x, const PlacedOp& y) {
                       return x.start < y.start;
                     });
    rc.ops = committed;
    for (const auto& op : rc.ops)
      rc.makespan = std::max(rc.makespan, op.start + op.duration);

    // assemble the bundled circuit and the layout trace
    int max_q = scheduled.n_qubits - 1;
    for (const auto& op : rc.ops)
      for (int q : op.ins.qubits) max_q = std::max(max_q, q);
    rc.circuit.n_qubits = max_q + 1;

    std::vector<int> trace_occ = layout.occupancy();
    int next_out_id = 0;
    std::int64_t prev_start = -1;
    for (size_t i = 0; i < rc.ops.size();) {
      size_t j = i;
      while (j < rc.ops.size() && rc.ops[j].start == rc.ops[i].start) j++;
      if (prev_start >= 0 && rc.ops[i].start - prev_start > 1) {
        Instruction w;
        w.id = next_out_id++;
        w.kind = GateKind::Wait;
        w.wait_cycles = static_cast<int>(rc.ops[i].start - prev_start);
        rc.circuit.steps.push_back({w});
      }
      std::vector<Instruction> bundle;
      for (size_t k = i; k < j; k++) {
        Instruction ins = rc.ops[k].ins;
        ins.id = next_out_id++;
        bundle.push_back(ins);
        if (rc.ops[k].ins.kind == GateKind::Swap) {
          std::swap(trace_occ[geom.index_of(rc.ops[k].a)],
                    trace_occ[geom.index_of(rc.ops[k].b)]);
          rc.layout_trace.push_back(trace_occ);
        }
      }
      rc.circuit.steps.push_back(std::move(bundle));
      prev_start = rc.ops[i].start;
      i = j;
    }
    return rc;
  }
};

}  // namespace

int fill_occupancy(Architecture& arch, const Placement& p, int n_qubits) {
  arch.clear_occupancy();
  for (int q = 0; q < n_qubits; q++) arch.set_occupant(p.loc[q], q);
  int next = n_qubits;
  for (int i = 0; i < arch.n_locations(); i++)
    if (arch.occupancy()[i] < 0) arch.set_occupant(arch.location_at(i), next++);
  return next;
}

RoutedCircuit route(const Circuit& scheduled, const Architecture& arch,
                    const Placement& p, const TimingModel& t,
                    const RouterConfig& cfg) {
  if (scheduled.n_qubits > arch.n_locations())
    throw std::invalid_argument("more qubits than locations");
  Router r(arch, t, cfg);
  return r.run(scheduled, p);
}

namespace {

// Canonical per-qubit sequence: inside every maximal run of CNOTs that
// share this qubit in the same role, order is immaterial; sort by id.
std::vector<Instruction> canonical_sequence(std::vector<Instruction> seq,
                                            int q) {
  size_t i = 0;
  while (i < seq.size()) {
    size_t j = i;
    auto commut = [&](const Instruction& x) {
      return x.kind == GateKind::Cnot;
    };
    if (commut(seq[i])) {
      int role = role_of(seq[i], q);
      while (j < seq.size() && commut(seq[j]) && role_of(seq[j], q) == role)
        j++;
      std::sort(seq.begin() + static_cast<long>(i),
                seq.begin() + static_cast<long>(j),
                [](const Instruction& x, const Instruction& y) {
                  return x.id < y.id;
                });
      i = j;
    } else {
      i++;
    }
  }
  return seq;
}

}  // namespace

std::vector<std::string> validate_routed(const RoutedCircuit& rc,
                                         const Architecture& arch,
                                         const Placement& p0,
                                         const TimingModel& t) {
  std::vector<std::string> bad;
  Architecture layout = arch;
  int n_res = fill_occupancy(layout, p0, rc.source.n_qubits);
  if (n_res != rc.n_residents)
    bad.push_back("resident count differs from routing");

  // replay the inserted paths: endpoints and BFS-shortest hop counts
  {
    Architecture replay = layout;
    std::map<int, GateKind> kind_of_id;
    for (const auto* ins : rc.source.gates()) kind_of_id[ins->id] = ins->kind;
    for (const auto& r : rc.routes) {
      GateKind routed_kind = kind_of_id.count(r.instruction_id)
                                 ? kind_of_id[r.instruction_id]
                                 : GateKind::Cnot;
      for (size_t h = 0; h + 1 < r.path.size(); h++)
        if (!replay.are_move_neighbors(r.path[h], r.path[h + 1]))
          bad.push_back("path hop between non-adjacent locations");
      // BFS distance over the movement graph
      std::vector<int> dist(replay.n_locations(), -1);
      std::vector<Location> frontier{r.path.front()};
      dist[replay.index_of(r.path.front())] = 0;
      while (!frontier.empty()) {
        std::vector<Location> next;
        for (Location l : frontier)
          for (Location n : replay.move_neighbors(l))
            if (dist[replay.index_of(n)] < 0) {
              dist[replay.index_of(n)] = dist[replay.index_of(l)] + 1;
              next.push_back(n);
            }
        frontier = std::move(next);
      }
      int best = std::numeric_limits<int>::max();
      auto goals = routed_kind == GateKind::Swap
                       ? replay.move_neighbors(r.target)
                       : replay.neighbors(r.target);
      for (Location g : goals)
        if (dist[replay.index_of(g)] >= 0)
          best = std::min(best, dist[replay.index_of(g)]);
      int hops = static_cast<int>(r.path.size()) - 1;
      if (hops != r.bfs_distance || (hops > 0 && hops != best))
        bad.push_back("inserted path length differs from BFS distance for op " +
                      std::to_string(r.instruction_id));
      for (size_t h = 0; h + 1 < r.path.size(); h++)
        replay.apply_swap(r.path[h], r.path[h + 1]);
    }
  }

  // replay execution: adjacency, operand locations, occupancy
  for (const auto& op : rc.ops) {
    if (op.ins.kind == GateKind::Wait) continue;
    Location a = op.a;
    if (layout.occupant(a) != op.ins.qubits[0])
      bad.push_back("operand location out of sync for op " +
                    std::to_string(op.ins.id));
    if (op.ins.qubits.size() == 2) {
      Location b = op.b;
      if (layout.occupant(b) != op.ins.qubits[1])
        bad.push_back("operand location out of sync for op " +
                      std::to_string(op.ins.id));
      bool ok = op.ins.kind == GateKind::Swap
                    ? layout.are_move_neighbors(a, b)
                    : layout.are_neighbors(a, b);
      if (!ok)
        bad.push_back("two-qubit gate between non-neighbours: op " +
                      std::to_string(op.ins.id));
      if (op.ins.kind == GateKind::Swap) layout.apply_swap(a, b);
    }
  }

  // no overlapping primitives with intersecting reservations, and no
  // qubit doing two things at once
  for (size_t i = 0; i < rc.ops.size(); i++) {
    for (size_t j = i + 1; j < rc.ops.size(); j++) {
      const auto& x = rc.ops[i];
      const auto& y = rc.ops[j];
      if (x.start + x.duration <= y.start) break;  // sorted by start
      if (!overlaps(x.start, x.start + x.duration, y.start,
                    y.start + y.duration))
        continue;
      for (int q : x.ins.qubits)
        if (y.ins.uses(q))
          bad.push_back("overlapping ops share qubit q" + std::to_string(q));
      if (x.ins.qubits.size() == 2 && y.ins.qubits.size() == 2) {
        PrimitiveOp px{x.ins.kind, x.a, x.b, x.start, x.duration};
        PrimitiveOp py{y.ins.kind, y.a, y.b, y.start, y.duration};
        if (arch.conflicts(px, py))
          bad.push_back("reservation conflict between ops " +
                        std::to_string(x.ins.id) + " and " +
                        std::to_string(y.ins.id));
      }
    }
  }

  // per-qubit order preserved up to commutable reordering
  for (int q = 0; q < rc.source.n_qubits; q++) {
    std::vector<Instruction> in_seq;
    for (const auto* ins : rc.source.gates())
      if (ins->uses(q)) in_seq.push_back(*ins);
    std::vector<Instruction> out_seq;
    for (const auto& op : rc.ops)
      if (!op.ins.inserted && op.ins.uses(q)) out_seq.push_back(op.ins);
    auto a = canonical_sequence(std::move(in_seq), q);
    auto b = canonical_sequence(std::move(out_seq), q);
    bool same = a.size() == b.size();
    for (size_t k = 0; same && k < a.size(); k++)
      same = a[k].id == b[k].id && a[k].kind == b[k].kind &&
             a[k].qubits == b[k].qubits;
    if (!same)
      bad.push_back("gate order changed on q" + std::to_string(q));
  }

  (void)t;
  return bad;
}

}  // namespace lsmap
