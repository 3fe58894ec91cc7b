#include "lsmap/tableau.hpp"

#include <stdexcept>

namespace lsmap {

StabilizerTableau::StabilizerTableau(int n_patches) : n_(n_patches) {
  if (n_patches < 1 || n_patches > 32)
    throw std::invalid_argument("patch count out of range");
}

void StabilizerTableau::add_stabilizer(const PauliString& s) {
  for (const auto& g : stabs_)
    if (!g.commutes_with(s))
      throw std::invalid_argument("stabilizers must commute");
  stabs_.push_back(s);
}

int StabilizerTableau::track(const std::string& name, const PauliString& p) {
  tracked_.push_back(p);
  tracked_names_.push_back(name);
  return static_cast<int>(tracked_.size()) - 1;
}

MeasurementOutcome StabilizerTableau::measure(const PauliString& op,
                                              std::optional<bool> forced) {
  if (!op.hermitian() || op.outcome_mask != 0)
    throw std::invalid_argument("measured operator must be a plain Pauli");
  MeasurementOutcome out;

  int donor = -1;
  for (size_t i = 0; i < stabs_.size(); i++)
    if (!stabs_[i].commutes_with(op)) {
      donor = static_cast<int>(i);
      break;
    }

  if (donor >= 0) {
    out.outcome_var = n_outcomes_++;
    PauliString g = stabs_[donor];
    for (size_t i = 0; i < stabs_.size(); i++)
      if (static_cast<int>(i) != donor && !stabs_[i].commutes_with(op))
        stabs_[i] = stabs_[i].times(g);
    for (auto& t : tracked_)
      if (!t.commutes_with(op)) t = t.times(g);
    stabs_[donor] = op.with_outcome(out.outcome_var);
    if (forced) {
      forced_mask_ |= 1ull << out.outcome_var;
      if (*forced) forced_values_ |= 1ull << out.outcome_var;
    }
    return out;
  }

  if (auto member = group_member(op)) {
    out.deterministic = true;
    out.value = *member;
    if (forced) {
      if (member->outcome_mask != 0 || member->iexp != 0)
        throw std::invalid_argument(
            "cannot force a symbolically determined outcome");
      if (*forced != member->neg)
        throw std::invalid_argument(
            "forced outcome contradicts a deterministic measurement");
    }
    return out;
  }

  // Measures a logical degree of freedom: consume the first anticommuting
  // tracked operator into the group.
  out.collapsed_logical = true;
  int consumed = -1;
  for (size_t i = 0; i < tracked_.size(); i++)
    if (!tracked_[i].commutes_with(op)) {
      consumed = static_cast<int>(i);
      break;
    }
  out.outcome_var = n_outcomes_++;
  if (consumed >= 0) {
    PauliString g = tracked_[consumed];
    for (size_t i = 0; i < tracked_.size(); i++)
      if (static_cast<int>(i) != consumed && !tracked_[i].commutes_with(op))
        tracked_[i] = tracked_[i].times(g);
    tracked_.erase(tracked_.begin() + consumed);
    tracked_names_.erase(tracked_names_.begin() + consumed);
  }
  stabs_.push_back(op.with_outcome(out.outcome_var));
  if (forced) {
    forced_mask_ |= 1ull << out.outcome_var;
    if (*forced) forced_values_ |= 1ull << out.outcome_var;
  }
  return out;
}

std::optional<PauliString> StabilizerTableau::group_member(
    const PauliString& p) const {
  // Gaussian elimination over the (x|z) bit vectors, multiplying the
  // actual strings so the phase comes out right. Stabilizers commute, so
  // product order is immaterial.
  auto bits = [](const PauliString& s) {
    return (static_cast<std::uint64_t>(s.x) << 32) | s.z;
  };
  std::vector<PauliString> rows = stabs_;
  PauliString acc = PauliString::identity();
  for (int bit = 63; bit >= 0; bit--) {
    std::uint64_t mask = 1ull << bit;
    int pivot = -1;
    for (size_t i = 0; i < rows.size(); i++)
      if (bits(rows[i]) & mask) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot < 0) continue;
    PauliString prow = rows[pivot];
    rows.erase(rows.begin() + pivot);
    for (auto& r : rows)
      if (bits(r) & mask) r = r.times(prow);
    if ((bits(acc) ^ bits(p)) & mask) acc = acc.times(prow);
  }
  if (acc.x == p.x && acc.z == p.z) return acc;
  return std::nullopt;
}

std::optional<PauliString> StabilizerTableau::reduce_to(
    const PauliString& p, const PauliString& target) const {
  PauliString q = p.times(target);
  auto member = group_member(q);
  if (!member) return std::nullopt;
  PauliString result = p.times(*member);
  if (result.x != target.x || result.z != target.z) return std::nullopt;
  return result;
}

std::optional<std::string> StabilizerTableau::broken_invariant() const {
  for (size_t i = 0; i < stabs_.size(); i++)
    for (size_t j = i + 1; j < stabs_.size(); j++)
      if (!stabs_[i].commutes_with(stabs_[j]))
        return "stabilizer generators do not commute";
  // independence: no nonempty subset multiplies to identity letters
  {
    std::vector<std::uint64_t> rows;
    for (const auto& s : stabs_)
      rows.push_back((static_cast<std::uint64_t>(s.x) << 32) | s.z);
    int rank = 0;
    for (int bit = 63; bit >= 0; bit--) {
      std::uint64_t mask = 1ull << bit;
      int pivot = -1;
      for (size_t i = rank; i < rows.size(); i++)
        if (rows[i] & mask) {
          pivot = static_cast<int>(i);
          break;
        }
      if (pivot < 0) continue;
      std::swap(rows[rank], rows[pivot]);
      for (size_t i = 0; i < rows.size(); i++)
        if (static_cast<int>(i) != rank && (rows[i] & mask))
          rows[i] ^= rows[rank];
      rank++;
    }
    if (rank != static_cast<int>(rows.size()))
      return "stabilizer generators are dependent";
  }
  for (const auto& t : tracked_)
    for (const auto& s : stabs_)
      if (!t.commutes_with(s))
        return "tracked operator anticommutes with a stabilizer";
  return std::nullopt;
}

}  // namespace lsmap
