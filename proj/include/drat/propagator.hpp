#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "drat/formula.hpp"

namespace drat {

enum class PropagationResult { Conflict, Fixpoint };

// Unit propagation over a clause database with two watched literals per
// clause of length >= 2. Unit and empty clauses are kept aside and applied
// on every reset.
//
// Variables are renumbered densely on first sight so arbitrary DIMACS
// indices up to 2^31 - 1 cost no more than small ones.
//
// Invariant: between queries the assignment is empty. Watches are placed
// on literals 0 and 1 of each stored clause and only move during
// propagation, so any pair of positions is valid once the trail is undone.
class Propagator {
 public:
  Propagator() = default;

  explicit Propagator(const Formula& formula) {
    for (ClauseId id : formula.live_ids()) add(id, formula.clause(id).canonical());
  }

  void add(ClauseId id, const Clause& clause) {
    if (clauses_.size() <= id) {
      clauses_.resize(id + 1);
      alive_.resize(id + 1, false);
    }
    alive_[id] = true;
    auto& lits = clauses_[id];
    lits.clear();
    for (Literal l : clause) lits.push_back(internal(l));
    if (lits.empty()) {
      ++empty_clauses_;
    } else if (lits.size() == 1) {
      units_.push_back(id);
    } else {
      watches_[lits[0]].push_back(id);
      watches_[lits[1]].push_back(id);
    }
  }

  // Watch lists drop dead ids lazily during propagation.
  void remove(ClauseId id) {
    if (id >= alive_.size() || !alive_[id]) return;
    alive_[id] = false;
    const auto& lits = clauses_[id];
    if (lits.empty()) {
      --empty_clauses_;
    } else if (lits.size() == 1) {
      std::erase(units_, id);
    }
  }

  // Assigns every unit clause and propagates. Returns false on conflict.
  // The trail must be empty on entry.
  bool assign_root() {
    if (empty_clauses_ > 0) return false;
    for (ClauseId id : units_) {
      if (!assume_internal(clauses_[id][0])) return false;
    }
    return propagate();
  }

  // Assigns `l` true. Returns false if it is already false. Assuming an
  // already-true literal is a no-op.
  bool assume(Literal l) { return assume_internal(internal(l)); }

  // Propagates the pending trail to a fixpoint. Returns false on conflict.
  bool propagate() {
    while (head_ < trail_.size()) {
      const std::uint32_t falsified = trail_[head_++] ^ 1u;
      auto& ws = watches_[falsified];
      std::size_t i = 0, j = 0;
      const std::size_t n = ws.size();
      while (i < n) {
        const ClauseId id = ws[i++];
        if (!alive_[id]) continue;
        auto& c = clauses_[id];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (value(c[0]) == kTrue) {
          ws[j++] = id;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) != kFalse) {
            std::swap(c[1], c[k]);
            watches_[c[1]].push_back(id);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = id;
        if (value(c[0]) == kFalse) {
          while (i < n) ws[j++] = ws[i++];
          ws.resize(j);
          head_ = trail_.size();
          return false;
        }
        assign(c[0]);
      }
      ws.resize(j);
    }
    return true;
  }

  std::size_t trail_size() const { return trail_.size(); }

  void backtrack(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[trail_.back() >> 1] = kUnassigned;
      trail_.pop_back();
    }
    head_ = trail_.size();
  }

  // Root units plus assumptions, propagated; the trail is undone before
  // returning.
  PropagationResult run(std::span<const Literal> assumptions) {
    PropagationResult result = PropagationResult::Fixpoint;
    if (!assign_root()) {
      result = PropagationResult::Conflict;
    } else {
      for (Literal l : assumptions) {
        if (!assume(l)) {
          result = PropagationResult::Conflict;
          break;
        }
      }
      if (result == PropagationResult::Fixpoint && !propagate()) {
        result = PropagationResult::Conflict;
      }
    }
    backtrack(0);
    return result;
  }

  // Truth value of `l` under the current trail: 1 true, -1 false, 0 open.
  int value_of(Literal l) {
    const auto v = value(internal(l));
    return v == kTrue ? 1 : v == kFalse ? -1 : 0;
  }

 private:
  static constexpr std::int8_t kUnassigned = 0;
  static constexpr std::int8_t kTrue = 1;
  static constexpr std::int8_t kFalse = -1;

  // Internal literal: 2 * dense_var + (negative ? 1 : 0).
  std::uint32_t internal(Literal l) {
    auto [it, inserted] = dense_.try_emplace(
        l.variable(), static_cast<std::uint32_t>(values_.size()));
    if (inserted) {
      values_.push_back(kUnassigned);
      watches_.resize(2 * values_.size());
    }
    return 2 * it->second + (l.positive() ? 0u : 1u);
  }

  std::int8_t value(std::uint32_t ilit) const {
    const std::int8_t v = values_[ilit >> 1];
    return (ilit & 1) ? static_cast<std::int8_t>(-v) : v;
  }

  void assign(std::uint32_t ilit) {
    values_[ilit >> 1] = (ilit & 1) ? kFalse : kTrue;
    trail_.push_back(ilit);
  }

  bool assume_internal(std::uint32_t ilit) {
    const auto v = value(ilit);
    if (v == kFalse) return false;
    if (v == kUnassigned) assign(ilit);
    return true;
  }

  std::unordered_map<std::uint32_t, std::uint32_t> dense_;
  std::vector<std::int8_t> values_;
  std::vector<std::vector<ClauseId>> watches_;
  std::vector<std::vector<std::uint32_t>> clauses_;
  std::vector<bool> alive_;
  std::vector<ClauseId> units_;
  std::size_t empty_clauses_ = 0;
  std::vector<std::uint32_t> trail_;
  std::size_t head_ = 0;
};

// UCP fixpoint of `formula` under `assumptions`. Contradictory assumptions
// yield Conflict.
inline PropagationResult propagate(const Formula& formula,
                                   std::span<const Literal> assumptions) {
  Propagator p(formula);
  return p.run(assumptions);
}

}  // namespace drat
