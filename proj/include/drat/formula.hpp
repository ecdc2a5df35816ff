#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "drat/clause.hpp"

namespace drat {

using ClauseId = std::uint32_t;

// A multiset of clauses. Every stored copy gets its own id; ids are never
// reused, so stale references to deleted copies stay detectable.
//
// Invariant: occurrences(l) lists exactly the live ids whose clause
// contains l, and copies_ lists exactly the live ids per canonical clause.
class Formula {
 public:
  Formula() = default;

  std::uint64_t declared_vars = 0;
  std::uint64_t declared_clauses = 0;

  ClauseId add(SourceClause clause) {
    const auto id = static_cast<ClauseId>(entries_.size());
    for (Literal l : clause.canonical()) occurrences_[l].push_back(id);
    copies_[clause.canonical()].push_back(id);
    entries_.push_back({std::move(clause), true});
    ++live_;
    return id;
  }

  // Removes one copy of the clause. A copy with the same textual literal
  // order is preferred; otherwise the most recently added copy goes.
  // Returns the removed id, or nullopt when no copy is present.
  std::optional<ClauseId> remove_one(const SourceClause& clause) {
    auto it = copies_.find(clause.canonical());
    if (it == copies_.end()) return std::nullopt;
    auto& ids = it->second;
    auto pick = std::find_if(ids.rbegin(), ids.rend(), [&](ClauseId id) {
      return entries_[id].clause == clause;
    });
    const ClauseId id = pick != ids.rend() ? *pick : ids.back();
    ids.erase(std::find(ids.begin(), ids.end(), id));
    if (ids.empty()) copies_.erase(it);
    for (Literal l : entries_[id].clause.canonical()) {
      auto occ = occurrences_.find(l);
      auto& list = occ->second;
      list.erase(std::find(list.begin(), list.end(), id));
      if (list.empty()) occurrences_.erase(occ);
    }
    entries_[id].live = false;
    --live_;
    return id;
  }

  std::size_t count(const Clause& clause) const {
    auto it = copies_.find(clause);
    return it == copies_.end() ? 0 : it->second.size();
  }
  bool contains(const Clause& clause) const { return count(clause) != 0; }

  std::span<const ClauseId> occurrences(Literal l) const {
    auto it = occurrences_.find(l);
    if (it == occurrences_.end()) return {};
    return it->second;
  }

  const SourceClause& clause(ClauseId id) const { return entries_[id].clause; }
  bool live(ClauseId id) const {
    return id < entries_.size() && entries_[id].live;
  }

  // Number of live clauses.
  std::size_t size() const { return live_; }
  bool empty() const { return live_ == 0; }
  // One past the largest id ever handed out.
  ClauseId id_bound() const { return static_cast<ClauseId>(entries_.size()); }

  std::vector<ClauseId> live_ids() const {
    std::vector<ClauseId> ids;
    ids.reserve(live_);
    for (ClauseId id = 0; id < entries_.size(); ++id) {
      if (entries_[id].live) ids.push_back(id);
    }
    return ids;
  }

  // Canonical clauses of all live copies, sorted; equal multisets give
  // equal vectors.
  std::vector<Clause> sorted_clauses() const {
    std::vector<Clause> out;
    out.reserve(live_);
    for (const auto& e : entries_) {
      if (e.live) out.push_back(e.clause.canonical());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Multiset equality; header counts are not compared.
  friend bool operator==(const Formula& a, const Formula& b) {
    return a.size() == b.size() && a.sorted_clauses() == b.sorted_clauses();
  }

 private:
  struct Entry {
    SourceClause clause;
    bool live;
  };

  std::vector<Entry> entries_;
  std::unordered_map<Literal, std::vector<ClauseId>> occurrences_;
  std::unordered_map<Clause, std::vector<ClauseId>, ClauseHash> copies_;
  std::size_t live_ = 0;
};

}  // namespace drat
