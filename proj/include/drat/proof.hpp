#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "drat/clause.hpp"

namespace drat {

enum class StepKind { Add, Delete };

struct ProofStep {
  StepKind kind = StepKind::Add;
  SourceClause clause;
  // Set for every step after the first added empty clause; such steps are
  // kept for conversion but never checked.
  bool ignored = false;

  bool is_empty_add() const { return kind == StepKind::Add && clause.empty(); }

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct Proof {
  std::vector<ProofStep> steps;

  // Re-derives the `ignored` flags from step order.
  void mark_ignored() {
    bool seen_empty = false;
    for (auto& s : steps) {
      s.ignored = seen_empty;
      if (s.is_empty_add()) seen_empty = true;
    }
  }

  // 0-based index of the first added empty clause.
  std::optional<std::size_t> first_empty_add() const {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].is_empty_add()) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const Proof&, const Proof&) = default;
};

}  // namespace drat
