#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "drat/clause.hpp"

namespace drat {

enum class WarningKind { DeletedClauseMissing, UnitDeletionIgnored };

inline std::string_view to_string(WarningKind k) {
  switch (k) {
    case WarningKind::DeletedClauseMissing:
      return "deleted clause not present in formula, step ignored";
    case WarningKind::UnitDeletionIgnored:
      return "deletion of unit clause ignored";
  }
  return "warning";
}

struct Warning {
  std::size_t step = 0;  // 1-based proof step
  WarningKind kind = WarningKind::DeletedClauseMissing;
  SourceClause clause;

  friend bool operator==(const Warning&, const Warning&) = default;
};

enum class RejectReason { RatCheckFailed, EmptyClauseNotAt };

inline std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::RatCheckFailed: return "RAT check failed";
    case RejectReason::EmptyClauseNotAt: return "empty clause not AT";
  }
  return "rejected";
}

struct Rejection {
  std::size_t step = 0;  // 1-based proof step
  RejectReason reason = RejectReason::RatCheckFailed;
  SourceClause clause;
  std::optional<Literal> pivot;
  // First resolvent (in canonical order) whose AT check failed. Absent when
  // the clause failed AT and had no pivot to resolve on.
  std::optional<std::vector<Literal>> failed_resolvent;

  friend bool operator==(const Rejection&, const Rejection&) = default;
};

enum class Verdict { Verified, Rejected, NoEmptyClause };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Rejected: return "rejected";
    case Verdict::NoEmptyClause: return "no empty clause";
  }
  return "unknown";
}

struct CheckReport {
  Verdict verdict = Verdict::NoEmptyClause;
  std::optional<Rejection> rejection;  // set iff verdict == Rejected
  // 1-based step of the accepted empty clause; set iff verdict == Verified
  std::optional<std::size_t> empty_clause_step;
  std::vector<Warning> warnings;

  bool verified() const { return verdict == Verdict::Verified; }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

}  // namespace drat
