#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "drat/formula.hpp"
#include "drat/proof.hpp"
#include "drat/propagator.hpp"
#include "drat/report.hpp"

namespace drat {

// Progress notifications for verbose output. Literal lists are canonical
// except `lemma`, which keeps the proof's order.
struct TraceEvent {
  enum class Kind {
    AtCheck,        // lemma checked for AT; `passed` is the outcome
    Resolvent,      // RAT resolvent of lemma and `antecedent` on `pivot`
    Added,          // lemma added to the formula
    Deleted,        // one copy of the lemma removed
    DeleteReorder,  // deletion matched a copy written in another order
  };
  Kind kind;
  std::size_t step = 0;
  std::vector<Literal> lemma{};
  std::optional<Literal> pivot{};
  std::vector<Literal> antecedent{};
  std::vector<Literal> resolvent{};
  bool passed = false;
  bool tautology = false;
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct RatResult {
  bool holds = false;
  bool by_at = false;  // satisfied by the AT check alone
  std::optional<Literal> pivot;
  std::optional<std::vector<Literal>> failed_resolvent;
};

// Forward DRAT checking. The checker owns the evolving formula and the
// propagation state; one instance serves one proof run.
class Checker {
 public:
  explicit Checker(Formula formula, TraceSink trace = {})
      : formula_(std::move(formula)), prop_(formula_), trace_(std::move(trace)) {}

  const Formula& formula() const { return formula_; }

  // UCP on F and the negation of `clause` reaches a conflict.
  bool check_at(const Clause& clause) {
    bool conflict = !prop_.assign_root();
    for (std::size_t i = 0; !conflict && i < clause.size(); ++i) {
      conflict = !prop_.assume(-clause[i]);
    }
    if (!conflict) conflict = !prop_.propagate();
    prop_.backtrack(0);
    return conflict;
  }

  // AT first; otherwise RAT on the first literal as written. Tautological
  // resolvents pass without propagation.
  RatResult check_rat(const SourceClause& lemma, std::size_t step = 0) {
    RatResult result;
    const Clause& c = lemma.canonical();

    bool conflict = !prop_.assign_root();
    for (std::size_t i = 0; !conflict && i < c.size(); ++i) {
      conflict = !prop_.assume(-c[i]);
    }
    if (!conflict) conflict = !prop_.propagate();
    if (trace_) trace_({.kind = TraceEvent::Kind::AtCheck,
          .step = step,
          .lemma = {lemma.literals().begin(), lemma.literals().end()},
          .passed = conflict});
    if (conflict || lemma.empty()) {
      prop_.backtrack(0);
      result.holds = conflict;
      result.by_at = conflict;
      return result;
    }

    const Literal pivot = lemma.front();
    result.pivot = pivot;
    const std::size_t mark = prop_.trail_size();
    result.holds = true;
    // The formula is not mutated while the candidates are walked.
    for (ClauseId id : formula_.occurrences(-pivot)) {
      const Clause& d = formula_.clause(id).canonical();
      bool tautology = false;
      for (Literal l : d) {
        if (l != -pivot && c.contains(-l)) {
          tautology = true;
          break;
        }
      }
      bool ok = tautology;
      if (!tautology) {
        for (Literal l : d) {
          if (l == -pivot) continue;
          if (!prop_.assume(-l)) {
            ok = true;
            break;
          }
        }
        if (!ok) ok = !prop_.propagate();
        prop_.backtrack(mark);
      }
      if (trace_ || !ok) {
        auto resolvent = make_resolvent(c, d, pivot);
        if (trace_) trace_({.kind = TraceEvent::Kind::Resolvent,
              .step = step,
              .lemma = {lemma.literals().begin(), lemma.literals().end()},
              .pivot = pivot,
              .antecedent = {d.begin(), d.end()},
              .resolvent = resolvent,
              .passed = ok,
              .tautology = tautology});
        if (!ok) {
          result.holds = false;
          result.failed_resolvent = std::move(resolvent);
          break;
        }
      }
    }
    prop_.backtrack(0);
    return result;
  }

  // Checks the lemma against the current formula and adds it on success.
  std::optional<Rejection> apply_add(const SourceClause& lemma,
                                     std::size_t step) {
    const RatResult r = check_rat(lemma, step);
    if (!r.holds) {
      return Rejection{
          .step = step,
          .reason = lemma.empty() ? RejectReason::EmptyClauseNotAt
                                  : RejectReason::RatCheckFailed,
          .clause = lemma,
          .pivot = r.pivot,
          .failed_resolvent = r.failed_resolvent};
    }
    const ClauseId id = formula_.add(lemma);
    prop_.add(id, lemma.canonical());
    if (trace_) trace_({.kind = TraceEvent::Kind::Added,
          .step = step,
          .lemma = {lemma.literals().begin(), lemma.literals().end()},
          .passed = true});
    return std::nullopt;
  }

  // Deletions never reject. Length-1 clauses are never deleted, and absent
  // clauses leave the formula untouched; both produce a warning.
  std::optional<Warning> apply_delete(const SourceClause& clause,
                                      std::size_t step) {
    if (clause.size() == 1) {
      return Warning{step, WarningKind::UnitDeletionIgnored, clause};
    }
    const auto removed = formula_.remove_one(clause);
    if (!removed) {
      return Warning{step, WarningKind::DeletedClauseMissing, clause};
    }
    prop_.remove(*removed);
    const bool reordered = !(formula_.clause(*removed) == clause);
    if (trace_) trace_({.kind = reordered ? TraceEvent::Kind::DeleteReorder
                            : TraceEvent::Kind::Deleted,
          .step = step,
          .lemma = {clause.literals().begin(), clause.literals().end()},
          .antecedent = {formula_.clause(*removed).literals().begin(),
                         formula_.clause(*removed).literals().end()},
          .passed = true});
    return std::nullopt;
  }

  // Folds the steps in order; stops at the first accepted empty clause or
  // the first rejected addition.
  CheckReport run(const Proof& proof) {
    CheckReport report;
    for (std::size_t i = 0; i < proof.steps.size(); ++i) {
      const auto& s = proof.steps[i];
      const std::size_t step = i + 1;
      if (s.kind == StepKind::Delete) {
        if (auto w = apply_delete(s.clause, step)) {
          report.warnings.push_back(std::move(*w));
        }
        continue;
      }
      if (auto rej = apply_add(s.clause, step)) {
        report.verdict = Verdict::Rejected;
        report.rejection = std::move(rej);
        return report;
      }
      if (s.clause.empty()) {
        report.verdict = Verdict::Verified;
        report.empty_clause_step = step;
        return report;
      }
    }
    report.verdict = Verdict::NoEmptyClause;
    return report;
  }

 private:
  static std::vector<Literal> make_resolvent(const Clause& c, const Clause& d,
                                             Literal pivot) {
    std::vector<Literal> out(c.begin(), c.end());
    for (Literal l : d) {
      if (l != -pivot && !c.contains(l)) out.push_back(l);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Formula formula_;
  Propagator prop_;
  TraceSink trace_;
};

inline bool check_at(const Formula& formula, const Clause& clause) {
  Propagator p(formula);
  std::vector<Literal> negated;
  negated.reserve(clause.size());
  for (Literal l : clause) negated.push_back(-l);
  return p.run(negated) == PropagationResult::Conflict;
}

inline bool check_rat(const Formula& formula, const SourceClause& clause) {
  Checker checker(formula);
  return checker.check_rat(clause).holds;
}

inline CheckReport check_proof(Formula formula, const Proof& proof,
                               TraceSink trace = {}) {
  Checker checker(std::move(formula), std::move(trace));
  return checker.run(proof);
}

}  // namespace drat
