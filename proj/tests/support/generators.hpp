#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "drat/formula.hpp"
#include "drat/proof.hpp"
#include "naive.hpp"

// Random instances for property tests. Everything is driven by an explicit
// seeded engine so failures reproduce.
namespace drat::testing::gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Distinct variables from [1, max_var] with random signs.
inline naive::Lits random_lits(Rng& rng, int max_var, int min_len,
                               int max_len) {
  const int len = std::min(uniform(rng, min_len, max_len), max_var);
  naive::Lits lits;
  while (static_cast<int>(lits.size()) < len) {
    const int v = uniform(rng, 1, max_var);
    if (std::any_of(lits.begin(), lits.end(),
                    [v](int l) { return l == v || l == -v; })) {
      continue;
    }
    lits.push_back(uniform(rng, 0, 1) ? v : -v);
  }
  return lits;
}

inline naive::Cnf random_cnf(Rng& rng, int vars, int clauses, int min_len,
                             int max_len) {
  naive::Cnf cnf;
  for (int i = 0; i < clauses; ++i) {
    cnf.push_back(random_lits(rng, vars, min_len, max_len));
  }
  return cnf;
}

inline Formula to_formula(const naive::Cnf& cnf, int vars = 0) {
  Formula f;
  for (const auto& c : cnf) f.add(naive::to_clause(c));
  f.declared_vars = static_cast<std::uint64_t>(vars);
  f.declared_clauses = cnf.size();
  return f;
}

// Arbitrary step sequences, not meant to be valid proofs.
inline Proof random_proof(Rng& rng, int steps, int max_var, int max_len) {
  Proof p;
  for (int i = 0; i < steps; ++i) {
    const auto kind = uniform(rng, 0, 3) == 0 ? StepKind::Delete : StepKind::Add;
    p.steps.push_back(
        {kind, naive::to_clause(random_lits(rng, max_var, 0, max_len)), false});
  }
  p.mark_ignored();
  return p;
}

namespace detail {

// Post-order walk of a DPLL tree over variables 1..vars. Every node clause
// negates its partial assignment; it is AT once both children are present,
// and at a leaf it contains a falsified input clause.
inline bool refute(const naive::Cnf& cnf, int vars, naive::Lits& partial,
                   std::vector<naive::Lits>& lemmas) {
  for (const auto& c : cnf) {
    const bool falsified = std::all_of(c.begin(), c.end(), [&](int l) {
      return std::find(partial.begin(), partial.end(), -l) != partial.end();
    });
    if (falsified) {
      naive::Lits lemma;
      for (auto it = partial.rbegin(); it != partial.rend(); ++it) lemma.push_back(-*it);
      lemmas.push_back(lemma);
      return true;
    }
  }
  const int depth = static_cast<int>(partial.size());
  if (depth == vars) return false;
  const int v = depth + 1;
  for (int lit : {v, -v}) {
    partial.push_back(lit);
    const bool ok = refute(cnf, vars, partial, lemmas);
    partial.pop_back();
    if (!ok) return false;
  }
  naive::Lits lemma;
  for (auto it = partial.rbegin(); it != partial.rend(); ++it) lemma.push_back(-*it);
  lemmas.push_back(lemma);
  return true;
}

}  // namespace detail

// A valid DRUP refutation for an unsatisfiable `cnf`, or nullopt when the
// formula is satisfiable. Ends with the empty clause.
inline std::optional<Proof> tree_refutation(const naive::Cnf& cnf, int vars) {
  naive::Lits partial;
  std::vector<naive::Lits> lemmas;
  if (!detail::refute(cnf, vars, partial, lemmas)) return std::nullopt;
  Proof p;
  for (const auto& l : lemmas) p.steps.push_back({StepKind::Add, naive::to_clause(l), false});
  p.mark_ignored();
  return p;
}

// One random local edit: drop, swap, sign flip, literal drop, random
// insertion or a deletion of an input clause.
inline Proof mutate(Rng& rng, Proof p, const naive::Cnf& cnf, int vars) {
  auto& s = p.steps;
  const int op = uniform(rng, 0, 5);
  auto pick = [&]() { return static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(s.size()) - 1)); };
  if (s.empty() && op != 4 && op != 5) return p;
  switch (op) {
    case 0:
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(pick()));
      break;
    case 1: {
      const auto i = pick(), j = pick();
      std::swap(s[i], s[j]);
      break;
    }
    case 2:
    case 3: {
      auto& step = s[pick()];
      auto lits = naive::to_lits(step.clause.literals());
      if (lits.empty()) break;
      const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(lits.size()) - 1));
      if (op == 2) {
        lits[k] = -lits[k];
      } else {
        lits.erase(lits.begin() + static_cast<std::ptrdiff_t>(k));
      }
      step.clause = naive::to_clause(lits);
      break;
    }
    case 4: {
      const auto at = s.empty() ? 0 : pick();
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(at),
               {StepKind::Add, naive::to_clause(random_lits(rng, vars, 1, 3)), false});
      break;
    }
    case 5: {
      if (cnf.empty()) break;
      const auto& c = cnf[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(cnf.size()) - 1))];
      const auto at = s.empty() ? 0 : pick();
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(at),
               {StepKind::Delete, naive::to_clause(c), false});
      break;
    }
  }
  p.mark_ignored();
  return p;
}

}  // namespace drat::testing::gen
