#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "drat/clause.hpp"
#include "drat/error.hpp"
#include "drat/formula.hpp"

// Exhaustive satisfiability decision for small formulas. Test support only;
// the checking path never calls into it.
namespace drat::oracle {

inline constexpr std::size_t kMaxOracleVariables = 24;

struct OracleVerdict {
  bool satisfiable = false;
  // Total assignment over the formula's variables, one literal per
  // variable, ascending. Empty when unsatisfiable.
  std::vector<Literal> model;
};

namespace detail {

class Enumerator {
 public:
  Enumerator(std::span<const Clause> clauses, std::vector<std::uint32_t> vars)
      : clauses_(clauses), vars_(std::move(vars)), value_(vars_.size(), 0) {}

  bool search(std::size_t depth) {
    if (falsified_clause_exists()) return false;
    if (depth == vars_.size()) return true;
    for (std::int8_t v : {std::int8_t{1}, std::int8_t{-1}}) {
      value_[depth] = v;
      if (search(depth + 1)) return true;
    }
    value_[depth] = 0;
    return false;
  }

  std::vector<Literal> model() const {
    std::vector<Literal> m;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto v = static_cast<std::int64_t>(vars_[i]);
      m.push_back(Literal::from_int(value_[i] > 0 ? v : -v));
    }
    return m;
  }

 private:
  std::int8_t literal_value(Literal l) const {
    const auto it = std::lower_bound(vars_.begin(), vars_.end(), l.variable());
    const std::int8_t v = value_[static_cast<std::size_t>(it - vars_.begin())];
    return l.positive() ? v : static_cast<std::int8_t>(-v);
  }

  // A clause is falsified once every literal is assigned false.
  bool falsified_clause_exists() const {
    for (const Clause& c : clauses_) {
      bool falsified = true;
      for (Literal l : c) {
        if (literal_value(l) >= 0) {
          falsified = false;
          break;
        }
      }
      if (falsified) return true;
    }
    return false;
  }

  std::span<const Clause> clauses_;
  std::vector<std::uint32_t> vars_;
  std::vector<std::int8_t> value_;
};

}  // namespace detail

inline bool satisfies(std::span<const Literal> model,
                      std::span<const Clause> clauses) {
  for (const Clause& c : clauses) {
    const bool sat = std::any_of(c.begin(), c.end(), [&](Literal l) {
      return std::find(model.begin(), model.end(), l) != model.end();
    });
    if (!sat) return false;
  }
  return true;
}

// Throws Error(TooManyVariables) above kMaxOracleVariables distinct
// variables.
inline OracleVerdict brute_force_sat(std::span<const Clause> clauses) {
  std::vector<std::uint32_t> vars;
  for (const Clause& c : clauses) {
    for (Literal l : c) vars.push_back(l.variable());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.size() > kMaxOracleVariables) {
    throw Error(Errc::TooManyVariables,
                std::to_string(vars.size()) + " > " +
                    std::to_string(kMaxOracleVariables));
  }
  detail::Enumerator e(clauses, std::move(vars));
  if (!e.search(0)) return {};
  OracleVerdict v{true, e.model()};
  if (!satisfies(v.model, clauses)) {
    throw std::logic_error("oracle produced a non-model");
  }
  return v;
}

inline OracleVerdict brute_force_sat(const Formula& formula) {
  const auto clauses = formula.sorted_clauses();
  return brute_force_sat(std::span<const Clause>(clauses));
}

}  // namespace drat::oracle
