#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drat/error.hpp"
#include "drat/literal.hpp"

namespace drat {

// A duplicate-free, non-tautological set of literals kept in canonical
// order. Equality of Clause values is equality up to literal permutation.
class Clause {
 public:
  Clause() = default;

  std::span<const Literal> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }
  Literal operator[](std::size_t i) const { return lits_[i]; }

  bool contains(Literal l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
  }

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause& a, const Clause& b) {
    return std::lexicographical_compare_three_way(
        a.lits_.begin(), a.lits_.end(), b.lits_.begin(), b.lits_.end());
  }

 private:
  friend class SourceClause;
  explicit Clause(std::vector<Literal> sorted) : lits_(std::move(sorted)) {}
  std::vector<Literal> lits_;
};

// A clause as written in an input file: the original literal order is kept
// because the first literal of an added lemma is its RAT pivot.
class SourceClause {
 public:
  SourceClause() = default;

  // Validates the clause restrictions and attaches the canonical form.
  // Throws Error(Tautology) or Error(DuplicateLiteral).
  static SourceClause normalize(std::vector<Literal> literals) {
    std::vector<Literal> sorted = literals;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i] == sorted[i - 1]) {
        throw Error(Errc::DuplicateLiteral,
                    std::to_string(sorted[i].value()));
      }
      if (sorted[i].variable() == sorted[i - 1].variable()) {
        throw Error(Errc::Tautology,
                    std::to_string(sorted[i - 1].value()) + " and " +
                        std::to_string(sorted[i].value()));
      }
    }
    SourceClause c;
    c.original_ = std::move(literals);
    c.canonical_ = Clause(std::move(sorted));
    return c;
  }

  std::span<const Literal> literals() const { return original_; }
  const Clause& canonical() const { return canonical_; }
  std::size_t size() const { return original_.size(); }
  bool empty() const { return original_.empty(); }
  Literal front() const { return original_.front(); }

  friend bool operator==(const SourceClause& a, const SourceClause& b) {
    return a.original_ == b.original_;
  }

 private:
  std::vector<Literal> original_;
  Clause canonical_;
};

inline SourceClause normalize_clause(std::vector<Literal> literals) {
  return SourceClause::normalize(std::move(literals));
}

// Builds a clause from plain integers; used by tests and tables.
inline SourceClause make_clause(std::initializer_list<std::int64_t> values) {
  std::vector<Literal> lits;
  lits.reserve(values.size());
  for (auto v : values) lits.push_back(Literal::from_int(v));
  return normalize_clause(std::move(lits));
}

inline std::string to_dimacs(std::span<const Literal> lits) {
  std::string out;
  for (Literal l : lits) {
    out += std::to_string(l.value());
    out += ' ';
  }
  out += '0';
  return out;
}

struct ClauseHash {
  std::size_t operator()(const Clause& c) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Literal l : c) {
      h ^= std::hash<Literal>{}(l) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

}  // namespace drat
