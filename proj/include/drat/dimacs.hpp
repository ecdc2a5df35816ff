#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "drat/detail/scanner.hpp"
#include "drat/error.hpp"
#include "drat/formula.hpp"

namespace drat {

namespace detail {

inline std::uint64_t read_header_count(Scanner& in, const char* what) {
  in.skip_inline_blanks();
  if (in.at_end() || in.peek() < '0' || in.peek() > '9') {
    in.fail(Errc::HeaderMalformed, std::string("expected ") + what);
  }
  std::uint64_t value = 0;
  while (!in.at_end() && in.peek() >= '0' && in.peek() <= '9') {
    value = value * 10 + static_cast<std::uint64_t>(in.peek() - '0');
    if (value > static_cast<std::uint64_t>(kMaxVariable)) {
      in.fail(Errc::HeaderMalformed, std::string(what) + " too large");
    }
    in.advance();
  }
  if (!in.blank_or_end(0)) {
    in.fail(Errc::HeaderMalformed, std::string("bad ") + what);
  }
  return value;
}

}  // namespace detail

// Parses a CNF formula in DIMACS format. Comments may precede the header
// and appear between clauses; several clauses may share a line.
//
// Throws drat::Error with the line and byte offset of the offending token.
inline Formula parse_dimacs(std::string_view text) {
  detail::Scanner in(text);
  Formula formula;

  for (;;) {
    in.skip_blanks();
    if (in.at_end()) in.fail(Errc::HeaderMissing, "no 'p cnf' line");
    if (in.at_comment()) {
      in.skip_line();
      continue;
    }
    if (in.peek() != 'p') {
      in.fail(Errc::HeaderMissing, "clause or text before 'p cnf' line");
    }
    break;
  }

  in.advance();  // 'p'
  if (in.peek() != ' ' && in.peek() != '\t') {
    in.fail(Errc::HeaderMalformed, "expected 'p cnf'");
  }
  in.skip_inline_blanks();
  if (!(in.peek() == 'c' && in.peek(1) == 'n' && in.peek(2) == 'f' &&
        in.blank_or_end(3))) {
    in.fail(Errc::HeaderMalformed, "expected 'cnf'");
  }
  for (int i = 0; i < 3; ++i) in.advance();
  const std::uint64_t var_max = detail::read_header_count(in, "<var-max>");
  const std::uint64_t num_cls = detail::read_header_count(in, "<num-cls>");
  in.skip_inline_blanks();
  if (!in.at_end() && in.peek() != '\n') {
    in.fail(Errc::HeaderMalformed, "trailing text after header");
  }
  formula.declared_vars = var_max;
  formula.declared_clauses = num_cls;

  std::uint64_t parsed = 0;
  for (;;) {
    in.skip_blanks();
    if (in.at_end()) break;
    if (in.at_comment()) {
      in.skip_line();
      continue;
    }
    formula.add(in.read_clause(static_cast<std::int64_t>(var_max)));
    ++parsed;
  }

  if (parsed != num_cls) {
    in.fail(Errc::ClauseCountMismatch,
            "header declares " + std::to_string(num_cls) + ", found " +
                std::to_string(parsed));
  }
  return formula;
}

// Writes the live clauses in id order, one per line, in their original
// literal order.
inline std::string write_dimacs(const Formula& formula) {
  std::string out = "p cnf " + std::to_string(formula.declared_vars) + " " +
                    std::to_string(formula.size()) + "\n";
  for (ClauseId id : formula.live_ids()) {
    out += to_dimacs(formula.clause(id).literals());
    out += '\n';
  }
  return out;
}

}  // namespace drat
