#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "drat/clause.hpp"
#include "drat/error.hpp"
#include "drat/literal.hpp"

namespace drat::detail {

// Cursor over the clause grammar shared by DIMACS and plain DRAT. Blanks
// are space, tab and newline; CR is tolerated as a blank as well.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  static constexpr bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool blank_or_end(std::size_t ahead) const {
    return pos_ + ahead >= text_.size() || is_blank(text_[pos_ + ahead]);
  }
  std::size_t line() const { return line_; }
  std::size_t offset() const { return pos_; }

  void advance() {
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }

  void skip_blanks() {
    while (!at_end() && is_blank(text_[pos_])) advance();
  }

  // Spaces and tabs only; stays on the current line.
  void skip_inline_blanks() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) {
      advance();
    }
  }

  // Consumes through the next newline (or to the end of input).
  void skip_line() {
    while (!at_end() && text_[pos_] != '\n') ++pos_;
    if (!at_end()) advance();
  }

  // A comment starts with 'c' followed by a blank, or a bare "c" at the end
  // of a line.
  bool at_comment() const { return peek() == 'c' && blank_or_end(1); }

  bool at_number() const {
    const char c = peek();
    return (c >= '0' && c <= '9') || c == '-';
  }

  [[noreturn]] void fail(Errc code, std::string detail) const {
    throw Error(code, std::move(detail), line_, pos_);
  }
  [[noreturn]] void fail_at(Errc code, std::string detail, std::size_t line,
                            std::size_t offset) const {
    throw Error(code, std::move(detail), line, offset);
  }

  // Reads an optionally negated decimal token delimited by a blank or the
  // end of input. Values beyond 2^31 - 1 in magnitude are LiteralOverflow.
  std::int64_t read_int() {
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    std::uint64_t value = 0;
    std::size_t digits = 0;
    bool overflow = false;
    while (!at_end() && peek() >= '0' && peek() <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > static_cast<std::uint64_t>(kMaxVariable)) {
        overflow = true;
        value = static_cast<std::uint64_t>(kMaxVariable) + 1;
      }
      ++pos_;
      ++digits;
    }
    if (digits == 0 || !blank_or_end(0)) {
      while (!at_end() && !is_blank(peek())) ++pos_;
      fail_at(Errc::MalformedToken,
              "'" + std::string(text_.substr(start, pos_ - start)) + "'",
              line_, start);
    }
    if (overflow) {
      fail_at(Errc::LiteralOverflow,
              std::string(text_.substr(start, pos_ - start)), line_, start);
    }
    if (negative && value == 0) {
      fail_at(Errc::MalformedToken, "'-0'", line_, start);
    }
    return negative ? -static_cast<std::int64_t>(value)
                    : static_cast<std::int64_t>(value);
  }

  // Reads literals up to and including the terminating 0. Clause-level
  // diagnostics (tautology, duplicates, EOF) point at the clause start.
  SourceClause read_clause(std::int64_t var_limit = kMaxVariable) {
    std::vector<Literal> lits;
    const std::size_t clause_line = line_;
    const std::size_t clause_offset = pos_;
    for (;;) {
      skip_blanks();
      if (at_end()) {
        fail_at(Errc::UnterminatedClause, "missing terminating 0",
                clause_line, clause_offset);
      }
      if (!at_number()) {
        const std::size_t start = pos_;
        while (!at_end() && !is_blank(peek())) ++pos_;
        fail_at(Errc::MalformedToken,
                "'" + std::string(text_.substr(start, pos_ - start)) +
                    "' inside clause",
                line_, start);
      }
      const std::size_t tok_line = line_;
      const std::size_t tok_offset = pos_;
      const std::int64_t v = read_int();
      if (v == 0) break;
      if (v > var_limit || -v > var_limit) {
        fail_at(Errc::VarOutOfRange,
                std::to_string(v) + " > " + std::to_string(var_limit),
                tok_line, tok_offset);
      }
      lits.push_back(Literal::from_int(v));
    }
    try {
      return normalize_clause(std::move(lits));
    } catch (const Error& e) {
      throw e.at(clause_line, clause_offset);
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace drat::detail
