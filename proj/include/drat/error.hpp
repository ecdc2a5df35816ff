#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace drat {

enum class Errc {
  // clause restrictions
  Tautology,
  DuplicateLiteral,
  // DIMACS header and body
  HeaderMissing,
  HeaderMalformed,
  VarOutOfRange,
  ClauseCountMismatch,
  // shared text grammar
  UnterminatedClause,
  LiteralOverflow,
  MalformedToken,
  MalformedDeletePrefix,
  // binary encoding
  BadPrefix,
  TruncatedRecord,
  TruncatedVarint,
  VarintOverflow,
  InvalidCode,
  // oracle
  TooManyVariables,
};

inline std::string_view to_string(Errc e) {
  switch (e) {
    case Errc::Tautology: return "tautology";
    case Errc::DuplicateLiteral: return "duplicate literal";
    case Errc::HeaderMissing: return "missing 'p cnf' header";
    case Errc::HeaderMalformed: return "malformed 'p cnf' header";
    case Errc::VarOutOfRange: return "variable exceeds declared maximum";
    case Errc::ClauseCountMismatch: return "clause count differs from header";
    case Errc::UnterminatedClause: return "unterminated clause";
    case Errc::LiteralOverflow: return "literal exceeds 2^31-1";
    case Errc::MalformedToken: return "malformed token";
    case Errc::MalformedDeletePrefix: return "'d' not followed by a blank";
    case Errc::BadPrefix: return "bad record prefix";
    case Errc::TruncatedRecord: return "truncated record";
    case Errc::TruncatedVarint: return "truncated varint";
    case Errc::VarintOverflow: return "varint overflow";
    case Errc::InvalidCode: return "invalid literal code";
    case Errc::TooManyVariables: return "too many variables";
  }
  return "unknown error";
}

// Every failure raised by the library. Position fields are zero when not
// applicable; `line` is 1-based for text inputs and zero for binary ones.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail, std::size_t line = 0,
        std::size_t offset = 0)
      : std::runtime_error(format(code, detail, line, offset)),
        code_(code),
        detail_(std::move(detail)),
        line_(line),
        offset_(offset) {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

  // Same error, re-anchored at a position in the input.
  Error at(std::size_t line, std::size_t offset) const {
    return Error(code_, detail_, line, offset);
  }

 private:
  static std::string format(Errc code, const std::string& detail,
                            std::size_t line, std::size_t offset) {
    std::string msg(to_string(code));
    if (!detail.empty()) msg += ": " + detail;
    if (line != 0) {
      msg += " (line " + std::to_string(line) + ", offset " +
             std::to_string(offset) + ")";
    } else if (offset != 0) {
      msg += " (offset " + std::to_string(offset) + ")";
    }
    return msg;
  }

  Errc code_;
  std::string detail_;
  std::size_t line_;
  std::size_t offset_;
};

}  // namespace drat
