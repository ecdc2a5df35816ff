#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drat/detail/scanner.hpp"
#include "drat/error.hpp"
#include "drat/literal.hpp"
#include "drat/proof.hpp"

namespace drat {

enum class ProofEncoding { Plain, Binary };

inline constexpr std::uint8_t kAddPrefix = 0x61;     // 'a'
inline constexpr std::uint8_t kDeletePrefix = 0x64;  // 'd'

// Literal code used by the binary format: 2l for l > 0, -2l + 1 for l < 0.
// Every Literal maps into [2, 2^32 - 1], so the result always fits.
constexpr std::uint32_t map_literal(Literal l) {
  const auto var = static_cast<std::uint32_t>(l.variable());
  return l.positive() ? 2 * var : 2 * var + 1;
}

// Inverse of map_literal. Codes 0 and 1 are not literals.
inline Literal unmap_literal(std::uint32_t code) {
  if (code < 2) {
    throw Error(Errc::InvalidCode, std::to_string(code));
  }
  const std::int64_t var = code >> 1;
  return Literal::from_int((code & 1) ? -var : var);
}

// Little-endian base-128; every byte but the last has its MSB set.
inline void encode_varint(std::uint64_t x, std::string& out) {
  while (x >= 0x80) {
    out.push_back(static_cast<char>((x & 0x7f) | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<char>(x));
}

inline std::vector<std::uint8_t> encode_varint(std::uint64_t x) {
  std::string buf;
  encode_varint(x, buf);
  return {buf.begin(), buf.end()};
}

struct VarintResult {
  std::uint32_t value;
  std::size_t consumed;
  friend bool operator==(const VarintResult&, const VarintResult&) = default;
};

// Decodes one varint from the front of `bytes`. Payloads are capped at five
// bytes and 32 bits, the range of literal codes.
inline VarintResult decode_varint(std::span<const std::uint8_t> bytes) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (i == 5) break;
    const std::uint8_t b = bytes[i];
    value |= static_cast<std::uint64_t>(b & 0x7f) << (7 * i);
    if ((b & 0x80) == 0) {
      if (value > 0xffffffffull) {
        throw Error(Errc::VarintOverflow, "value exceeds 32 bits");
      }
      return {static_cast<std::uint32_t>(value), i + 1};
    }
  }
  if (bytes.size() >= 5) {
    throw Error(Errc::VarintOverflow, "more than 5 bytes");
  }
  throw Error(Errc::TruncatedVarint, "input ends inside varint");
}

// Parses plain-text DRAT. Steps after the first added empty clause are
// kept but flagged as ignored.
inline Proof parse_plain_proof(std::string_view text) {
  detail::Scanner in(text);
  Proof proof;
  for (;;) {
    in.skip_blanks();
    if (in.at_end()) break;
    if (in.at_comment()) {
      in.skip_line();
      continue;
    }
    StepKind kind = StepKind::Add;
    if (in.peek() == 'd') {
      if (detail::Scanner::is_blank(in.peek(1))) {
        in.advance();
        kind = StepKind::Delete;
      } else {
        in.fail(Errc::MalformedDeletePrefix, "expected blank after 'd'");
      }
    }
    proof.steps.push_back({kind, in.read_clause(), false});
  }
  proof.mark_ignored();
  return proof;
}

// Parses binary DRAT: records of 'a'/'d', varint literal codes, 0x00.
// Error offsets are byte positions in the input.
inline Proof parse_binary_proof(std::span<const std::uint8_t> bytes) {
  Proof proof;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    const std::size_t record_start = pos;
    const std::uint8_t prefix = bytes[pos++];
    StepKind kind;
    if (prefix == kAddPrefix) {
      kind = StepKind::Add;
    } else if (prefix == kDeletePrefix) {
      kind = StepKind::Delete;
    } else {
      char hex[8];
      std::snprintf(hex, sizeof hex, "0x%02x", prefix);
      throw Error(Errc::BadPrefix, hex, 0, record_start);
    }
    std::vector<Literal> lits;
    for (;;) {
      if (pos >= bytes.size()) {
        throw Error(Errc::TruncatedRecord, "missing 0x00 terminator", 0,
                    record_start);
      }
      if (bytes[pos] == 0) {
        ++pos;
        break;
      }
      try {
        const auto [code, used] = decode_varint(bytes.subspan(pos));
        lits.push_back(unmap_literal(code));
        pos += used;
      } catch (const Error& e) {
        throw e.at(0, pos);
      }
    }
    try {
      proof.steps.push_back({kind, normalize_clause(std::move(lits)), false});
    } catch (const Error& e) {
      throw e.at(0, record_start);
    }
  }
  proof.mark_ignored();
  return proof;
}

inline Proof parse_binary_proof(std::string_view bytes) {
  return parse_binary_proof(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

// One step per line, literals in original order, single spaces.
inline std::string serialize_plain(const Proof& proof) {
  std::string out;
  for (const auto& step : proof.steps) {
    if (step.kind == StepKind::Delete) out += "d ";
    out += to_dimacs(step.clause.literals());
    out += '\n';
  }
  return out;
}

inline std::string serialize_binary(const Proof& proof) {
  std::string out;
  for (const auto& step : proof.steps) {
    out.push_back(static_cast<char>(
        step.kind == StepKind::Add ? kAddPrefix : kDeletePrefix));
    for (Literal l : step.clause.literals()) encode_varint(map_literal(l), out);
    out.push_back('\0');
  }
  return out;
}

// Binary when the first non-blank byte is 'a' or 'd' and the input holds a
// byte that cannot occur in plain text; plain otherwise.
inline ProofEncoding detect_encoding(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size() && detail::Scanner::is_blank(bytes[i])) ++i;
  if (i == bytes.size()) return ProofEncoding::Plain;
  const auto first = static_cast<std::uint8_t>(bytes[i]);
  if (first != kAddPrefix && first != kDeletePrefix) return ProofEncoding::Plain;
  for (char ch : bytes) {
    const auto c = static_cast<std::uint8_t>(ch);
    const bool printable = c >= 0x20 && c <= 0x7e;
    if (!printable && !detail::Scanner::is_blank(ch)) {
      return ProofEncoding::Binary;
    }
  }
  return ProofEncoding::Plain;
}

inline Proof parse_proof(std::string_view bytes, ProofEncoding encoding) {
  return encoding == ProofEncoding::Binary ? parse_binary_proof(bytes)
                                           : parse_plain_proof(bytes);
}

inline std::string serialize_proof(const Proof& proof, ProofEncoding encoding) {
  return encoding == ProofEncoding::Binary ? serialize_binary(proof)
                                           : serialize_plain(proof);
}

}  // namespace drat
