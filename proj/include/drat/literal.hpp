#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "drat/error.hpp"

namespace drat {

inline constexpr std::int64_t kMaxVariable = 2147483647;  // 2^31 - 1

// A signed DIMACS literal. Zero is reserved as the clause terminator.
class Literal {
 public:
  constexpr Literal() = default;

  // Throws Error(LiteralOverflow) for |value| > 2^31 - 1 and
  // Error(MalformedToken) for zero.
  static Literal from_int(std::int64_t value) {
    if (value == 0) throw Error(Errc::MalformedToken, "0 is not a literal");
    if (value > kMaxVariable || value < -kMaxVariable) {
      throw Error(Errc::LiteralOverflow, std::to_string(value));
    }
    return Literal(static_cast<std::int32_t>(value));
  }

  constexpr std::int32_t value() const { return value_; }
  constexpr std::uint32_t variable() const {
    return static_cast<std::uint32_t>(value_ < 0 ? -value_ : value_);
  }
  constexpr bool positive() const { return value_ > 0; }
  constexpr Literal operator-() const { return Literal(-value_); }

  friend constexpr bool operator==(Literal, Literal) = default;

  // Canonical order: by variable, positive before negative.
  friend constexpr std::strong_ordering operator<=>(Literal a, Literal b) {
    if (auto c = a.variable() <=> b.variable(); c != 0) return c;
    return b.positive() <=> a.positive();
  }

 private:
  constexpr explicit Literal(std::int32_t v) : value_(v) {}
  std::int32_t value_ = 1;
};

}  // namespace drat

template <>
struct std::hash<drat::Literal> {
  std::size_t operator()(drat::Literal l) const noexcept {
    return std::hash<std::int32_t>{}(l.value());
  }
};
