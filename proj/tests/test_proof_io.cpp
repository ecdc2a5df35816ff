#include <gtest/gtest.h>

#include <random>

#include "drat/proof_io.hpp"
#include "support/generators.hpp"
#include "support/paper_example.hpp"

namespace drat {
namespace {

namespace gen = testing::gen;

using Bytes = std::vector<std::uint8_t>;

Literal L(int v) { return Literal::from_int(v); }

Errc binary_error(const Bytes& b) {
  try {
    parse_binary_proof(std::span<const std::uint8_t>(b));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed";
  return Errc::TooManyVariables;
}

Errc plain_error(std::string_view text) {
  try {
    parse_plain_proof(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return Errc::TooManyVariables;
}

ProofStep add(std::initializer_list<std::int64_t> v) {
  return {StepKind::Add, make_clause(v), false};
}
ProofStep del(std::initializer_list<std::int64_t> v) {
  return {StepKind::Delete, make_clause(v), false};
}

TEST(LiteralMap, Table) {
  EXPECT_EQ(map_literal(L(-63)), 127u);
  EXPECT_EQ(map_literal(L(129)), 258u);
  EXPECT_EQ(map_literal(L(-8191)), 16383u);
  EXPECT_EQ(map_literal(L(-8193)), 16387u);
  EXPECT_EQ(map_literal(L(1)), 2u);
  EXPECT_EQ(map_literal(L(2147483647)), 4294967294u);
  EXPECT_EQ(map_literal(L(-2147483647)), 4294967295u);

  EXPECT_EQ(unmap_literal(127), L(-63));
  EXPECT_EQ(unmap_literal(2), L(1));
  EXPECT_EQ(unmap_literal(16383), L(-8191));
  EXPECT_EQ(unmap_literal(4294967295u), L(-2147483647));
}

TEST(LiteralMap, InvalidCodes) {
  for (std::uint32_t code : {0u, 1u}) {
    try {
      unmap_literal(code);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidCode);
    }
  }
}

TEST(Varint, Table) {
  EXPECT_EQ(encode_varint(0), (Bytes{0x00}));
  EXPECT_EQ(encode_varint(1), (Bytes{0x01}));
  EXPECT_EQ(encode_varint(127), (Bytes{0x7f}));
  EXPECT_EQ(encode_varint(128), (Bytes{0x80, 0x01}));
  EXPECT_EQ(encode_varint(258), (Bytes{0x82, 0x02}));
  EXPECT_EQ(encode_varint(16383), (Bytes{0xff, 0x7f}));
  EXPECT_EQ(encode_varint(16387), (Bytes{0x83, 0x80, 0x01}));
  EXPECT_EQ(encode_varint((1u << 28) - 1), (Bytes{0xff, 0xff, 0xff, 0x7f}));
  EXPECT_EQ(encode_varint((1u << 28) + 7), (Bytes{0x87, 0x80, 0x80, 0x80, 0x01}));

  EXPECT_EQ(decode_varint(Bytes{0x7f}), (VarintResult{127, 1}));
  EXPECT_EQ(decode_varint(Bytes{0x00}), (VarintResult{0, 1}));
  EXPECT_EQ(decode_varint(Bytes{0xff, 0x7f}), (VarintResult{16383, 2}));
  EXPECT_EQ(decode_varint(Bytes{0xff, 0x7f, 0x42}), (VarintResult{16383, 2}));
  EXPECT_EQ(decode_varint(Bytes{0xff, 0xff, 0xff, 0xff, 0x0f}),
            (VarintResult{0xffffffffu, 5}));
}

TEST(Varint, Errors) {
  auto code = [](const Bytes& b) {
    try {
      decode_varint(b);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::TooManyVariables;
  };
  EXPECT_EQ(code({0x80}), Errc::TruncatedVarint);
  EXPECT_EQ(code({0xff, 0xff}), Errc::TruncatedVarint);
  EXPECT_EQ(code({}), Errc::TruncatedVarint);
  EXPECT_EQ(code({0xff, 0xff, 0xff, 0xff, 0x10}), Errc::VarintOverflow);
  EXPECT_EQ(code({0x80, 0x80, 0x80, 0x80, 0x80, 0x01}), Errc::VarintOverflow);
}

TEST(PlainProof, ExampleProof) {
  const Proof p = parse_plain_proof(testing::kExampleProof);
  const Proof expected{{add({-1}), del({-1, 2, 4}), add({2}), add({})}};
  EXPECT_EQ(p, expected);
}

TEST(PlainProof, EmptyAndComments) {
  EXPECT_TRUE(parse_plain_proof("").steps.empty());
  EXPECT_EQ(parse_plain_proof("c hi\n0\n"), (Proof{{add({})}}));
  EXPECT_EQ(parse_plain_proof("c\n1 2 0\nc x\nd\t1 2 0"),
            (Proof{{add({1, 2}), del({1, 2})}}));
}

TEST(PlainProof, StepsAfterEmptyClauseAreIgnored) {
  const Proof p = parse_plain_proof("1 0\n0\n2 0\nd 1 2 0\n");
  ASSERT_EQ(p.steps.size(), 4u);
  EXPECT_FALSE(p.steps[0].ignored);
  EXPECT_FALSE(p.steps[1].ignored);
  EXPECT_TRUE(p.steps[2].ignored);
  EXPECT_TRUE(p.steps[3].ignored);
  EXPECT_EQ(p.first_empty_add(), 1u);
}

TEST(PlainProof, Errors) {
  EXPECT_EQ(plain_error("1 2"), Errc::UnterminatedClause);
  EXPECT_EQ(plain_error("d1 2 0\n"), Errc::MalformedDeletePrefix);
  EXPECT_EQ(plain_error("d"), Errc::MalformedDeletePrefix);
  EXPECT_EQ(plain_error("1 -1 0\n"), Errc::Tautology);
  EXPECT_EQ(plain_error("3 3 0\n"), Errc::DuplicateLiteral);
  EXPECT_EQ(plain_error("x 0\n"), Errc::MalformedToken);
  EXPECT_EQ(plain_error("1 9999999999 0\n"), Errc::LiteralOverflow);
}

TEST(BinaryProof, TwoStepExample) {
  const Proof expected{{del({-63, -8193}), add({129, -8191})}};
  EXPECT_EQ(parse_binary_proof(std::span<const std::uint8_t>(testing::kTwoStepBinary)),
            expected);
  EXPECT_EQ(serialize_binary(expected), testing::as_string(testing::kTwoStepBinary));
  EXPECT_EQ(serialize_plain(expected), testing::kTwoStepPlain);
  EXPECT_EQ(serialize_plain(expected).size(), 26u);
}

TEST(BinaryProof, SmallRecords) {
  EXPECT_EQ(parse_binary_proof(std::string_view("\x61\x00", 2)), (Proof{{add({})}}));
  EXPECT_EQ(serialize_binary(Proof{{add({})}}), std::string("\x61\x00", 2));
  // map(1) = 2, varint(2) = 02
  const std::string one = serialize_binary(Proof{{add({1})}});
  EXPECT_EQ(one, std::string("\x61\x02\x00", 3));
  EXPECT_EQ(decode_varint(Bytes{0x02}).value, map_literal(L(1)));
}

TEST(BinaryProof, Errors) {
  EXPECT_EQ(binary_error({0x62, 0x00}), Errc::BadPrefix);
  EXPECT_EQ(binary_error({0x61, 0x02}), Errc::TruncatedRecord);
  EXPECT_EQ(binary_error({0x61, 0x82}), Errc::TruncatedVarint);
  EXPECT_EQ(binary_error({0x61, 0x01, 0x00}), Errc::InvalidCode);
  EXPECT_EQ(binary_error({0x61, 0x80, 0x00, 0x00}), Errc::InvalidCode);
  EXPECT_EQ(binary_error({0x61, 0x02, 0x03, 0x00}), Errc::Tautology);
  EXPECT_EQ(binary_error({0x61, 0x02, 0x02, 0x00}), Errc::DuplicateLiteral);
  try {
    parse_binary_proof(std::string_view("\x61\x00\x63\x00", 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(SerializePlain, ExampleWithoutAlignment) {
  const Proof p = parse_plain_proof(testing::kExampleProof);
  EXPECT_EQ(serialize_plain(p), testing::kExampleProofCompact);
  EXPECT_EQ(serialize_plain(Proof{{add({})}}), "0\n");
}

TEST(DetectEncoding, Heuristic) {
  EXPECT_EQ(detect_encoding(testing::kExampleProof), ProofEncoding::Plain);
  EXPECT_EQ(detect_encoding(testing::as_string(testing::kTwoStepBinary)),
            ProofEncoding::Binary);
  EXPECT_EQ(detect_encoding("d 1 0\n"), ProofEncoding::Plain);
  EXPECT_EQ(detect_encoding(""), ProofEncoding::Plain);
  EXPECT_EQ(detect_encoding(std::string("\x61\x00", 2)), ProofEncoding::Binary);
  // non-printable bytes alone do not make a binary proof
  EXPECT_EQ(detect_encoding(std::string("1 0\n\x01", 5)), ProofEncoding::Plain);
}

TEST(ProofRoundTrip, RandomProofs) {
  gen::Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const Proof p = gen::random_proof(rng, gen::uniform(rng, 0, 12), 8191, 6);
    EXPECT_EQ(parse_plain_proof(serialize_plain(p)), p);
    const std::string bin = serialize_binary(p);
    EXPECT_EQ(parse_binary_proof(bin), p);
    EXPECT_EQ(serialize_binary(parse_plain_proof(serialize_plain(p))), bin);
  }
}

}  // namespace
}  // namespace drat
