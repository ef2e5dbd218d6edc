#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "dynahill/codec.hpp"
#include "dynahill/random.hpp"

using namespace dynahill;
using codec::EncodingMode;
using gfp::Prime;
using matvec::VectorP;

namespace {

std::vector<std::uint8_t> random_bytes(RandomSource& rng, std::size_t len) {
    std::vector<std::uint8_t> b(len);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng.below(256));
    return b;
}

} // namespace

TEST_CASE("symbols_per_byte") {
    CHECK(codec::symbols_per_byte(Prime(257), EncodingMode::direct) == 1);
    CHECK(codec::symbols_per_byte(Prime(65537), EncodingMode::direct) == 1);
    CHECK_THROWS_AS(codec::symbols_per_byte(Prime(251), EncodingMode::direct),
                    ContractViolation);
    CHECK(codec::symbols_per_byte(Prime(2), EncodingMode::digits) == 8);
    CHECK(codec::symbols_per_byte(Prime(3), EncodingMode::digits) == 6);
    CHECK(codec::symbols_per_byte(Prime(29), EncodingMode::digits) == 2);
    CHECK(codec::symbols_per_byte(Prime(257), EncodingMode::digits) == 1);
}

TEST_CASE("symbol_width_bytes") {
    CHECK(codec::symbol_width_bytes(Prime(2)) == 1);
    CHECK(codec::symbol_width_bytes(Prime(29)) == 1);
    CHECK(codec::symbol_width_bytes(Prime(257)) == 2);
    CHECK(codec::symbol_width_bytes(Prime(65537)) == 3);
}

TEST_CASE("direct encoding packs one byte per symbol") {
    Prime p(257);
    std::vector<std::uint8_t> bytes = {65, 66, 67};
    auto blocks = codec::encode(bytes, p, 2, EncodingMode::direct);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].entries() == std::vector<std::uint64_t>{65, 66});
    CHECK(blocks[1].entries() == std::vector<std::uint64_t>{67, 0});

    CHECK(codec::encode({}, p, 2, EncodingMode::direct).empty());
}

TEST_CASE("digits encoding decomposes bytes most significant digit first") {
    Prime p(29);
    std::vector<std::uint8_t> bytes = {255};
    auto blocks = codec::encode(bytes, p, 2, EncodingMode::digits);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].entries() == std::vector<std::uint64_t>{8, 23}); // 8*29+23 = 255

    auto back = codec::decode(blocks, p, 2, EncodingMode::digits, 1);
    CHECK(back == bytes);
}

TEST_CASE("decode rejects out-of-range recompositions") {
    Prime p(29);
    std::vector<VectorP> blocks{VectorP(p, {28, 28})}; // 28*29+28 = 840
    CHECK_THROWS_AS(codec::decode(blocks, p, 2, EncodingMode::digits, 1), CorruptData);
}

TEST_CASE("direct decode rejects symbols above byte range") {
    Prime p(257);
    std::vector<VectorP> blocks{VectorP(p, {256, 0})};
    CHECK_THROWS_AS(codec::decode(blocks, p, 2, EncodingMode::direct, 1), CorruptData);
}

TEST_CASE("decode rejects truncated symbol streams") {
    Prime p(29);
    std::vector<VectorP> blocks{VectorP(p, {8, 23})};
    CHECK_THROWS_AS(codec::decode(blocks, p, 2, EncodingMode::digits, 2),
                    TruncatedData);
    CHECK_THROWS_AS(codec::decode({}, p, 2, EncodingMode::digits, 1), TruncatedData);
}

TEST_CASE("decode(encode(b)) is the identity") {
    SeededRandom rng(0x1122);
    for (std::uint64_t pv : {2ULL, 3ULL, 29ULL, 257ULL, 65537ULL}) {
        Prime p(pv);
        for (std::size_t n : {1, 3, 8}) {
            for (std::size_t len : {0, 1, 2, 17, 64}) {
                auto bytes = random_bytes(rng, len);
                auto blocks = codec::encode(bytes, p, n, EncodingMode::digits);
                for (const auto& b : blocks) {
                    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i] < pv);
                }
                CHECK(codec::decode(blocks, p, n, EncodingMode::digits, len) == bytes);
                if (pv >= 257) {
                    auto direct = codec::encode(bytes, p, n, EncodingMode::direct);
                    CHECK(codec::decode(direct, p, n, EncodingMode::direct, len) ==
                          bytes);
                }
            }
        }
    }
}

TEST_CASE("container serialization round trips byte for byte") {
    SeededRandom rng(0x3344);
    Prime p(29);
    auto bytes = random_bytes(rng, 23);
    codec::Container c{p, 3, EncodingMode::digits, bytes.size(),
                       codec::encode(bytes, p, 3, EncodingMode::digits)};
    auto wire = codec::serialize(c);
    codec::Container parsed = codec::parse(wire);
    CHECK(parsed.p == c.p);
    CHECK(parsed.n == c.n);
    CHECK(parsed.mode == c.mode);
    CHECK(parsed.original_byte_length == c.original_byte_length);
    CHECK(parsed.blocks == c.blocks);
    CHECK(codec::serialize(parsed) == wire);
    CHECK(codec::decode(parsed.blocks, parsed.p, parsed.n, parsed.mode,
                        parsed.original_byte_length) == bytes);
}

TEST_CASE("container header layout is fixed") {
    Prime p(29);
    codec::Container c{p, 1, EncodingMode::digits, 0, {}};
    auto wire = codec::serialize(c);
    REQUIRE(wire.size() == 33);
    CHECK(wire[0] == 'D');
    CHECK(wire[1] == 'H');
    CHECK(wire[2] == 'C');
    CHECK(wire[3] == '1');
    CHECK(wire[4] == 29); // p, little endian
    CHECK(wire[12] == 1); // n
    CHECK(wire[16] == 1); // digits mode
}

TEST_CASE("container parser rejects malformed input") {
    SeededRandom rng(0x5566);
    Prime p(29);
    auto bytes = random_bytes(rng, 5);
    codec::Container c{p, 3, EncodingMode::digits, bytes.size(),
                       codec::encode(bytes, p, 3, EncodingMode::digits)};
    auto good = codec::serialize(c);

    auto mutated = good;
    mutated[0] = 'X';
    CHECK_THROWS_AS(codec::parse(mutated), ParseError);

    mutated = good;
    mutated[4] = 26; // composite modulus
    CHECK_THROWS_AS(codec::parse(mutated), ParseError);

    mutated = good;
    mutated[16] = 7; // unknown mode byte
    CHECK_THROWS_AS(codec::parse(mutated), ParseError);

    mutated = good;
    mutated[16] = 0; // direct mode but p = 29
    CHECK_THROWS_AS(codec::parse(mutated), ParseError);

    mutated = good;
    mutated[33] = 29; // symbol not a residue
    CHECK_THROWS_AS(codec::parse(mutated), ParseError);

    mutated = good;
    mutated.pop_back();
    CHECK_THROWS_AS(codec::parse(mutated), ParseError);

    mutated = good;
    mutated.push_back(0);
    CHECK_THROWS_AS(codec::parse(mutated), ParseError);

    CHECK_THROWS_AS(codec::parse(std::vector<std::uint8_t>{'D', 'H', 'C', '1'}),
                    ParseError);
}
