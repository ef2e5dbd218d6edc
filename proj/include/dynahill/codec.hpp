#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dynahill/matvec.hpp"

namespace dynahill::codec {

/// How bytes map to field symbols.
///   direct: one byte per symbol; needs p >= 257 so every byte is a residue.
///   digits: each byte becomes the least d base-p digits with p^d >= 256,
///           most significant first; valid for any p.
enum class EncodingMode : std::uint8_t {
    direct = 0,
    digits = 1,
};

const char* mode_name(EncodingMode mode);
EncodingMode mode_from_name(const std::string& name);

/// Symbols one byte expands to under `mode` (1 for direct).
std::size_t symbols_per_byte(gfp::Prime p, EncodingMode mode);

/// Bytes a serialized symbol occupies in the container.
std::size_t symbol_width_bytes(gfp::Prime p);

/// Bytes -> length-n plaintext blocks, final block zero-padded. Injective
/// for a fixed (p, n, mode, byte length).
std::vector<matvec::VectorP> encode(std::span<const std::uint8_t> bytes,
                                    gfp::Prime p, std::size_t n, EncodingMode mode);

/// Exact inverse of encode; pad symbols past `original_byte_length` are
/// discarded unexamined. Throws TruncatedData when the blocks carry fewer
/// symbols than the length requires, CorruptData when a recomposed value
/// does not fit a byte.
std::vector<std::uint8_t> decode(std::span<const matvec::VectorP> blocks,
                                 gfp::Prime p, std::size_t n, EncodingMode mode,
                                 std::uint64_t original_byte_length);

/// Ciphertext container. Binary layout (little-endian throughout):
///   "DHC1" | p:u64 | n:u32 | mode:u8 | original_byte_length:u64 |
///   block_count:u64 | symbols row-major, symbol_width_bytes(p) each.
struct Container {
    gfp::Prime p;
    std::uint32_t n;
    EncodingMode mode;
    std::uint64_t original_byte_length;
    std::vector<matvec::VectorP> blocks;
};

std::vector<std::uint8_t> serialize(const Container& c);
Container parse(std::span<const std::uint8_t> bytes);

} // namespace dynahill::codec
