#include "dynahill/codec.hpp"

#include <algorithm>

namespace dynahill::codec {

namespace {

constexpr char kMagic[4] = {'D', 'H', 'C', '1'};
constexpr std::uint64_t kDirectMinPrime = 257;

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, std::size_t width) {
    for (std::size_t i = 0; i < width; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t offset,
                     std::size_t width) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) {
        v |= static_cast<std::uint64_t>(in[offset + i]) << (8 * i);
    }
    return v;
}

} // namespace

const char* mode_name(EncodingMode mode) {
    return mode == EncodingMode::direct ? "direct" : "digits";
}

EncodingMode mode_from_name(const std::string& name) {
    if (name == "direct") return EncodingMode::direct;
    if (name == "digits") return EncodingMode::digits;
    throw ParseError("unknown encoding mode \"" + name + "\"");
}

std::size_t symbols_per_byte(gfp::Prime p, EncodingMode mode) {
    if (mode == EncodingMode::direct) {
        if (p.value() < kDirectMinPrime) {
            throw ContractViolation("direct mode requires p >= 257, got p = " +
                                    std::to_string(p.value()));
        }
        return 1;
    }
    // least d with p^d >= 256
    if (p.value() >= 256) return 1;
    std::size_t d = 0;
    std::uint64_t reach = 1;
    while (reach < 256) {
        reach *= p.value();
        ++d;
    }
    return d;
}

std::size_t symbol_width_bytes(gfp::Prime p) {
    std::size_t bits = 0;
    std::uint64_t v = p.value() - 1;
    while (v != 0) {
        v >>= 1;
        ++bits;
    }
    if (bits == 0) bits = 1;
    return (bits + 7) / 8;
}

std::vector<matvec::VectorP> encode(std::span<const std::uint8_t> bytes,
                                    gfp::Prime p, std::size_t n, EncodingMode mode) {
    if (n == 0) throw ContractViolation("block size must be positive");
    std::size_t spb = symbols_per_byte(p, mode);
    std::vector<std::uint64_t> symbols;
    symbols.reserve(bytes.size() * spb);
    for (std::uint8_t b : bytes) {
        if (mode == EncodingMode::direct) {
            symbols.push_back(b);
        } else {
            std::size_t start = symbols.size();
            symbols.resize(start + spb);
            std::uint64_t v = b;
            for (std::size_t i = spb; i-- > 0;) {
                symbols[start + i] = v % p.value();
                v /= p.value();
            }
        }
    }
    std::vector<matvec::VectorP> blocks;
    blocks.reserve((symbols.size() + n - 1) / n);
    for (std::size_t off = 0; off < symbols.size(); off += n) {
        std::vector<std::uint64_t> e(n, 0);
        std::size_t take = std::min(n, symbols.size() - off);
        std::copy_n(symbols.begin() + static_cast<std::ptrdiff_t>(off), take, e.begin());
        blocks.emplace_back(p, std::move(e));
    }
    return blocks;
}

std::vector<std::uint8_t> decode(std::span<const matvec::VectorP> blocks,
                                 gfp::Prime p, std::size_t n, EncodingMode mode,
                                 std::uint64_t original_byte_length) {
    if (n == 0) throw ContractViolation("block size must be positive");
    std::size_t spb = symbols_per_byte(p, mode);
    std::uint64_t have = 0;
    for (const auto& b : blocks) {
        if (!(b.prime() == p) || b.size() != n) {
            throw ContractViolation("block shape does not match the container header");
        }
        have += b.size();
    }
    if (original_byte_length > have / spb) {
        throw TruncatedData("container holds " + std::to_string(have) +
                            " symbols, need " +
                            std::to_string(original_byte_length) + " bytes x " +
                            std::to_string(spb) + " symbols each");
    }
    std::uint64_t needed = original_byte_length * spb;
    std::vector<std::uint8_t> out;
    out.reserve(original_byte_length);
    std::uint64_t consumed = 0;
    std::uint64_t value = 0;
    std::size_t in_byte = 0;
    for (const auto& block : blocks) {
        for (std::size_t i = 0; i < block.size() && consumed < needed; ++i, ++consumed) {
            value = value * p.value() + block[i];
            if (++in_byte == spb) {
                if (value > 0xff) {
                    throw CorruptData("symbol group recomposes to " +
                                      std::to_string(value) + ", not a byte");
                }
                out.push_back(static_cast<std::uint8_t>(value));
                value = 0;
                in_byte = 0;
            }
        }
    }
    return out;
}

std::vector<std::uint8_t> serialize(const Container& c) {
    if (c.n == 0) throw ContractViolation("block size must be positive");
    std::size_t w = symbol_width_bytes(c.p);
    std::vector<std::uint8_t> out;
    out.reserve(33 + c.blocks.size() * c.n * w);
    out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
    put_le(out, c.p.value(), 8);
    put_le(out, c.n, 4);
    out.push_back(static_cast<std::uint8_t>(c.mode));
    put_le(out, c.original_byte_length, 8);
    put_le(out, c.blocks.size(), 8);
    for (const auto& block : c.blocks) {
        if (!(block.prime() == c.p) || block.size() != c.n) {
            throw ContractViolation("block shape does not match the container header");
        }
        for (std::size_t i = 0; i < block.size(); ++i) put_le(out, block[i], w);
    }
    return out;
}

Container parse(std::span<const std::uint8_t> bytes) {
    constexpr std::size_t kHeader = 4 + 8 + 4 + 1 + 8 + 8;
    if (bytes.size() < kHeader) throw ParseError("container shorter than its header");
    if (!std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
        throw ParseError("bad container magic");
    }
    std::uint64_t p_value = get_le(bytes, 4, 8);
    std::uint64_t n = get_le(bytes, 12, 4);
    std::uint8_t mode_byte = bytes[16];
    std::uint64_t original_byte_length = get_le(bytes, 17, 8);
    std::uint64_t block_count = get_le(bytes, 25, 8);

    gfp::Prime p = [&] {
        try {
            return gfp::Prime(p_value);
        } catch (const Error& e) {
            throw ParseError(std::string("container modulus rejected: ") + e.what());
        }
    }();
    if (n == 0) throw ParseError("container block size is zero");
    if (mode_byte > 1) throw ParseError("unknown container mode byte");
    EncodingMode mode = static_cast<EncodingMode>(mode_byte);
    if (mode == EncodingMode::direct && p.value() < kDirectMinPrime) {
        throw ParseError("direct mode container with p < 257");
    }

    std::size_t w = symbol_width_bytes(p);
    if (block_count > bytes.size() || n > bytes.size()) {
        throw ParseError("container block count exceeds its payload");
    }
    std::uint64_t payload = block_count * n * w;
    if (bytes.size() != kHeader + payload) {
        throw ParseError("container payload size mismatch: have " +
                         std::to_string(bytes.size() - kHeader) + " bytes, header says " +
                         std::to_string(payload));
    }
    std::vector<matvec::VectorP> blocks;
    blocks.reserve(block_count);
    std::size_t off = kHeader;
    for (std::uint64_t b = 0; b < block_count; ++b) {
        std::vector<std::uint64_t> e(n);
        for (std::uint64_t i = 0; i < n; ++i, off += w) {
            e[i] = get_le(bytes, off, w);
            if (e[i] >= p.value()) {
                throw ParseError("container symbol " + std::to_string(e[i]) +
                                 " is not a residue mod " + std::to_string(p.value()));
            }
        }
        blocks.emplace_back(p, std::move(e));
    }
    return Container{p, static_cast<std::uint32_t>(n), mode, original_byte_length,
                     std::move(blocks)};
}

} // namespace dynahill::codec
