#include "dynahill/random.hpp"

#include "dynahill/errors.hpp"

namespace dynahill {

std::uint64_t RandomSource::below(std::uint64_t bound) {
    if (bound == 0) throw ContractViolation("empty sampling range");
    // Accept only the multiple-of-bound prefix of [0, 2^64) to stay unbiased.
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = next();
        if (x >= threshold) return x % bound;
    }
}

std::uint64_t SystemRandom::next() {
    std::uint64_t hi = device_();
    std::uint64_t lo = device_();
    return (hi << 32) ^ lo;
}

std::uint64_t SeededRandom::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace dynahill
