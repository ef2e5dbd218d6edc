#pragma once

#include <cstdint>
#include <random>

namespace dynahill {

/// Source of uniform 64-bit words. Implementations: SystemRandom (OS
/// entropy) and SeededRandom (deterministic, for reproducible runs).
class RandomSource {
public:
    virtual ~RandomSource() = default;

    virtual std::uint64_t next() = 0;

    /// Uniform draw from [0, bound) by rejection; bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);
};

class SystemRandom final : public RandomSource {
public:
    std::uint64_t next() override;

private:
    std::random_device device_;
};

/// splitmix64; portable and stable across platforms for a given seed.
class SeededRandom final : public RandomSource {
public:
    explicit SeededRandom(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() override;

private:
    std::uint64_t state_;
};

} // namespace dynahill
