#pragma once

#include <cstdint>

#include "dynahill/errors.hpp"

namespace dynahill::gfp {

/// A validated prime modulus. Construction runs a deterministic
/// Miller-Rabin check and rejects composites, values below 2 and values
/// at or above 2^61 (so that sums and products stay inside native
/// 64/128-bit intermediates).
class Prime {
public:
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    std::uint64_t value_;
};

/// Deterministic primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n) noexcept;

/// Tallies of field operations for one counting session. Subtraction is
/// tallied under `adds`; an inversion counts as one `invs` regardless of
/// how it is computed internally.
struct OpCounts {
    std::uint64_t adds = 0;
    std::uint64_t muls = 0;
    std::uint64_t invs = 0;

    OpCounts& operator+=(const OpCounts& o) noexcept {
        adds += o.adds;
        muls += o.muls;
        invs += o.invs;
        return *this;
    }

    friend OpCounts operator+(OpCounts a, const OpCounts& b) noexcept {
        a += b;
        return a;
    }

    /// Difference against an earlier snapshot of the same session.
    friend OpCounts operator-(const OpCounts& now, const OpCounts& before) noexcept {
        return OpCounts{now.adds - before.adds, now.muls - before.muls,
                        now.invs - before.invs};
    }

    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

// Field arithmetic on residues in [0, p). A null `counts` disables
// counting; otherwise each call tallies exactly one operation of its
// category. Operands outside [0, p) were reduced under some other
// modulus and are rejected.

std::uint64_t fadd(std::uint64_t a, std::uint64_t b, const Prime& p,
                   OpCounts* counts = nullptr);

/// (a - b) mod p, tallied under `adds`.
std::uint64_t fsub(std::uint64_t a, std::uint64_t b, const Prime& p,
                   OpCounts* counts = nullptr);

std::uint64_t fmul(std::uint64_t a, std::uint64_t b, const Prime& p,
                   OpCounts* counts = nullptr);

/// Multiplicative inverse via extended Euclid; throws DivisionByZero for a = 0.
std::uint64_t finv(std::uint64_t a, const Prime& p, OpCounts* counts = nullptr);

} // namespace dynahill::gfp
