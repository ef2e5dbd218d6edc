#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "dynahill/bigint.hpp"
#include "dynahill/gfp.hpp"

namespace dynahill::costmodel {

/// Schemes with a per-block cost row. Only `proposed` and
/// `classical_hill` are implemented in this project; the others are
/// published reference rows carried for comparison tables.
enum class Scheme {
    proposed,
    classical_hill,
    affine_hill,
    lin,
    toorani,
};

enum class Phase {
    encrypt_first,
    encrypt_rest,
    decrypt_first,
    decrypt_rest,
};

const char* name(Scheme s);
const char* name(Phase ph);

/// Polynomial in the block size n, degree at most 3. Kept as coefficients
/// so per-phase cost rows can be combined and compared symbolically.
struct Poly {
    std::array<std::int64_t, 4> c{}; // c[k] multiplies n^k

    static constexpr Poly of(std::int64_t c0, std::int64_t c1, std::int64_t c2,
                             std::int64_t c3) {
        return Poly{{c0, c1, c2, c3}};
    }

    std::uint64_t eval(std::uint64_t n) const;

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        for (std::size_t i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }

    friend bool operator==(const Poly&, const Poly&) = default;
};

/// One block's operation budget for a scheme and phase, as polynomials in
/// n. For the reference schemes the two encrypt phases coincide, as do
/// the two decrypt phases.
struct CostFormula {
    Scheme scheme;
    Phase phase;
    Poly muls;
    Poly adds;
    Poly invs;

    gfp::OpCounts eval(std::uint64_t n) const;
};

CostFormula per_block_cost(Scheme scheme, Phase phase);

/// Whole-message budgets for the proposed scheme: first-block cost plus
/// ceil(wp/n) - 1 times the steady-state cost, wp counted in symbols.
struct MessageTotals {
    std::uint64_t blocks;
    gfp::OpCounts encryption;
    gfp::OpCounts decryption;
};

MessageTotals total_cost(std::uint64_t wp_symbols, std::uint64_t n);

/// Bit length of p-1; the unit driving per-operation bit cost.
std::uint32_t lambda_bits(gfp::Prime p);

/// Order-of-magnitude bit-operation estimate with unit constants:
/// adds*lambda + muls*lambda^2 + invs*lambda^3.
struct BitCostEstimate {
    std::uint32_t lambda;
    BigUint total_bitops;
};

BitCostEstimate bit_cost(const CostFormula& formula, std::uint64_t n, gfp::Prime p);

/// Exact comparison of a measured counting session against a cost row.
/// For the classical Hill rows the published addition count (n^2 - 1)
/// does not equal the n(n-1) a row-times-matrix product performs; `note`
/// spells that out instead of hiding the delta.
struct CounterCheck {
    gfp::OpCounts measured;
    gfp::OpCounts expected;
    bool exact;
    std::int64_t delta_adds;
    std::int64_t delta_muls;
    std::int64_t delta_invs;
    std::string note;

    std::string render() const;
};

CounterCheck validate_counters(const gfp::OpCounts& measured,
                               const CostFormula& expected, std::uint64_t n);

} // namespace dynahill::costmodel
