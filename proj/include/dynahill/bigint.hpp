#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dynahill {

/// Arbitrary-precision unsigned integer, 64-bit little-endian limbs.
/// Covers what the keyspace and probability computations need: products,
/// powers, subtraction, comparison, decimal rendering. Not a general
/// bignum; division exists only by small constants (decimal output).
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v); // NOLINT(google-explicit-constructor)

    static BigUint pow(const BigUint& base, std::uint64_t exp);

    bool is_zero() const noexcept { return limbs_.empty(); }

    /// Number of bits in the binary representation; 0 for zero.
    std::size_t bit_length() const noexcept;

    /// floor(log2(x)) plus a fractional part from the top bits; NaN-free,
    /// requires x > 0. Good to ~15 significant digits, used for reporting.
    double log2_approx() const;

    std::string to_decimal() const;

    friend BigUint operator+(const BigUint& a, const BigUint& b);
    /// Requires a >= b.
    friend BigUint operator-(const BigUint& a, const BigUint& b);
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);
    friend bool operator==(const BigUint&, const BigUint&) = default;

private:
    void normalize();

    std::vector<std::uint64_t> limbs_; // little-endian, no trailing zero limbs
};

/// Exact fraction of two big integers. Only what the non-singularity
/// probability needs; produced already in lowest terms.
struct Rational {
    BigUint num;
    BigUint den;

    double approx() const;
    std::string to_string() const; // "num/den"

    friend bool operator==(const Rational&, const Rational&) = default;
};

} // namespace dynahill
