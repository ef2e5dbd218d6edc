#include "dynahill/gfp.hpp"

#include <string>

namespace dynahill::gfp {

namespace {

constexpr std::uint64_t kMaxModulus = 1ULL << 61;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

void require_residue(std::uint64_t x, const Prime& p) {
    if (x >= p.value()) {
        throw ContractViolation("residue " + std::to_string(x) +
                                " is not reduced mod " + std::to_string(p.value()) +
                                " (operand from a different modulus?)");
    }
}

void bump(OpCounts* counts, std::uint64_t OpCounts::* member) {
    if (counts != nullptr) ++(counts->*member);
}

} // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
    if (value >= kMaxModulus) {
        throw ContractViolation("modulus " + std::to_string(value) +
                                " is not below 2^61");
    }
    if (!is_prime_u64(value)) {
        throw ContractViolation("modulus " + std::to_string(value) +
                                " is not prime");
    }
}

std::uint64_t fadd(std::uint64_t a, std::uint64_t b, const Prime& p, OpCounts* counts) {
    require_residue(a, p);
    require_residue(b, p);
    bump(counts, &OpCounts::adds);
    std::uint64_t s = a + b; // no overflow: both below 2^61
    if (s >= p.value()) s -= p.value();
    return s;
}

std::uint64_t fsub(std::uint64_t a, std::uint64_t b, const Prime& p, OpCounts* counts) {
    require_residue(a, p);
    require_residue(b, p);
    bump(counts, &OpCounts::adds);
    return a >= b ? a - b : a + p.value() - b;
}

std::uint64_t fmul(std::uint64_t a, std::uint64_t b, const Prime& p, OpCounts* counts) {
    require_residue(a, p);
    require_residue(b, p);
    bump(counts, &OpCounts::muls);
    return mulmod_u64(a, b, p.value());
}

std::uint64_t finv(std::uint64_t a, const Prime& p, OpCounts* counts) {
    require_residue(a, p);
    if (a == 0) {
        throw DivisionByZero("inverse of 0 mod " + std::to_string(p.value()));
    }
    bump(counts, &OpCounts::invs);
    // Extended Euclid on (a, p); p prime guarantees gcd 1.
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = p.value(), new_r = a;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p.value()))
                 : static_cast<std::uint64_t>(t);
}

} // namespace dynahill::gfp
