#include "dynahill/bigint.hpp"

#include <algorithm>
#include <cmath>

#include "dynahill/errors.hpp"

namespace dynahill {

namespace {
using u128 = unsigned __int128;
}

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) limbs_.push_back(v);
}

void BigUint::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const noexcept {
    if (limbs_.empty()) return 0;
    std::uint64_t top = limbs_.back();
    std::size_t bits = 0;
    while (top != 0) {
        top >>= 1;
        ++bits;
    }
    return (limbs_.size() - 1) * 64 + bits;
}

double BigUint::log2_approx() const {
    if (limbs_.empty()) throw ContractViolation("log2 of zero");
    // x = top * 2^(64*first) with top folded from the top two limbs.
    std::size_t first = limbs_.size() >= 2 ? limbs_.size() - 2 : 0;
    double top = 0.0;
    for (std::size_t i = limbs_.size(); i-- > first;) {
        top = top * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    }
    return std::log2(top) + 64.0 * static_cast<double>(first);
}

BigUint operator+(const BigUint& a, const BigUint& b) {
    BigUint r;
    const auto& x = a.limbs_;
    const auto& y = b.limbs_;
    std::size_t n = std::max(x.size(), y.size());
    r.limbs_.resize(n, 0);
    u128 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        u128 s = carry;
        if (i < x.size()) s += x[i];
        if (i < y.size()) s += y[i];
        r.limbs_[i] = static_cast<std::uint64_t>(s);
        carry = s >> 64;
    }
    if (carry != 0) r.limbs_.push_back(static_cast<std::uint64_t>(carry));
    return r;
}

BigUint operator-(const BigUint& a, const BigUint& b) {
    if (a < b) throw ContractViolation("BigUint subtraction would underflow");
    BigUint r;
    r.limbs_ = a.limbs_;
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        std::uint64_t sub = (i < b.limbs_.size() ? b.limbs_[i] : 0);
        std::uint64_t before = r.limbs_[i];
        std::uint64_t after = before - sub - borrow;
        borrow = (before < sub || (before == sub && borrow)) ? 1 : 0;
        r.limbs_[i] = after;
    }
    r.normalize();
    return r;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint{};
    BigUint r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u128 carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 cur = static_cast<u128>(a.limbs_[i]) * b.limbs_[j] +
                       r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry != 0) {
            u128 cur = static_cast<u128>(r.limbs_[k]) + carry;
            r.limbs_[k] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
            ++k;
        }
    }
    r.normalize();
    return r;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

BigUint BigUint::pow(const BigUint& base, std::uint64_t exp) {
    BigUint result{1};
    BigUint sq = base;
    while (exp > 0) {
        if (exp & 1) result = result * sq;
        exp >>= 1;
        if (exp > 0) sq = sq * sq;
    }
    return result;
}

std::string BigUint::to_decimal() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint64_t> work(limbs_.rbegin(), limbs_.rend()); // big-endian
    std::string out;
    constexpr std::uint64_t kChunk = 10'000'000'000'000'000'000ULL; // 10^19
    while (!work.empty()) {
        u128 rem = 0;
        std::vector<std::uint64_t> quot;
        quot.reserve(work.size());
        for (std::uint64_t limb : work) {
            u128 cur = (rem << 64) | limb;
            std::uint64_t q = static_cast<std::uint64_t>(cur / kChunk);
            rem = cur % kChunk;
            if (!(quot.empty() && q == 0)) quot.push_back(q);
        }
        std::string digits = std::to_string(static_cast<std::uint64_t>(rem));
        if (!quot.empty()) digits.insert(0, 19 - digits.size(), '0');
        out.insert(0, digits);
        work = std::move(quot);
    }
    return out;
}

double Rational::approx() const {
    if (num.is_zero()) return 0.0;
    return std::exp2(num.log2_approx() - den.log2_approx());
}

std::string Rational::to_string() const {
    return num.to_decimal() + "/" + den.to_decimal();
}

} // namespace dynahill
