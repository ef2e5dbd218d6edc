#pragma once

#include <cstdint>
#include <optional>

#include "dynahill/matvec.hpp"
#include "dynahill/random.hpp"

namespace dynahill::keysched {

/// The shared secret: prime p, block size n, the matrix M of the chain
/// transformation T (row-vector convention, so T(v) = v*M), the initial
/// key matrix A1 whose rows form the seed basis, and the initial
/// whitening vector I1. Construction enforces det(M) != 0, det(A1) != 0
/// and I1 != 0.
class KeyMaterial {
public:
    static KeyMaterial make(matvec::MatrixP M, matvec::MatrixP A1, matvec::VectorP I1);

    /// Skips the I1 != 0 check. Exists so tests can degenerate the scheme
    /// to a fixed-key baseline; nothing else should call it.
    static KeyMaterial unsafe_for_tests(matvec::MatrixP M, matvec::MatrixP A1,
                                        matvec::VectorP I1);

    const gfp::Prime& prime() const noexcept { return M_.prime(); }
    std::size_t block_size() const noexcept { return M_.order(); }
    const matvec::MatrixP& transform() const noexcept { return M_; }
    const matvec::MatrixP& initial_key() const noexcept { return A1_; }
    const matvec::VectorP& initial_vector() const noexcept { return I1_; }

private:
    KeyMaterial(matvec::MatrixP M, matvec::MatrixP A1, matvec::VectorP I1,
                bool allow_zero_whitening);

    matvec::MatrixP M_;
    matvec::MatrixP A1_;
    matvec::VectorP I1_;
};

/// Position i of the key/whitening chain: Ai = A1*M^(i-1), Ii = I1*M^(i-1).
struct KeyChainState {
    std::uint64_t index;
    matvec::MatrixP key;       // Ai
    matvec::VectorP whitening; // Ii

    friend bool operator==(const KeyChainState&, const KeyChainState&) = default;
};

KeyChainState initial_state(const KeyMaterial& km);

/// One chain step. Consumes exactly n^3 + n^2 muls and n^3 - n adds.
KeyChainState advance_chain(const KeyMaterial& km, const KeyChainState& state,
                            gfp::OpCounts* counts = nullptr);

/// v*M. Consumes n^2 muls and n^2 - n adds.
matvec::VectorP transform_vector(const KeyMaterial& km, const matvec::VectorP& v,
                                 gfp::OpCounts* counts = nullptr);

/// Least k <= cap with M^k = I, or nullopt when every k <= cap fails.
/// Iterated multiplication; nothing is tallied.
std::optional<std::uint64_t> estimate_order(const matvec::MatrixP& M,
                                            std::uint64_t cap);

/// Samples fresh key material. M is resampled until its order provably
/// exceeds order_floor (estimate_order with cap = order_floor returns
/// nullopt). If max_order_attempts candidates all have proven order at or
/// below the floor -- which happens when the floor is unattainable in
/// GL(n, p), e.g. n = 1, p = 2 with any floor >= 1 -- the candidate with
/// the largest proven order is kept.
KeyMaterial keygen(std::size_t n, gfp::Prime p, RandomSource& rng,
                   std::uint64_t order_floor = 1ULL << 16,
                   int max_order_attempts = 64);

} // namespace dynahill::keysched
