#pragma once

#include <optional>
#include <vector>

#include "dynahill/bigint.hpp"
#include "dynahill/keysched.hpp"
#include "dynahill/matvec.hpp"

namespace dynahill::cryptanalysis {

/// n matched plaintext/ciphertext blocks stacked as matrix rows, the raw
/// material of the known-plaintext attack on the fixed-key Hill cipher.
struct KpaSample {
    matvec::MatrixP plain;  // X, rows are plaintext blocks
    matvec::MatrixP cipher; // Y, rows are the matching ciphertext blocks
};

/// Solves Y = X*K for the fixed key: K = X^-1 * Y. Returns nullopt when X
/// is singular, in which case the attacker needs a different batch of
/// pairs.
std::optional<matvec::MatrixP> kpa_recover_hill(const KpaSample& sample);

/// Number of n x n matrices A over F_p (invertible or not) with
/// whitened * A = cipher. From the rank of the one-row system:
/// p^(n^2-n) for whitened != 0; p^(n^2) when both sides are zero; 0 when
/// only the left side is. One pair pins n equations against n^2 unknowns.
BigUint variant_solution_count(const matvec::VectorP& whitened,
                               const matvec::VectorP& cipher);

struct KeyspaceSize {
    std::size_t n;
    std::uint64_t p;
    BigUint basis_count;   // N = prod_{k=0..n-1} (p^n - p^k), also |GL(n, p)|
    BigUint triplet_count; // L = p^n * N^2, the (I, B, T) brute-force space
};

KeyspaceSize keyspace_size(std::size_t n, gfp::Prime p);

/// Which ciphertext coordinates depend on which whitened-plaintext
/// coordinates for a given key matrix: depends(k, j) iff A[k][j] != 0.
/// The block achieves full diffusion only when every entry is nonzero.
struct CompletenessMap {
    std::size_t n;
    std::vector<std::uint8_t> mask; // row-major dependence flags

    bool depends(std::size_t k, std::size_t j) const { return mask[k * n + j] != 0; }
    bool fully_complete() const;
};

CompletenessMap completeness_map(const matvec::MatrixP& A);

/// Fraction of the first `blocks` chain keys that are fully complete.
double complete_fraction_along_chain(const keysched::KeyMaterial& km,
                                     std::size_t blocks);

} // namespace dynahill::cryptanalysis
