#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dynahill/bigint.hpp"
#include "dynahill/gfp.hpp"
#include "dynahill/random.hpp"

namespace dynahill::matvec {

/// Row vector of length n over F_p. Entries are validated residues.
class VectorP {
public:
    VectorP(gfp::Prime p, std::vector<std::uint64_t> entries);

    static VectorP zero(gfp::Prime p, std::size_t n);

    const gfp::Prime& prime() const noexcept { return p_; }
    std::size_t size() const noexcept { return e_.size(); }
    std::uint64_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint64_t>& entries() const noexcept { return e_; }

    bool is_zero() const noexcept;

    friend bool operator==(const VectorP&, const VectorP&) = default;

private:
    gfp::Prime p_;
    std::vector<std::uint64_t> e_;
};

/// Dense square matrix over F_p, row-major storage.
class MatrixP {
public:
    MatrixP(gfp::Prime p, std::size_t n, std::vector<std::uint64_t> row_major);

    static MatrixP identity(gfp::Prime p, std::size_t n);

    const gfp::Prime& prime() const noexcept { return p_; }
    std::size_t order() const noexcept { return n_; }
    std::uint64_t at(std::size_t row, std::size_t col) const {
        return a_[row * n_ + col];
    }
    const std::vector<std::uint64_t>& entries() const noexcept { return a_; }

    friend bool operator==(const MatrixP&, const MatrixP&) = default;

private:
    gfp::Prime p_;
    std::size_t n_;
    std::vector<std::uint64_t> a_;
};

/// v * A under the row-vector convention. Consumes exactly n^2 muls and
/// n(n-1) adds.
VectorP vec_mat_mul(const VectorP& v, const MatrixP& A, gfp::OpCounts* counts = nullptr);

/// A * B. Consumes exactly n^3 muls and n^2(n-1) adds.
MatrixP mat_mat_mul(const MatrixP& A, const MatrixP& B, gfp::OpCounts* counts = nullptr);

/// det(A) by Gaussian elimination, pivoting on the first nonzero entry of
/// each column. Diagnostic only: nothing is tallied.
std::uint64_t determinant(const MatrixP& A);

/// A^-1 by Gauss-Jordan on the augmented [A | I] system. The operation
/// schedule is fixed (see the implementation) and consumes exactly
/// 2n^3 muls, 2n^3 - 2n^2 adds and n inversions for every nonsingular
/// input. Throws SingularMatrix when some column has no nonzero pivot.
MatrixP gauss_jordan_inverse(const MatrixP& A, gfp::OpCounts* counts = nullptr);

/// Uniformly random invertible matrix by rejection sampling.
MatrixP sample_nonsingular(std::size_t n, gfp::Prime p, RandomSource& rng,
                           int max_attempts = 64);

/// Exact probability that a uniformly random n x n matrix over F_p is
/// invertible: prod_{k=1..n} (1 - p^-k), returned in lowest terms.
Rational nonsingular_probability(std::size_t n, gfp::Prime p);

} // namespace dynahill::matvec
