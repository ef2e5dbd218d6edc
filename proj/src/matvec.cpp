#include "dynahill/matvec.hpp"

#include <string>
#include <utility>

namespace dynahill::matvec {

namespace {

void require_same_prime(const gfp::Prime& a, const gfp::Prime& b) {
    if (!(a == b)) {
        throw ContractViolation("mixed moduli: " + std::to_string(a.value()) +
                                " vs " + std::to_string(b.value()));
    }
}

void require_square_match(std::size_t a, std::size_t b) {
    if (a != b) {
        throw ContractViolation("dimension mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
    }
}

} // namespace

VectorP::VectorP(gfp::Prime p, std::vector<std::uint64_t> entries)
    : p_(p), e_(std::move(entries)) {
    if (e_.empty()) throw ContractViolation("empty vector");
    for (std::uint64_t x : e_) {
        if (x >= p_.value()) {
            throw ContractViolation("vector entry " + std::to_string(x) +
                                    " not reduced mod " + std::to_string(p_.value()));
        }
    }
}

VectorP VectorP::zero(gfp::Prime p, std::size_t n) {
    return VectorP(p, std::vector<std::uint64_t>(n, 0));
}

bool VectorP::is_zero() const noexcept {
    for (std::uint64_t x : e_) {
        if (x != 0) return false;
    }
    return true;
}

MatrixP::MatrixP(gfp::Prime p, std::size_t n, std::vector<std::uint64_t> row_major)
    : p_(p), n_(n), a_(std::move(row_major)) {
    if (n_ == 0) throw ContractViolation("empty matrix");
    if (a_.size() != n_ * n_) {
        throw ContractViolation("matrix storage size " + std::to_string(a_.size()) +
                                " does not match order " + std::to_string(n_));
    }
    for (std::uint64_t x : a_) {
        if (x >= p_.value()) {
            throw ContractViolation("matrix entry " + std::to_string(x) +
                                    " not reduced mod " + std::to_string(p_.value()));
        }
    }
}

MatrixP MatrixP::identity(gfp::Prime p, std::size_t n) {
    std::vector<std::uint64_t> a(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 1;
    return MatrixP(p, n, std::move(a));
}

VectorP vec_mat_mul(const VectorP& v, const MatrixP& A, gfp::OpCounts* counts) {
    require_same_prime(v.prime(), A.prime());
    require_square_match(v.size(), A.order());
    const gfp::Prime& p = v.prime();
    std::size_t n = A.order();
    std::vector<std::uint64_t> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t acc = gfp::fmul(v[0], A.at(0, j), p, counts);
        for (std::size_t k = 1; k < n; ++k) {
            acc = gfp::fadd(acc, gfp::fmul(v[k], A.at(k, j), p, counts), p, counts);
        }
        out[j] = acc;
    }
    return VectorP(p, std::move(out));
}

MatrixP mat_mat_mul(const MatrixP& A, const MatrixP& B, gfp::OpCounts* counts) {
    require_same_prime(A.prime(), B.prime());
    require_square_match(A.order(), B.order());
    const gfp::Prime& p = A.prime();
    std::size_t n = A.order();
    std::vector<std::uint64_t> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t acc = gfp::fmul(A.at(i, 0), B.at(0, j), p, counts);
            for (std::size_t k = 1; k < n; ++k) {
                acc = gfp::fadd(acc, gfp::fmul(A.at(i, k), B.at(k, j), p, counts), p,
                                counts);
            }
            out[i * n + j] = acc;
        }
    }
    return MatrixP(p, n, std::move(out));
}

std::uint64_t determinant(const MatrixP& A) {
    const gfp::Prime& p = A.prime();
    std::size_t n = A.order();
    std::vector<std::uint64_t> w = A.entries();
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& {
        return w[r * n + c];
    };
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && at(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(at(pivot, j), at(col, j));
            det = gfp::fsub(0, det, p); // row swap negates
        }
        det = gfp::fmul(det, at(col, col), p);
        std::uint64_t inv = gfp::finv(at(col, col), p);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (at(r, col) == 0) continue;
            std::uint64_t f = gfp::fmul(at(r, col), inv, p);
            for (std::size_t j = col; j < n; ++j) {
                at(r, j) = gfp::fsub(at(r, j), gfp::fmul(f, at(col, j), p), p);
            }
        }
    }
    return det;
}

MatrixP gauss_jordan_inverse(const MatrixP& A, gfp::OpCounts* counts) {
    const gfp::Prime& p = A.prime();
    std::size_t n = A.order();
    // Augmented [A | I], n rows by 2n columns. The schedule below is fixed
    // so counts are identical for every nonsingular input:
    //   per pivot column: 1 inversion, 2n normalization muls over the full
    //   augmented pivot row, then for each of the other n-1 rows a full-width
    //   update of 2n muls and 2n subtractions, performed even when the
    //   eliminated entry is already zero.
    // Totals: n invs, 2n^2 + 2n^2(n-1) = 2n^3 muls, 2n^2(n-1) = 2n^3-2n^2 adds.
    std::size_t w = 2 * n;
    std::vector<std::uint64_t> aug(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = A.at(i, j);
        aug[i * w + n + i] = 1;
    }
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& {
        return aug[r * w + c];
    };
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && at(pivot, col) == 0) ++pivot;
        if (pivot == n) {
            throw SingularMatrix("no nonzero pivot in column " + std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < w; ++j) std::swap(at(pivot, j), at(col, j));
        }
        std::uint64_t inv = gfp::finv(at(col, col), p, counts);
        for (std::size_t j = 0; j < w; ++j) {
            at(col, j) = gfp::fmul(at(col, j), inv, p, counts);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            std::uint64_t f = at(r, col);
            for (std::size_t j = 0; j < w; ++j) {
                at(r, j) = gfp::fsub(at(r, j), gfp::fmul(f, at(col, j), p, counts), p,
                                     counts);
            }
        }
    }
    std::vector<std::uint64_t> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = at(i, n + j);
    }
    return MatrixP(p, n, std::move(out));
}

MatrixP sample_nonsingular(std::size_t n, gfp::Prime p, RandomSource& rng,
                           int max_attempts) {
    if (n == 0) throw ContractViolation("matrix order must be positive");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::uint64_t> a(n * n);
        for (auto& x : a) x = rng.below(p.value());
        MatrixP candidate(p, n, std::move(a));
        if (determinant(candidate) != 0) return candidate;
    }
    throw SamplingFailure("no invertible matrix after " +
                          std::to_string(max_attempts) + " attempts");
}

Rational nonsingular_probability(std::size_t n, gfp::Prime p) {
    if (n == 0) throw ContractViolation("matrix order must be positive");
    // prod_{k=0..n-1} (p^n - p^k) / p^(n^2) reduces to
    // prod_{j=1..n} (p^j - 1) / p^(n(n+1)/2); the numerator is coprime to p.
    BigUint num{1};
    BigUint pj{1};
    BigUint pbig{p.value()};
    for (std::size_t j = 1; j <= n; ++j) {
        pj = pj * pbig;
        num = num * (pj - BigUint{1});
    }
    BigUint den = BigUint::pow(pbig, static_cast<std::uint64_t>(n) * (n + 1) / 2);
    return Rational{std::move(num), std::move(den)};
}

} // namespace dynahill::matvec
