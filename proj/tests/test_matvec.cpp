#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "dynahill/matvec.hpp"

using namespace dynahill;
using gfp::OpCounts;
using gfp::Prime;
using matvec::MatrixP;
using matvec::VectorP;
using matvec::determinant;
using matvec::gauss_jordan_inverse;
using matvec::mat_mat_mul;
using matvec::nonsingular_probability;
using matvec::sample_nonsingular;
using matvec::vec_mat_mul;

namespace {

MatrixP mk(Prime p, std::vector<std::vector<std::uint64_t>> rows) {
    std::vector<std::uint64_t> flat;
    for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return MatrixP(p, rows.size(), std::move(flat));
}

// Reference-run key matrix A1 over F_29.
MatrixP a1_29() {
    return mk(Prime(29), {{1, 2, 0}, {3, 1, 0}, {1, 28, 4}});
}

// Odometer over all n x n matrices mod p; nullopt when exhausted.
std::optional<MatrixP> next_matrix(std::vector<std::uint64_t>& digits, Prime p,
                                   std::size_t n, bool& started) {
    if (!started) {
        digits.assign(n * n, 0);
        started = true;
        return MatrixP(p, n, digits);
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < p.value()) return MatrixP(p, n, digits);
        digits[i] = 0;
    }
    return std::nullopt;
}

// Independent oracle: multiply with plain integers, reduce at the end.
std::vector<std::uint64_t> vecmat_oracle(const VectorP& v, const MatrixP& A) {
    std::size_t n = A.order();
    std::vector<std::uint64_t> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        unsigned __int128 acc = 0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += static_cast<unsigned __int128>(v[k]) * A.at(k, j);
        }
        out[j] = static_cast<std::uint64_t>(acc % A.prime().value());
    }
    return out;
}

} // namespace

TEST_CASE("construction validates entries") {
    Prime p(5);
    CHECK_THROWS_AS(VectorP(p, {1, 5}), ContractViolation);
    CHECK_THROWS_AS(MatrixP(p, 2, {0, 1, 2, 5}), ContractViolation);
    CHECK_THROWS_AS(MatrixP(p, 2, {0, 1, 2}), ContractViolation);
    CHECK(VectorP::zero(p, 3).is_zero());
    CHECK_FALSE(VectorP(p, {0, 1, 0}).is_zero());
}

TEST_CASE("vec_mat_mul reproduces the reference ciphertext block") {
    Prime p(29);
    VectorP v(p, {14, 1, 22});
    VectorP c = vec_mat_mul(v, a1_29());
    CHECK(c.entries() == std::vector<std::uint64_t>{10, 7, 1});
}

TEST_CASE("vec_mat_mul identity and the 2x2 mod-5 map") {
    Prime p(5);
    VectorP v(p, {1, 1});
    CHECK(vec_mat_mul(v, MatrixP::identity(p, 2)) == v);
    // (a,b) -> (4a, 2a+3b) at (1,1) gives (4, 5 mod 5)
    VectorP image = vec_mat_mul(v, mk(p, {{4, 2}, {0, 3}}));
    CHECK(image.entries() == std::vector<std::uint64_t>{4, 0});
}

TEST_CASE("vec_mat_mul dimension and modulus mismatches") {
    Prime p5(5), p7(7);
    VectorP v(p5, {1, 1});
    CHECK_THROWS_AS(vec_mat_mul(v, MatrixP::identity(p5, 3)), ContractViolation);
    CHECK_THROWS_AS(vec_mat_mul(v, MatrixP::identity(p7, 2)), ContractViolation);
}

TEST_CASE("mat_mat_mul basics") {
    Prime p29(29);
    MatrixP A1 = a1_29();
    CHECK(mat_mat_mul(A1, MatrixP::identity(p29, 3)) == A1);

    // A2 = A1 * M for the reference transformation matrix M
    MatrixP M = mk(p29, {{1, 0, 1}, {1, 3, 28}, {0, 1, 1}});
    MatrixP A2 = mat_mat_mul(A1, M);
    CHECK(A2 == mk(p29, {{3, 6, 28}, {4, 3, 2}, {0, 1, 6}}));

    Prime p2(2);
    MatrixP U = mk(p2, {{1, 1}, {0, 1}});
    CHECK(mat_mat_mul(U, U) == MatrixP::identity(p2, 2));
}

TEST_CASE("determinant") {
    Prime p29(29), p5(5);
    CHECK(determinant(MatrixP::identity(p29, 4)) == 1);
    CHECK(determinant(a1_29()) != 0);
    CHECK(determinant(mk(p5, {{4, 2}, {0, 3}})) == 2); // 4*3 - 2*0 = 12 = 2 mod 5
    CHECK(determinant(mk(p5, {{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("gauss_jordan_inverse finds the inverse brute force finds") {
    Prime p(5);
    MatrixP A = mk(p, {{4, 2}, {0, 3}});
    MatrixP I = MatrixP::identity(p, 2);

    std::optional<MatrixP> scanned;
    std::vector<std::uint64_t> digits;
    bool started = false;
    while (auto B = next_matrix(digits, p, 2, started)) {
        if (mat_mat_mul(A, *B) == I) {
            scanned = *B;
            break;
        }
    }
    REQUIRE(scanned.has_value());
    CHECK(*scanned == mk(p, {{4, 4}, {0, 2}})); // frozen from the scan
    CHECK(gauss_jordan_inverse(A) == *scanned);
}

TEST_CASE("inverse round trips") {
    Prime p(29);
    MatrixP A1 = a1_29();
    MatrixP inv = gauss_jordan_inverse(A1);
    CHECK(mat_mat_mul(A1, inv) == MatrixP::identity(p, 3));
    CHECK(mat_mat_mul(inv, A1) == MatrixP::identity(p, 3));
}

TEST_CASE("inverse of identity costs n inversions and the fixed budget") {
    Prime p(29);
    for (std::size_t n : {1, 2, 3, 4, 8}) {
        OpCounts counts;
        CHECK(gauss_jordan_inverse(MatrixP::identity(p, n), &counts) ==
              MatrixP::identity(p, n));
        std::uint64_t nn = n;
        CHECK(counts == OpCounts{2 * nn * nn * nn - 2 * nn * nn, 2 * nn * nn * nn, nn});
    }
}

TEST_CASE("singular matrices are reported") {
    Prime p(5);
    CHECK_THROWS_AS(gauss_jordan_inverse(mk(p, {{1, 2}, {2, 4}})), SingularMatrix);
    CHECK_THROWS_AS(gauss_jordan_inverse(mk(p, {{0, 0}, {0, 0}})), SingularMatrix);
}

TEST_CASE("determinant nonzero iff inverse exists, all 2x2 at p=2,3") {
    for (std::uint64_t pv : {2ULL, 3ULL}) {
        Prime p(pv);
        std::vector<std::uint64_t> digits;
        bool started = false;
        while (auto A = next_matrix(digits, p, 2, started)) {
            bool invertible = determinant(*A) != 0;
            bool inverted = true;
            try {
                MatrixP inv = gauss_jordan_inverse(*A);
                CHECK(mat_mat_mul(*A, inv) == MatrixP::identity(p, 2));
            } catch (const SingularMatrix&) {
                inverted = false;
            }
            CAPTURE(pv);
            CHECK(invertible == inverted);
        }
    }
}

TEST_CASE("operation budgets are exact for every call") {
    SeededRandom rng(0x5151);
    for (std::size_t n : {1, 2, 3, 4, 8}) {
        Prime p(29);
        std::uint64_t nn = n;
        MatrixP A = sample_nonsingular(n, p, rng);
        MatrixP B = sample_nonsingular(n, p, rng);
        std::vector<std::uint64_t> ve(n);
        for (auto& x : ve) x = rng.below(29);
        VectorP v(p, ve);

        OpCounts c1;
        vec_mat_mul(v, A, &c1);
        CHECK(c1 == OpCounts{nn * nn - nn, nn * nn, 0});

        OpCounts c2;
        mat_mat_mul(A, B, &c2);
        CHECK(c2 == OpCounts{nn * nn * nn - nn * nn, nn * nn * nn, 0});

        OpCounts c3;
        gauss_jordan_inverse(A, &c3);
        CHECK(c3 == OpCounts{2 * nn * nn * nn - 2 * nn * nn, 2 * nn * nn * nn, nn});
    }
}

TEST_CASE("products match the integer oracle and associate") {
    SeededRandom rng(0xabcd);
    for (std::uint64_t pv : {3ULL, 5ULL, 29ULL}) {
        Prime p(pv);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t n = 1 + rng.below(4);
            MatrixP A = sample_nonsingular(n, p, rng);
            MatrixP B = sample_nonsingular(n, p, rng);
            std::vector<std::uint64_t> ve(n);
            for (auto& x : ve) x = rng.below(pv);
            VectorP v(p, ve);
            CHECK(vec_mat_mul(v, A).entries() == vecmat_oracle(v, A));
            CHECK(vec_mat_mul(vec_mat_mul(v, A), B) ==
                  vec_mat_mul(v, mat_mat_mul(A, B)));
        }
    }
}

TEST_CASE("sample_nonsingular: the only invertible 1x1 mod 2") {
    SeededRandom rng(7);
    for (int i = 0; i < 20; ++i) {
        CHECK(sample_nonsingular(1, Prime(2), rng) == mk(Prime(2), {{1}}));
    }
}

TEST_CASE("raw acceptance rates match the product formula") {
    // All 16 matrices mod 2: exactly 6 invertible.
    {
        Prime p(2);
        std::vector<std::uint64_t> digits;
        bool started = false;
        int invertible = 0;
        while (auto A = next_matrix(digits, p, 2, started)) {
            if (determinant(*A) != 0) ++invertible;
        }
        CHECK(invertible == 6);
    }
    SeededRandom rng(0x77aa);
    auto empirical = [&](std::uint64_t pv, int samples) {
        Prime p(pv);
        int hits = 0;
        for (int i = 0; i < samples; ++i) {
            std::vector<std::uint64_t> e(4);
            for (auto& x : e) x = rng.below(pv);
            if (determinant(MatrixP(p, 2, e)) != 0) ++hits;
        }
        return static_cast<double>(hits) / samples;
    };
    CHECK(empirical(2, 10000) == doctest::Approx(6.0 / 16.0).epsilon(0.05));
    CHECK(empirical(5, 10000) == doctest::Approx(0.768).epsilon(0.05));
}

TEST_CASE("nonsingular_probability exact values") {
    CHECK(nonsingular_probability(1, Prime(2)) == Rational{BigUint{1}, BigUint{2}});
    CHECK(nonsingular_probability(2, Prime(2)) == Rational{BigUint{3}, BigUint{8}});
    CHECK(nonsingular_probability(2, Prime(5)) == Rational{BigUint{96}, BigUint{125}});
}

TEST_CASE("probability times p^(n^2) is the invertible-matrix count") {
    for (auto [n, pv] : {std::pair<std::size_t, std::uint64_t>{2, 2},
                         {3, 2},
                         {2, 3},
                         {2, 5},
                         {3, 29}}) {
        Prime p(pv);
        Rational prob = nonsingular_probability(n, p);
        // independent product: N = prod_k (p^n - p^k)
        BigUint pn = BigUint::pow(BigUint{pv}, n);
        BigUint N{1};
        BigUint pk{1};
        for (std::size_t k = 0; k < n; ++k) {
            N = N * (pn - pk);
            pk = pk * BigUint{pv};
        }
        BigUint total = BigUint::pow(BigUint{pv}, static_cast<std::uint64_t>(n) * n);
        CHECK(prob.num * total == N * prob.den);
    }
}
