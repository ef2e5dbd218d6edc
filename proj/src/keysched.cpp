#include "dynahill/keysched.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace dynahill::keysched {

KeyMaterial::KeyMaterial(matvec::MatrixP M, matvec::MatrixP A1, matvec::VectorP I1,
                         bool allow_zero_whitening)
    : M_(std::move(M)), A1_(std::move(A1)), I1_(std::move(I1)) {
    if (!(M_.prime() == A1_.prime()) || !(M_.prime() == I1_.prime())) {
        throw ContractViolation("key material components use different moduli");
    }
    if (M_.order() != A1_.order() || M_.order() != I1_.size()) {
        throw ContractViolation("key material components disagree on block size");
    }
    if (matvec::determinant(M_) == 0) {
        throw SingularMatrix("transformation matrix M is singular");
    }
    if (matvec::determinant(A1_) == 0) {
        throw SingularMatrix("initial key matrix A1 is singular");
    }
    if (!allow_zero_whitening && I1_.is_zero()) {
        throw ContractViolation("initial whitening vector I1 is zero");
    }
}

KeyMaterial KeyMaterial::make(matvec::MatrixP M, matvec::MatrixP A1,
                              matvec::VectorP I1) {
    return KeyMaterial(std::move(M), std::move(A1), std::move(I1), false);
}

KeyMaterial KeyMaterial::unsafe_for_tests(matvec::MatrixP M, matvec::MatrixP A1,
                                          matvec::VectorP I1) {
    return KeyMaterial(std::move(M), std::move(A1), std::move(I1), true);
}

KeyChainState initial_state(const KeyMaterial& km) {
    return KeyChainState{1, km.initial_key(), km.initial_vector()};
}

KeyChainState advance_chain(const KeyMaterial& km, const KeyChainState& state,
                            gfp::OpCounts* counts) {
    return KeyChainState{state.index + 1,
                         matvec::mat_mat_mul(state.key, km.transform(), counts),
                         matvec::vec_mat_mul(state.whitening, km.transform(), counts)};
}

matvec::VectorP transform_vector(const KeyMaterial& km, const matvec::VectorP& v,
                                 gfp::OpCounts* counts) {
    return matvec::vec_mat_mul(v, km.transform(), counts);
}

std::optional<std::uint64_t> estimate_order(const matvec::MatrixP& M,
                                            std::uint64_t cap) {
    if (matvec::determinant(M) == 0) {
        throw SingularMatrix("order is defined for invertible matrices only");
    }
    if (cap == 0) throw ContractViolation("order search cap must be positive");
    matvec::MatrixP id = matvec::MatrixP::identity(M.prime(), M.order());
    matvec::MatrixP power = M;
    for (std::uint64_t k = 1;; ++k) {
        if (power == id) return k;
        if (k == cap) return std::nullopt;
        power = matvec::mat_mat_mul(power, M);
    }
}

KeyMaterial keygen(std::size_t n, gfp::Prime p, RandomSource& rng,
                   std::uint64_t order_floor, int max_order_attempts) {
    if (n == 0) throw ContractViolation("block size must be positive");
    if (order_floor == 0) throw ContractViolation("order floor must be positive");
    matvec::MatrixP A1 = matvec::sample_nonsingular(n, p, rng);

    std::vector<std::uint64_t> iv(n);
    do {
        for (auto& x : iv) x = rng.below(p.value());
    } while (std::all_of(iv.begin(), iv.end(), [](std::uint64_t x) { return x == 0; }));
    matvec::VectorP I1(p, iv);

    std::optional<matvec::MatrixP> best;
    std::uint64_t best_order = 0;
    for (int attempt = 0; attempt < max_order_attempts; ++attempt) {
        matvec::MatrixP M = matvec::sample_nonsingular(n, p, rng);
        std::optional<std::uint64_t> ord = estimate_order(M, order_floor);
        if (!ord.has_value()) {
            return KeyMaterial::make(std::move(M), std::move(A1), std::move(I1));
        }
        if (*ord > best_order) {
            best_order = *ord;
            best = std::move(M);
        }
    }
    return KeyMaterial::make(std::move(*best), std::move(A1), std::move(I1));
}

} // namespace dynahill::keysched
