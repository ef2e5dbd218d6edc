#include "dynahill/cryptanalysis.hpp"

#include <algorithm>

namespace dynahill::cryptanalysis {

std::optional<matvec::MatrixP> kpa_recover_hill(const KpaSample& sample) {
    if (!(sample.plain.prime() == sample.cipher.prime()) ||
        sample.plain.order() != sample.cipher.order()) {
        throw ContractViolation("sample matrices disagree on shape or modulus");
    }
    if (matvec::determinant(sample.plain) == 0) return std::nullopt;
    matvec::MatrixP x_inv = matvec::gauss_jordan_inverse(sample.plain);
    return matvec::mat_mat_mul(x_inv, sample.cipher);
}

BigUint variant_solution_count(const matvec::VectorP& whitened,
                               const matvec::VectorP& cipher) {
    if (!(whitened.prime() == cipher.prime()) || whitened.size() != cipher.size()) {
        throw ContractViolation("vectors disagree on shape or modulus");
    }
    std::uint64_t n = whitened.size();
    BigUint p{whitened.prime().value()};
    if (whitened.is_zero()) {
        // rank 0: either every matrix satisfies 0*A = 0, or none does.
        return cipher.is_zero() ? BigUint::pow(p, n * n) : BigUint{0};
    }
    // rank 1: each of the n columns of A solves one consistent linear
    // equation in n unknowns, leaving p^(n-1) choices per column.
    return BigUint::pow(p, n * n - n);
}

KeyspaceSize keyspace_size(std::size_t n, gfp::Prime p) {
    if (n == 0) throw ContractViolation("matrix order must be positive");
    BigUint pn = BigUint::pow(BigUint{p.value()}, n);
    BigUint basis_count{1};
    BigUint pk{1};
    for (std::size_t k = 0; k < n; ++k) {
        basis_count = basis_count * (pn - pk);
        pk = pk * BigUint{p.value()};
    }
    BigUint triplets = pn * basis_count * basis_count;
    return KeyspaceSize{n, p.value(), std::move(basis_count), std::move(triplets)};
}

bool CompletenessMap::fully_complete() const {
    return std::all_of(mask.begin(), mask.end(),
                       [](std::uint8_t b) { return b != 0; });
}

CompletenessMap completeness_map(const matvec::MatrixP& A) {
    std::size_t n = A.order();
    CompletenessMap map{n, std::vector<std::uint8_t>(n * n, 0)};
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            map.mask[k * n + j] = A.at(k, j) != 0 ? 1 : 0;
        }
    }
    return map;
}

double complete_fraction_along_chain(const keysched::KeyMaterial& km,
                                     std::size_t blocks) {
    if (blocks == 0) throw ContractViolation("chain length must be positive");
    keysched::KeyChainState state = keysched::initial_state(km);
    std::size_t complete = 0;
    for (std::size_t i = 0; i < blocks; ++i) {
        if (i > 0) state = keysched::advance_chain(km, state);
        if (completeness_map(state.key).fully_complete()) ++complete;
    }
    return static_cast<double>(complete) / static_cast<double>(blocks);
}

} // namespace dynahill::cryptanalysis
