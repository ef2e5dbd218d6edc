#include "dynahill/cipher.hpp"

namespace dynahill::cipher {

namespace {

void require_block(const KeyMaterial& km, const matvec::VectorP& v) {
    if (!(v.prime() == km.prime())) {
        throw ContractViolation("block modulus does not match the key");
    }
    if (v.size() != km.block_size()) {
        throw ContractViolation("block length " + std::to_string(v.size()) +
                                " does not match key block size " +
                                std::to_string(km.block_size()));
    }
}

matvec::VectorP whiten(const matvec::VectorP& m, const matvec::VectorP& iv,
                       gfp::OpCounts* counts) {
    const gfp::Prime& p = m.prime();
    std::vector<std::uint64_t> out(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        out[k] = gfp::fadd(m[k], iv[k], p, counts);
    }
    return matvec::VectorP(p, std::move(out));
}

matvec::VectorP unwhiten(const matvec::VectorP& mp, const matvec::VectorP& iv,
                         gfp::OpCounts* counts) {
    const gfp::Prime& p = mp.prime();
    std::vector<std::uint64_t> out(mp.size());
    for (std::size_t k = 0; k < mp.size(); ++k) {
        out[k] = gfp::fsub(mp[k], iv[k], p, counts);
    }
    return matvec::VectorP(p, std::move(out));
}

} // namespace

Encryptor::Encryptor(const KeyMaterial& km)
    : km_(&km), state_(keysched::initial_state(km)) {}

matvec::VectorP Encryptor::encrypt_block(const matvec::VectorP& m,
                                         gfp::OpCounts* counts) {
    require_block(*km_, m);
    if (block_done_) {
        state_ = keysched::advance_chain(*km_, state_, counts);
        block_done_ = false;
    }
    matvec::VectorP whitened = whiten(m, state_.whitening, counts);
    matvec::VectorP c = matvec::vec_mat_mul(whitened, state_.key, counts);
    block_done_ = true;
    return c;
}

Decryptor::Decryptor(const KeyMaterial& km)
    : km_(&km), state_(keysched::initial_state(km)) {}

matvec::VectorP Decryptor::decrypt_block(const matvec::VectorP& c,
                                         gfp::OpCounts* counts) {
    require_block(*km_, c);
    if (block_done_) {
        state_ = keysched::advance_chain(*km_, state_, counts);
        block_done_ = false;
    }
    // Key material invariants keep every Ai invertible, so a singular key
    // here is a logic error, not an input condition.
    matvec::MatrixP key_inv = matvec::gauss_jordan_inverse(state_.key, counts);
    matvec::VectorP whitened = matvec::vec_mat_mul(c, key_inv, counts);
    matvec::VectorP m = unwhiten(whitened, state_.whitening, counts);
    block_done_ = true;
    return m;
}

std::vector<matvec::VectorP> encrypt_message(const KeyMaterial& km,
                                             std::span<const matvec::VectorP> blocks,
                                             gfp::OpCounts* counts) {
    Encryptor enc(km);
    std::vector<matvec::VectorP> out;
    out.reserve(blocks.size());
    for (const auto& m : blocks) out.push_back(enc.encrypt_block(m, counts));
    return out;
}

std::vector<matvec::VectorP> decrypt_message(const KeyMaterial& km,
                                             std::span<const matvec::VectorP> blocks,
                                             gfp::OpCounts* counts) {
    Decryptor dec(km);
    std::vector<matvec::VectorP> out;
    out.reserve(blocks.size());
    for (const auto& c : blocks) out.push_back(dec.decrypt_block(c, counts));
    return out;
}

HillKey::HillKey(matvec::MatrixP K)
    : K_(K), K_inv_(matvec::gauss_jordan_inverse(K)) {}

matvec::VectorP hill_encrypt(const HillKey& key, const matvec::VectorP& m,
                             gfp::OpCounts* counts) {
    return matvec::vec_mat_mul(m, key.matrix(), counts);
}

matvec::VectorP hill_decrypt(const HillKey& key, const matvec::VectorP& c,
                             gfp::OpCounts* counts) {
    return matvec::vec_mat_mul(c, key.inverse(), counts);
}

} // namespace dynahill::cipher
