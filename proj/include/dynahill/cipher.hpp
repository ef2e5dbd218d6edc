#pragma once

#include <span>
#include <vector>

#include "dynahill/keysched.hpp"

namespace dynahill::cipher {

using keysched::KeyMaterial;

/// Streaming encryption session. Block i is whitened with Ii and then
/// multiplied by the dynamic key Ai; the chain step that produces
/// (A_{i+1}, I_{i+1}) from (Ai, Ii) runs when block i+1 is processed, so a
/// session's counter deltas per block are
///   block 1:  n^2 muls, n^2 adds
///   block >1: n^3 + 2n^2 muls, n^3 + n^2 - n adds.
class Encryptor {
public:
    explicit Encryptor(const KeyMaterial& km);

    matvec::VectorP encrypt_block(const matvec::VectorP& m,
                                  gfp::OpCounts* counts = nullptr);

    /// Chain position of the block processed most recently (or block 1
    /// before any call).
    const keysched::KeyChainState& state() const noexcept { return state_; }

private:
    const KeyMaterial* km_;
    keysched::KeyChainState state_;
    bool block_done_ = false;
};

/// Streaming decryption session. Inverts Ai afresh for every block; per
/// block the deltas are
///   block 1:  n^2(2n+1) muls, n^2(2n-1) adds, n invs
///   block >1: 3n^3 + 2n^2 muls, 3n^3 - n^2 - n adds, n invs.
class Decryptor {
public:
    explicit Decryptor(const KeyMaterial& km);

    matvec::VectorP decrypt_block(const matvec::VectorP& c,
                                  gfp::OpCounts* counts = nullptr);

    const keysched::KeyChainState& state() const noexcept { return state_; }

private:
    const KeyMaterial* km_;
    keysched::KeyChainState state_;
    bool block_done_ = false;
};

std::vector<matvec::VectorP> encrypt_message(const KeyMaterial& km,
                                             std::span<const matvec::VectorP> blocks,
                                             gfp::OpCounts* counts = nullptr);

std::vector<matvec::VectorP> decrypt_message(const KeyMaterial& km,
                                             std::span<const matvec::VectorP> blocks,
                                             gfp::OpCounts* counts = nullptr);

/// Classical fixed-key Hill cipher over F_p, the baseline the dynamic
/// scheme is measured against. The inverse key is computed once at
/// construction (untallied), so decryption costs what encryption does.
class HillKey {
public:
    explicit HillKey(matvec::MatrixP K);

    const matvec::MatrixP& matrix() const noexcept { return K_; }
    const matvec::MatrixP& inverse() const noexcept { return K_inv_; }

private:
    matvec::MatrixP K_;
    matvec::MatrixP K_inv_;
};

matvec::VectorP hill_encrypt(const HillKey& key, const matvec::VectorP& m,
                             gfp::OpCounts* counts = nullptr);
matvec::VectorP hill_decrypt(const HillKey& key, const matvec::VectorP& c,
                             gfp::OpCounts* counts = nullptr);

} // namespace dynahill::cipher
