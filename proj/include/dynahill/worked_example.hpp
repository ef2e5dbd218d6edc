#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dynahill::worked_example {

/// A fully worked 6-block reference run at p = 29, n = 3: the shared
/// secret, every intermediate chain value and the expected ciphertext.
/// Kept as plain integers so checks stay independent of the library types
/// under test, and so tests can perturb single values.
struct Dataset {
    std::uint64_t p;
    std::size_t n;
    std::vector<std::vector<std::uint64_t>> M;  // matrix of the chain transformation
    std::vector<std::vector<std::uint64_t>> A1;
    std::vector<std::uint64_t> I1;
    std::vector<std::vector<std::vector<std::uint64_t>>> keys;   // A1..A6
    std::vector<std::vector<std::uint64_t>> plain;               // m1..m6
    std::vector<std::vector<std::uint64_t>> whitened;            // m'1..m'6
    std::vector<std::vector<std::uint64_t>> cipher;              // c1..c6
};

Dataset reference_run();

struct CheckResult {
    bool pass;
    int checkpoints;          // checkpoints verified before stopping
    int blocks;
    std::string first_divergence; // empty when pass
};

/// Re-derives the whole run with the library and compares every
/// checkpoint (Ai, m'i, ci per block, then the decrypted mi). Stops at the
/// first divergence and names it.
CheckResult verify(const Dataset& data);

} // namespace dynahill::worked_example
