#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dynahill/cipher.hpp"
#include "dynahill/codec.hpp"
#include "dynahill/costmodel.hpp"
#include "dynahill/cryptanalysis.hpp"
#include "dynahill/key_file.hpp"
#include "dynahill/worked_example.hpp"

using namespace dynahill;

namespace {

std::unique_ptr<RandomSource> make_rng(const std::optional<std::uint64_t>& seed) {
    if (seed.has_value()) return std::make_unique<SeededRandom>(*seed);
    return std::make_unique<SystemRandom>();
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out.flush()) throw Error("failed writing " + path.string());
}

struct KeygenArgs {
    std::uint64_t p = 0;
    std::size_t n = 0;
    std::uint64_t order_floor = 1ULL << 16;
    std::optional<std::uint64_t> seed;
    std::string enc = "auto";
    std::string out;
};

int cmd_keygen(const KeygenArgs& args) {
    gfp::Prime p(args.p);
    codec::EncodingMode mode;
    if (args.enc == "auto") {
        mode = p.value() >= 257 ? codec::EncodingMode::direct
                                : codec::EncodingMode::digits;
    } else {
        mode = codec::mode_from_name(args.enc);
        if (mode == codec::EncodingMode::direct && p.value() < 257) {
            throw ContractViolation("direct mode requires p >= 257");
        }
    }
    auto rng = make_rng(args.seed);
    keysched::KeyMaterial km = keysched::keygen(args.n, p, *rng, args.order_floor);
    keysched::save_key(args.out, km, mode);
    std::cout << "wrote " << args.out << " (p=" << p.value() << ", n=" << args.n
              << ", enc=" << codec::mode_name(mode) << ")\n";
    return 0;
}

int cmd_encrypt(const std::string& key_path, const std::string& in_path,
                const std::string& out_path) {
    keysched::KeyFile key = keysched::load_key(key_path);
    const keysched::KeyMaterial& km = key.material;
    std::vector<std::uint8_t> bytes = read_file(in_path);
    auto blocks = codec::encode(bytes, km.prime(), km.block_size(), key.mode);
    auto cipher_blocks = cipher::encrypt_message(km, blocks);
    codec::Container container{km.prime(),
                               static_cast<std::uint32_t>(km.block_size()), key.mode,
                               bytes.size(), std::move(cipher_blocks)};
    write_file(out_path, codec::serialize(container));
    std::cout << "encrypted " << bytes.size() << " bytes into "
              << container.blocks.size() << " blocks\n";
    return 0;
}

int cmd_decrypt(const std::string& key_path, const std::string& in_path,
                const std::string& out_path) {
    keysched::KeyFile key = keysched::load_key(key_path);
    const keysched::KeyMaterial& km = key.material;
    codec::Container container = codec::parse(read_file(in_path));
    if (!(container.p == km.prime()) || container.n != km.block_size() ||
        container.mode != key.mode) {
        throw ContractViolation(
            "container parameters (p=" + std::to_string(container.p.value()) +
            ", n=" + std::to_string(container.n) +
            ", enc=" + codec::mode_name(container.mode) +
            ") do not match the key file");
    }
    auto plain_blocks = cipher::decrypt_message(km, container.blocks);
    auto bytes = codec::decode(plain_blocks, container.p, container.n, container.mode,
                               container.original_byte_length);
    write_file(out_path, bytes);
    std::cout << "decrypted " << container.blocks.size() << " blocks into "
              << bytes.size() << " bytes\n";
    return 0;
}

int cmd_verify_example() {
    auto result = worked_example::verify(worked_example::reference_run());
    if (result.pass) {
        std::cout << "PASS: " << result.blocks << " blocks, " << result.checkpoints
                  << " checkpoints\n";
        return 0;
    }
    std::cout << "FAIL: " << result.first_divergence << "\n";
    return 1;
}

int cmd_keyspace(std::uint64_t p_value, std::size_t n) {
    gfp::Prime p(p_value);
    auto ks = cryptanalysis::keyspace_size(n, p);
    std::cout << "p = " << p_value << ", n = " << n << "\n";
    std::cout << "N (bases / invertible matrices) = " << ks.basis_count.to_decimal()
              << "\n";
    std::cout << "L = p^n * N^2 (brute-force triplets) = "
              << ks.triplet_count.to_decimal() << "\n";
    std::cout << "log2(L) = " << ks.triplet_count.log2_approx() << " ("
              << ks.triplet_count.bit_length() << " bits)\n";
    return 0;
}

int cmd_order(const std::string& key_path, std::uint64_t cap) {
    keysched::KeyFile key = keysched::load_key(key_path);
    auto order = keysched::estimate_order(key.material.transform(), cap);
    if (order.has_value()) {
        std::cout << "order(M) = " << *order << " (exact)\n";
    } else {
        std::cout << "order(M) exceeds cap " << cap << "\n";
    }
    return 0;
}

struct AttackArgs {
    std::uint64_t p = 0;
    std::size_t n = 0;
    int trials = 100;
    std::optional<std::uint64_t> seed;
};

int cmd_attack_demo(const AttackArgs& args) {
    gfp::Prime p(args.p);
    if (args.n == 0 || args.trials <= 0) {
        throw ContractViolation("need n >= 1 and a positive trial count");
    }
    auto rng = make_rng(args.seed);

    // classical Hill: one invertible batch of n pairs recovers the key
    int recovered = 0;
    int singular_batches = 0;
    for (int t = 0; t < args.trials; ++t) {
        matvec::MatrixP K = matvec::sample_nonsingular(args.n, p, *rng);
        matvec::MatrixP X = matvec::sample_nonsingular(args.n, p, *rng);
        std::optional<matvec::MatrixP> guess;
        for (;;) {
            guess = cryptanalysis::kpa_recover_hill({X, matvec::mat_mat_mul(X, K)});
            if (guess.has_value()) break;
            ++singular_batches; // try another batch of pairs
            X = matvec::sample_nonsingular(args.n, p, *rng);
        }
        if (*guess == K) ++recovered;
    }
    std::cout << "classical Hill known-plaintext attack: recovered the key in "
              << recovered << "/" << args.trials << " trials";
    if (singular_batches > 0) {
        std::cout << " (" << singular_batches << " singular batches retried)";
    }
    std::cout << "\n";

    // dynamic variant: one pair fixes n equations against n^2 unknowns
    std::vector<std::uint64_t> mp(args.n);
    do {
        for (auto& x : mp) x = rng->below(p.value());
    } while (std::all_of(mp.begin(), mp.end(), [](std::uint64_t v) { return v == 0; }));
    matvec::VectorP whitened(p, mp);
    matvec::MatrixP hidden = matvec::sample_nonsingular(args.n, p, *rng);
    matvec::VectorP c = matvec::vec_mat_mul(whitened, hidden);

    BigUint count = cryptanalysis::variant_solution_count(whitened, c);
    std::cout << "dynamic variant, one known pair: " << args.n << " equations, "
              << args.n * args.n << " unknowns\n";
    std::cout << "matrices consistent with the pair: " << args.p << "^"
              << args.n * args.n - args.n << " = " << count.to_decimal() << "\n";

    double log10_space = static_cast<double>(args.n) * static_cast<double>(args.n) *
                         std::log10(static_cast<double>(args.p));
    if (log10_space <= 7.0) {
        std::uint64_t enumerated = 0;
        std::uint64_t enumerated_invertible = 0;
        std::vector<std::uint64_t> digits(args.n * args.n, 0);
        for (;;) {
            matvec::MatrixP A(p, args.n, digits);
            if (matvec::vec_mat_mul(whitened, A) == c) {
                ++enumerated;
                if (matvec::determinant(A) != 0) ++enumerated_invertible;
            }
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == p.value()) digits[i++] = 0;
            if (i == digits.size()) break;
        }
        std::cout << "exhaustive enumeration over " << args.p << "^"
                  << args.n * args.n << " matrices: " << enumerated
                  << (BigUint{enumerated} == count ? " (matches)" : " (MISMATCH)")
                  << "\n";
        std::cout << "of those, invertible (candidate keys): "
                  << enumerated_invertible << "\n";
    } else {
        std::cout << "exhaustive enumeration skipped: " << args.p << "^"
                  << args.n * args.n << " matrices exceed the 10^7 guard\n";
    }

    auto km = keysched::keygen(args.n, p, *rng, 16);
    double fraction = cryptanalysis::complete_fraction_along_chain(
        km, static_cast<std::size_t>(args.trials));
    std::cout << "fully complete key matrices along a random " << args.trials
              << "-step chain: " << fraction * 100.0
              << "% (a zero entry breaks completeness for its coordinate)\n";
    return 0;
}

struct BenchArgs {
    std::uint64_t p = 0;
    std::size_t n = 0;
    std::size_t blocks = 8;
    std::optional<std::uint64_t> seed;
    bool json = false;
};

std::string phase_label(const costmodel::CostFormula& row) {
    // the reference schemes cost the same for every block
    if (row.scheme != costmodel::Scheme::proposed) {
        bool enc = row.phase == costmodel::Phase::encrypt_first ||
                   row.phase == costmodel::Phase::encrypt_rest;
        return enc ? "encrypt" : "decrypt";
    }
    return costmodel::name(row.phase);
}

nlohmann::json row_json(const costmodel::CostFormula& row, std::size_t n,
                        gfp::Prime p) {
    auto bits = costmodel::bit_cost(row, n, p);
    return nlohmann::json{{"scheme", costmodel::name(row.scheme)},
                          {"phase", phase_label(row)},
                          {"n", n},
                          {"muls", row.muls.eval(n)},
                          {"adds", row.adds.eval(n)},
                          {"invs", row.invs.eval(n)},
                          {"bitops_estimate", bits.total_bitops.to_decimal()}};
}

int cmd_bench(const BenchArgs& args) {
    gfp::Prime p(args.p);
    if (args.blocks == 0) throw ContractViolation("need at least one block");
    auto rng = make_rng(args.seed);
    auto km =
        keysched::keygen(args.n, p, *rng, std::max<std::uint64_t>(args.blocks, 2));

    std::vector<matvec::VectorP> message;
    for (std::size_t i = 0; i < args.blocks; ++i) {
        std::vector<std::uint64_t> e(args.n);
        for (auto& x : e) x = rng->below(p.value());
        message.emplace_back(p, std::move(e));
    }

    using costmodel::Phase;
    using costmodel::Scheme;

    cipher::Encryptor enc(km);
    cipher::Decryptor dec(km);
    gfp::OpCounts enc_total, dec_total;
    std::vector<costmodel::CounterCheck> checks;
    std::vector<std::string> check_names;
    std::vector<matvec::VectorP> cipher_blocks;
    for (std::size_t b = 0; b < args.blocks; ++b) {
        gfp::OpCounts enc_delta, dec_delta;
        cipher_blocks.push_back(enc.encrypt_block(message[b], &enc_delta));
        dec.decrypt_block(cipher_blocks[b], &dec_delta);
        enc_total += enc_delta;
        dec_total += dec_delta;
        if (b <= 1) {
            Phase ep = b == 0 ? Phase::encrypt_first : Phase::encrypt_rest;
            Phase dp = b == 0 ? Phase::decrypt_first : Phase::decrypt_rest;
            checks.push_back(costmodel::validate_counters(
                enc_delta, costmodel::per_block_cost(Scheme::proposed, ep), args.n));
            check_names.emplace_back(costmodel::name(ep));
            checks.push_back(costmodel::validate_counters(
                dec_delta, costmodel::per_block_cost(Scheme::proposed, dp), args.n));
            check_names.emplace_back(costmodel::name(dp));
        }
    }

    auto expected_totals = costmodel::total_cost(args.blocks * args.n, args.n);
    bool totals_enc_match = enc_total == expected_totals.encryption;
    bool totals_dec_match = dec_total == expected_totals.decryption;

    cipher::HillKey hill(km.initial_key());
    gfp::OpCounts hill_enc;
    cipher::hill_encrypt(hill, message[0], &hill_enc);
    auto hill_check = costmodel::validate_counters(
        hill_enc,
        costmodel::per_block_cost(Scheme::classical_hill, Phase::encrypt_first),
        args.n);

    std::vector<costmodel::CostFormula> table;
    for (Scheme s : {Scheme::proposed, Scheme::classical_hill, Scheme::affine_hill,
                     Scheme::lin, Scheme::toorani}) {
        if (s == Scheme::proposed) {
            for (Phase ph : {Phase::encrypt_first, Phase::encrypt_rest,
                             Phase::decrypt_first, Phase::decrypt_rest}) {
                table.push_back(costmodel::per_block_cost(s, ph));
            }
        } else {
            table.push_back(costmodel::per_block_cost(s, Phase::encrypt_first));
            table.push_back(costmodel::per_block_cost(s, Phase::decrypt_first));
        }
    }

    bool all_exact = totals_enc_match && totals_dec_match;
    for (const auto& check : checks) all_exact = all_exact && check.exact;

    if (args.json) {
        nlohmann::json out;
        out["p"] = args.p;
        out["n"] = args.n;
        out["blocks"] = args.blocks;
        out["rows"] = nlohmann::json::array();
        for (const auto& row : table) out["rows"].push_back(row_json(row, args.n, p));
        out["measured"] = nlohmann::json::array();
        for (std::size_t i = 0; i < checks.size(); ++i) {
            out["measured"].push_back({{"phase", check_names[i]},
                                       {"muls", checks[i].measured.muls},
                                       {"adds", checks[i].measured.adds},
                                       {"invs", checks[i].measured.invs},
                                       {"exact", checks[i].exact}});
        }
        out["totals"] = {{"encryption",
                          {{"muls", enc_total.muls},
                           {"adds", enc_total.adds},
                           {"invs", enc_total.invs},
                           {"matches_formula", totals_enc_match}}},
                         {"decryption",
                          {{"muls", dec_total.muls},
                           {"adds", dec_total.adds},
                           {"invs", dec_total.invs},
                           {"matches_formula", totals_dec_match}}}};
        out["classical_hill"] = {{"muls", hill_enc.muls},
                                 {"adds", hill_enc.adds},
                                 {"exact", hill_check.exact},
                                 {"note", hill_check.note}};
        std::cout << out.dump(2) << "\n";
        return all_exact ? 0 : 1;
    }

    std::cout << "per-block cost table at n = " << args.n << ", p = " << args.p
              << " (lambda = " << costmodel::lambda_bits(p) << ")\n";
    for (const auto& row : table) {
        auto bits = costmodel::bit_cost(row, args.n, p);
        std::cout << "  " << costmodel::name(row.scheme) << " "
                  << phase_label(row) << ": muls=" << row.muls.eval(args.n)
                  << " adds=" << row.adds.eval(args.n)
                  << " invs=" << row.invs.eval(args.n)
                  << " bitops~=" << bits.total_bitops.to_decimal() << "\n";
    }

    std::cout << "measured per-block counters (" << args.blocks << " blocks):\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        std::cout << "  " << check_names[i] << ": " << checks[i].render() << "\n";
    }
    std::cout << "message totals: encryption muls=" << enc_total.muls
              << " adds=" << enc_total.adds << " invs=" << enc_total.invs
              << (totals_enc_match ? " (matches the whole-message formula)"
                                   : " (MISMATCH against the formula)")
              << "\n";
    std::cout << "message totals: decryption muls=" << dec_total.muls
              << " adds=" << dec_total.adds << " invs=" << dec_total.invs
              << (totals_dec_match ? " (matches the whole-message formula)"
                                   : " (MISMATCH against the formula)")
              << "\n";
    std::cout << "classical hill measured: " << hill_check.render() << "\n";
    return all_exact ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamic-key Hill cipher over F_p: key tools, encryption, "
                 "cryptanalysis demos and an instrumented cost model"};
    app.require_subcommand(1);

    KeygenArgs keygen_args;
    auto* keygen = app.add_subcommand("keygen", "generate a key file");
    keygen->add_option("--p", keygen_args.p, "prime modulus")->required();
    keygen->add_option("--n", keygen_args.n, "block size")->required();
    keygen->add_option("--order-floor", keygen_args.order_floor,
                       "reject transformations of proven order at or below this");
    keygen->add_option("--seed", keygen_args.seed, "deterministic randomness seed");
    keygen->add_option("--enc", keygen_args.enc,
                       "byte encoding: auto, direct (p >= 257) or digits");
    keygen->add_option("--out", keygen_args.out, "key file path")->required();

    std::string key_path, in_path, out_path;
    auto* encrypt = app.add_subcommand("encrypt", "encrypt a file");
    encrypt->add_option("--key", key_path, "key file")->required();
    encrypt->add_option("--in", in_path, "plaintext input")->required();
    encrypt->add_option("--out", out_path, "ciphertext container output")->required();

    auto* decrypt = app.add_subcommand("decrypt", "decrypt a container");
    decrypt->add_option("--key", key_path, "key file")->required();
    decrypt->add_option("--in", in_path, "ciphertext container")->required();
    decrypt->add_option("--out", out_path, "plaintext output")->required();

    auto* verify =
        app.add_subcommand("verify-example", "check the embedded reference run");

    AttackArgs attack_args;
    auto* attack =
        app.add_subcommand("attack-demo", "known-plaintext attack contrast");
    attack->add_option("--p", attack_args.p, "prime modulus")->required();
    attack->add_option("--n", attack_args.n, "block size")->required();
    attack->add_option("--trials", attack_args.trials, "number of trials");
    attack->add_option("--seed", attack_args.seed, "deterministic randomness seed");

    std::uint64_t ks_p = 0;
    std::size_t ks_n = 0;
    auto* keyspace = app.add_subcommand("keyspace", "brute-force keyspace size");
    keyspace->add_option("--p", ks_p, "prime modulus")->required();
    keyspace->add_option("--n", ks_n, "block size")->required();

    std::uint64_t order_cap = 1ULL << 20;
    auto* order = app.add_subcommand("order", "bounded order search for the key's M");
    order->add_option("--key", key_path, "key file")->required();
    order->add_option("--cap", order_cap, "search cap");

    BenchArgs bench_args;
    auto* bench =
        app.add_subcommand("bench", "instrumented counters vs the cost model");
    bench->add_option("--p", bench_args.p, "prime modulus")->required();
    bench->add_option("--n", bench_args.n, "block size")->required();
    bench->add_option("--blocks", bench_args.blocks, "message length in blocks");
    bench->add_option("--seed", bench_args.seed, "deterministic randomness seed");
    bench->add_flag("--json", bench_args.json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*keygen) return cmd_keygen(keygen_args);
        if (*encrypt) return cmd_encrypt(key_path, in_path, out_path);
        if (*decrypt) return cmd_decrypt(key_path, in_path, out_path);
        if (*verify) return cmd_verify_example();
        if (*attack) return cmd_attack_demo(attack_args);
        if (*keyspace) return cmd_keyspace(ks_p, ks_n);
        if (*order) return cmd_order(key_path, order_cap);
        if (*bench) return cmd_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
