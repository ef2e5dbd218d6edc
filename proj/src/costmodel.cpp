#include "dynahill/costmodel.hpp"

#include <sstream>

namespace dynahill::costmodel {

namespace {

constexpr Poly kZero = Poly::of(0, 0, 0, 0);

struct Row {
    Poly muls;
    Poly adds;
    Poly invs;
};

Row row_for(Scheme scheme, Phase phase) {
    bool encrypting = phase == Phase::encrypt_first || phase == Phase::encrypt_rest;
    switch (scheme) {
    case Scheme::proposed:
        switch (phase) {
        case Phase::encrypt_first:
            // whiten (n) + row-times-matrix (n^2 muls, n^2 - n adds)
            return {Poly::of(0, 0, 1, 0), Poly::of(0, 0, 1, 0), kZero};
        case Phase::encrypt_rest:
            // + key update (n^3, n^3 - n^2) and whitening update (n^2, n^2 - n)
            return {Poly::of(0, 0, 2, 1), Poly::of(0, -1, 1, 1), kZero};
        case Phase::decrypt_first:
            // inversion (2n^3, 2n^3 - 2n^2, n invs) + multiply + unwhiten
            return {Poly::of(0, 0, 1, 2), Poly::of(0, 0, -1, 2), Poly::of(0, 1, 0, 0)};
        case Phase::decrypt_rest:
            return {Poly::of(0, 0, 2, 3), Poly::of(0, -1, -1, 3), Poly::of(0, 1, 0, 0)};
        }
        break;
    case Scheme::classical_hill:
        return {Poly::of(0, 0, 1, 0), Poly::of(-1, 0, 1, 0), kZero};
    case Scheme::affine_hill:
        return {Poly::of(0, 0, 1, 0), Poly::of(0, 0, 1, 0), kZero};
    case Scheme::lin:
        return {Poly::of(3, 1, 1, 0), Poly::of(4, 0, 1, 0),
                encrypting ? kZero : Poly::of(1, 0, 0, 0)};
    case Scheme::toorani:
        return {Poly::of(0, 2, 1, 0), Poly::of(1, 1, 1, 0),
                encrypting ? kZero : Poly::of(1, 0, 0, 0)};
    }
    throw ContractViolation("unknown scheme/phase combination");
}

} // namespace

const char* name(Scheme s) {
    switch (s) {
    case Scheme::proposed: return "proposed";
    case Scheme::classical_hill: return "classical-hill";
    case Scheme::affine_hill: return "affine-hill";
    case Scheme::lin: return "lin";
    case Scheme::toorani: return "toorani";
    }
    return "?";
}

const char* name(Phase ph) {
    switch (ph) {
    case Phase::encrypt_first: return "encrypt-first";
    case Phase::encrypt_rest: return "encrypt-rest";
    case Phase::decrypt_first: return "decrypt-first";
    case Phase::decrypt_rest: return "decrypt-rest";
    }
    return "?";
}

std::uint64_t Poly::eval(std::uint64_t n) const {
    __int128 acc = 0;
    __int128 power = 1;
    for (std::size_t k = 0; k < 4; ++k) {
        acc += static_cast<__int128>(c[k]) * power;
        power *= static_cast<__int128>(n);
    }
    if (acc < 0) throw ContractViolation("cost polynomial evaluates negative");
    return static_cast<std::uint64_t>(acc);
}

gfp::OpCounts CostFormula::eval(std::uint64_t n) const {
    return gfp::OpCounts{adds.eval(n), muls.eval(n), invs.eval(n)};
}

CostFormula per_block_cost(Scheme scheme, Phase phase) {
    Row row = row_for(scheme, phase);
    return CostFormula{scheme, phase, row.muls, row.adds, row.invs};
}

MessageTotals total_cost(std::uint64_t wp_symbols, std::uint64_t n) {
    if (wp_symbols == 0 || n == 0) {
        throw ContractViolation("message and block sizes must be positive");
    }
    std::uint64_t blocks = (wp_symbols + n - 1) / n;
    gfp::OpCounts enc = per_block_cost(Scheme::proposed, Phase::encrypt_first).eval(n);
    gfp::OpCounts dec = per_block_cost(Scheme::proposed, Phase::decrypt_first).eval(n);
    gfp::OpCounts enc_rest = per_block_cost(Scheme::proposed, Phase::encrypt_rest).eval(n);
    gfp::OpCounts dec_rest = per_block_cost(Scheme::proposed, Phase::decrypt_rest).eval(n);
    std::uint64_t rest = blocks - 1;
    enc += gfp::OpCounts{enc_rest.adds * rest, enc_rest.muls * rest,
                         enc_rest.invs * rest};
    dec += gfp::OpCounts{dec_rest.adds * rest, dec_rest.muls * rest,
                         dec_rest.invs * rest};
    return MessageTotals{blocks, enc, dec};
}

std::uint32_t lambda_bits(gfp::Prime p) {
    std::uint64_t v = p.value() - 1;
    std::uint32_t bits = 0;
    while (v != 0) {
        v >>= 1;
        ++bits;
    }
    return bits == 0 ? 1 : bits;
}

BitCostEstimate bit_cost(const CostFormula& formula, std::uint64_t n, gfp::Prime p) {
    std::uint32_t lambda = lambda_bits(p);
    BigUint lam{lambda};
    BigUint total = BigUint{formula.adds.eval(n)} * lam +
                    BigUint{formula.muls.eval(n)} * lam * lam +
                    BigUint{formula.invs.eval(n)} * lam * lam * lam;
    return BitCostEstimate{lambda, std::move(total)};
}

std::string CounterCheck::render() const {
    std::ostringstream out;
    out << "measured muls=" << measured.muls << " adds=" << measured.adds
        << " invs=" << measured.invs << "; expected muls=" << expected.muls
        << " adds=" << expected.adds << " invs=" << expected.invs << "; "
        << (exact ? "exact match" : "MISMATCH");
    if (!exact) {
        out << " (delta muls=" << delta_muls << " adds=" << delta_adds
            << " invs=" << delta_invs << ")";
    }
    if (!note.empty()) out << " [" << note << "]";
    return out.str();
}

CounterCheck validate_counters(const gfp::OpCounts& measured,
                               const CostFormula& expected, std::uint64_t n) {
    gfp::OpCounts want = expected.eval(n);
    CounterCheck check{
        measured,
        want,
        measured == want,
        static_cast<std::int64_t>(measured.adds) - static_cast<std::int64_t>(want.adds),
        static_cast<std::int64_t>(measured.muls) - static_cast<std::int64_t>(want.muls),
        static_cast<std::int64_t>(measured.invs) - static_cast<std::int64_t>(want.invs),
        "",
    };
    if (expected.scheme == Scheme::classical_hill && !check.exact &&
        check.delta_muls == 0 && check.delta_invs == 0 &&
        measured.adds == n * (n - 1)) {
        check.note = "known discrepancy: published row counts n^2-1 adds, "
                     "row-times-matrix performs n(n-1)";
    }
    return check;
}

} // namespace dynahill::costmodel
