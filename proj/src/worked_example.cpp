#include "dynahill/worked_example.hpp"

#include <sstream>

#include "dynahill/cipher.hpp"

namespace dynahill::worked_example {

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

std::string render(const Vec& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ")";
    return out.str();
}

std::string render(const Mat& m) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << render(m[i]);
    out << "]";
    return out.str();
}

matvec::VectorP to_vector(gfp::Prime p, const Vec& v) {
    return matvec::VectorP(p, v);
}

matvec::MatrixP to_matrix(gfp::Prime p, const Mat& m) {
    std::vector<std::uint64_t> flat;
    flat.reserve(m.size() * m.size());
    for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
    return matvec::MatrixP(p, m.size(), std::move(flat));
}

Vec from_vector(const matvec::VectorP& v) {
    return v.entries();
}

Mat from_matrix(const matvec::MatrixP& m) {
    Mat out(m.order(), Vec(m.order()));
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) out[i][j] = m.at(i, j);
    }
    return out;
}

} // namespace

Dataset reference_run() {
    Dataset d;
    d.p = 29;
    d.n = 3;
    // The chain transformation maps (v1,v2,v3) to (v1+v2, 3v2+v3, v1-v2+v3);
    // under the row-vector convention its matrix has those coefficient
    // columns.
    d.M = {{1, 0, 1}, {1, 3, 28}, {0, 1, 1}};
    d.A1 = {{1, 2, 0}, {3, 1, 0}, {1, 28, 4}};
    d.I1 = {2, 1, 5};
    d.keys = {
        {{1, 2, 0}, {3, 1, 0}, {1, 28, 4}},
        {{3, 6, 28}, {4, 3, 2}, {0, 1, 6}},
        {{9, 17, 25}, {7, 11, 3}, {1, 9, 5}},
        {{26, 18, 17}, {18, 7, 28}, {10, 3, 26}},
        {{15, 13, 25}, {25, 20, 10}, {13, 6, 4}},
        {{28, 6, 27}, {16, 12, 15}, {19, 22, 11}},
    };
    d.plain = {
        {12, 0, 17}, {2, 7, 5}, {14, 17, 22}, {0, 17, 3}, {0, 19, 5}, {8, 21, 4},
    };
    d.whitened = {
        {14, 1, 22}, {5, 15, 11}, {25, 18, 23}, {12, 21, 14}, {16, 13, 24}, {18, 22, 16},
    };
    // Third block, middle coordinate: 25*17 + 18*11 + 23*9 = 830 = 28*29 + 18.
    d.cipher = {
        {10, 7, 1}, {17, 28, 4}, {26, 18, 11}, {18, 28, 25}, {7, 3, 17}, {0, 28, 6},
    };
    return d;
}

CheckResult verify(const Dataset& data) {
    CheckResult result{true, 0, static_cast<int>(data.plain.size()), ""};
    auto fail = [&](const std::string& name, const std::string& expected,
                    const std::string& got) {
        result.pass = false;
        result.first_divergence = name + " expected " + expected + " got " + got;
    };

    gfp::Prime p(data.p);
    keysched::KeyMaterial km = keysched::KeyMaterial::make(
        to_matrix(p, data.M), to_matrix(p, data.A1), to_vector(p, data.I1));

    keysched::KeyChainState state = keysched::initial_state(km);
    for (std::size_t i = 0; i < data.plain.size(); ++i) {
        if (i > 0) state = keysched::advance_chain(km, state);
        std::string idx = std::to_string(i + 1);

        Mat key = from_matrix(state.key);
        if (key != data.keys[i]) {
            fail("A" + idx, render(data.keys[i]), render(key));
            return result;
        }
        ++result.checkpoints;

        std::vector<std::uint64_t> w(data.n);
        for (std::size_t k = 0; k < data.n; ++k) {
            w[k] = gfp::fadd(data.plain[i][k], state.whitening[k], p);
        }
        matvec::VectorP whitened(p, std::move(w));
        if (from_vector(whitened) != data.whitened[i]) {
            fail("m'" + idx, render(data.whitened[i]), render(from_vector(whitened)));
            return result;
        }
        ++result.checkpoints;

        matvec::VectorP c = matvec::vec_mat_mul(whitened, state.key);
        if (from_vector(c) != data.cipher[i]) {
            fail("c" + idx, render(data.cipher[i]), render(from_vector(c)));
            return result;
        }
        ++result.checkpoints;
    }

    // Decryption side runs on the expected ciphertext, not on what the
    // encryption side just produced.
    cipher::Decryptor dec(km);
    for (std::size_t i = 0; i < data.cipher.size(); ++i) {
        matvec::VectorP m = dec.decrypt_block(to_vector(p, data.cipher[i]));
        if (from_vector(m) != data.plain[i]) {
            fail("m" + std::to_string(i + 1), render(data.plain[i]),
                 render(from_vector(m)));
            return result;
        }
        ++result.checkpoints;
    }
    return result;
}

} // namespace dynahill::worked_example
