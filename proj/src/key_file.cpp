#include "dynahill/key_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace dynahill::keysched {

namespace {

constexpr std::string_view kMagic = "DYNAHILL-KEY/1";

class LineReader {
public:
    explicit LineReader(const std::string& text) : text_(text) {}

    std::string_view next(const char* what) {
        if (pos_ >= text_.size()) {
            throw ParseError(std::string("key file ends before ") + what);
        }
        std::size_t nl = text_.find('\n', pos_);
        if (nl == std::string::npos) {
            throw ParseError(std::string("unterminated line holding ") + what);
        }
        std::string_view line(text_.data() + pos_, nl - pos_);
        pos_ = nl + 1;
        return line;
    }

    bool exhausted() const { return pos_ >= text_.size(); }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

std::uint64_t parse_u64(std::string_view token, const char* what) {
    std::uint64_t v = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || token.empty()) {
        throw ParseError(std::string("bad ") + what + " \"" + std::string(token) + "\"");
    }
    return v;
}

std::uint64_t expect_kv(LineReader& r, std::string_view key) {
    std::string_view line = r.next(key.data());
    if (line.size() <= key.size() + 1 || line.substr(0, key.size()) != key ||
        line[key.size()] != '=') {
        throw ParseError("expected \"" + std::string(key) + "=<value>\", got \"" +
                         std::string(line) + "\"");
    }
    return parse_u64(line.substr(key.size() + 1), key.data());
}

std::vector<std::uint64_t> parse_row(std::string_view line, std::size_t n,
                                     std::uint64_t p_value, const char* what) {
    std::vector<std::uint64_t> row;
    row.reserve(n);
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t space = line.find(' ', pos);
        std::string_view token = space == std::string_view::npos
                                     ? line.substr(pos)
                                     : line.substr(pos, space - pos);
        std::uint64_t v = parse_u64(token, what);
        if (v >= p_value) {
            throw ParseError(std::string(what) + " entry " + std::to_string(v) +
                             " is not a residue mod " + std::to_string(p_value));
        }
        row.push_back(v);
        if (space == std::string_view::npos) break;
        pos = space + 1;
    }
    if (row.size() != n) {
        throw ParseError(std::string(what) + " row has " + std::to_string(row.size()) +
                         " entries, expected " + std::to_string(n));
    }
    return row;
}

matvec::MatrixP parse_matrix(LineReader& r, gfp::Prime p, std::size_t n,
                             const char* label) {
    std::string_view header = r.next(label);
    if (header != std::string(label) + ":") {
        throw ParseError(std::string("expected \"") + label + ":\", got \"" +
                         std::string(header) + "\"");
    }
    std::vector<std::uint64_t> rows;
    rows.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = parse_row(r.next(label), n, p.value(), label);
        rows.insert(rows.end(), row.begin(), row.end());
    }
    return matvec::MatrixP(p, n, std::move(rows));
}

} // namespace

std::string serialize_key(const KeyMaterial& km, codec::EncodingMode mode) {
    std::ostringstream out;
    out << kMagic << '\n';
    out << "p=" << km.prime().value() << '\n';
    out << "n=" << km.block_size() << '\n';
    out << "enc=" << codec::mode_name(mode) << '\n';
    auto emit_matrix = [&](const char* label, const matvec::MatrixP& m) {
        out << label << ":\n";
        for (std::size_t i = 0; i < m.order(); ++i) {
            for (std::size_t j = 0; j < m.order(); ++j) {
                out << (j == 0 ? "" : " ") << m.at(i, j);
            }
            out << '\n';
        }
    };
    emit_matrix("M", km.transform());
    emit_matrix("A1", km.initial_key());
    out << "I1:\n";
    for (std::size_t j = 0; j < km.block_size(); ++j) {
        out << (j == 0 ? "" : " ") << km.initial_vector()[j];
    }
    out << '\n';
    return out.str();
}

KeyFile parse_key(const std::string& text) {
    LineReader r(text);
    if (r.next("magic") != kMagic) {
        throw ParseError("not a DYNAHILL-KEY/1 file");
    }
    std::uint64_t p_value = expect_kv(r, "p");
    gfp::Prime p = [&] {
        try {
            return gfp::Prime(p_value);
        } catch (const Error& e) {
            throw ParseError(std::string("key modulus rejected: ") + e.what());
        }
    }();
    std::uint64_t n64 = expect_kv(r, "n");
    if (n64 == 0 || n64 > 4096) {
        throw ParseError("block size " + std::to_string(n64) + " out of range");
    }
    std::size_t n = static_cast<std::size_t>(n64);

    std::string_view enc_line = r.next("enc");
    if (enc_line.substr(0, 4) != "enc=") {
        throw ParseError("expected \"enc=<mode>\", got \"" + std::string(enc_line) + "\"");
    }
    codec::EncodingMode mode = codec::mode_from_name(std::string(enc_line.substr(4)));
    if (mode == codec::EncodingMode::direct && p.value() < 257) {
        throw ParseError("direct mode requires p >= 257");
    }

    matvec::MatrixP M = parse_matrix(r, p, n, "M");
    matvec::MatrixP A1 = parse_matrix(r, p, n, "A1");
    std::string_view iv_header = r.next("I1");
    if (iv_header != "I1:") {
        throw ParseError("expected \"I1:\", got \"" + std::string(iv_header) + "\"");
    }
    matvec::VectorP I1(p, parse_row(r.next("I1"), n, p.value(), "I1"));
    if (!r.exhausted()) {
        throw ParseError("trailing content after I1 row");
    }
    try {
        return KeyFile{KeyMaterial::make(std::move(M), std::move(A1), std::move(I1)),
                       mode};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("key material invalid: ") + e.what());
    }
}

void save_key(const std::filesystem::path& path, const KeyMaterial& km,
              codec::EncodingMode mode) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << serialize_key(km, mode);
    if (!out.flush()) throw Error("failed writing " + path.string());
}

KeyFile load_key(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_key(buf.str());
}

} // namespace dynahill::keysched
