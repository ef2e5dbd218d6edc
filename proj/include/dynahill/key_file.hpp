#pragma once

#include <filesystem>
#include <string>

#include "dynahill/codec.hpp"
#include "dynahill/keysched.hpp"

namespace dynahill::keysched {

/// On-disk key: the shared secret plus the byte-encoding mode both sides
/// agreed on. Text format, canonical down to the byte:
///
///   DYNAHILL-KEY/1
///   p=<decimal>
///   n=<decimal>
///   enc=<direct|digits>
///   M:
///   <n rows of n space-separated residues>
///   A1:
///   <n rows>
///   I1:
///   <one row>
///
/// Every line ends with '\n'; residues are in [0, p). The parser rejects
/// anything that violates the format or the key material invariants.
struct KeyFile {
    KeyMaterial material;
    codec::EncodingMode mode;
};

std::string serialize_key(const KeyMaterial& km, codec::EncodingMode mode);
KeyFile parse_key(const std::string& text);

void save_key(const std::filesystem::path& path, const KeyMaterial& km,
              codec::EncodingMode mode);
KeyFile load_key(const std::filesystem::path& path);

} // namespace dynahill::keysched
