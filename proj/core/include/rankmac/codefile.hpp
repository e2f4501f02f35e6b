#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rankmac/codes.hpp"

namespace rankmac {

struct CodeFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse a code from its JSON document:
///   { "q": int, "m": int, "modulus": [m+1 ints in [0,q)],
///     "n": int, "generator": [k rows of n entries of m coordinates] }.
/// Field validity (primality, irreducibility) and generator row independence
/// are enforced. Throws CodeFileError with a parse/validation message.
LinearCode parse_code_json(const std::string& text);
LinearCode load_code_file(const std::string& path);

/// Canonical JSON form of a code, inverse of parse_code_json.
std::string code_to_json(const LinearCode& c);

/// Counts as decimal strings (arbitrary precision, no 64-bit assumptions).
std::vector<std::string> counts_to_strings(const RankDistribution& d);

}  // namespace rankmac
