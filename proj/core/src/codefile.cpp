#include "rankmac/codefile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rankmac {

namespace {

using nlohmann::json;

int get_int(const json& j, const char* key, int lo, int hi) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw CodeFileError(std::string("missing or non-integer field '") + key + "'");
    const long long v = j[key].get<long long>();
    if (v < lo || v > hi)
        throw CodeFileError(std::string("field '") + key + "' out of range [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

std::vector<int> get_coeff_array(const json& j, size_t expected, long q, const char* what) {
    if (!j.is_array() || j.size() != expected)
        throw CodeFileError(std::string(what) + " must be an array of " + std::to_string(expected) +
                            " integers");
    std::vector<int> out;
    out.reserve(expected);
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw CodeFileError(std::string(what) + " has a non-integer entry");
        const long long v = e.get<long long>();
        if (v < 0 || v >= q) throw CodeFileError(std::string(what) + " entry out of [0, q)");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

}  // namespace

LinearCode parse_code_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw CodeFileError(std::string("invalid JSON: ") + e.what());
    }
    const int q = get_int(j, "q", 2, 1 << 20);
    const int m = get_int(j, "m", 1, 30);
    const int n = get_int(j, "n", 0, 64);
    if (!j.contains("modulus")) throw CodeFileError("missing field 'modulus'");
    std::vector<int> modulus = get_coeff_array(j["modulus"], static_cast<size_t>(m) + 1, q, "modulus");

    Field field = [&] {
        try {
            return Field(q, m, std::move(modulus));
        } catch (const std::exception& e) {
            throw CodeFileError(std::string("invalid field: ") + e.what());
        }
    }();

    if (!j.contains("generator") || !j["generator"].is_array())
        throw CodeFileError("missing or non-array field 'generator'");
    std::vector<CodeVector> gen;
    for (const auto& row : j["generator"]) {
        if (!row.is_array() || row.size() != static_cast<size_t>(n))
            throw CodeFileError("generator row must have n entries");
        CodeVector cv;
        cv.reserve(static_cast<size_t>(n));
        for (const auto& entry : row)
            cv.push_back(field.from_coords(get_coeff_array(entry, static_cast<size_t>(m), q, "generator entry")));
        gen.push_back(std::move(cv));
    }
    try {
        return LinearCode(std::move(field), n, std::move(gen));
    } catch (const std::exception& e) {
        throw CodeFileError(std::string("invalid code: ") + e.what());
    }
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CodeFileError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_json(buf.str());
}

std::string code_to_json(const LinearCode& c) {
    nlohmann::ordered_json j;
    const Field& f = c.field();
    j["q"] = f.q();
    j["m"] = f.m();
    j["modulus"] = f.modulus();
    j["n"] = c.n();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : c.generator()) {
        auto r = nlohmann::ordered_json::array();
        for (auto entry : row) r.push_back(f.coords(entry));
        rows.push_back(std::move(r));
    }
    j["generator"] = std::move(rows);
    return j.dump();
}

std::vector<std::string> counts_to_strings(const RankDistribution& d) {
    std::vector<std::string> out;
    out.reserve(d.size());
    for (const auto& c : d) out.push_back(c.get_str());
    return out;
}

}  // namespace rankmac
