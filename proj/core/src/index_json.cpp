#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "pnw/jumbled_index.hpp"

namespace pnw {

namespace {

constexpr int index_format_version = 1;

std::vector<std::size_t> read_profile(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw std::invalid_argument(std::string("index document lacks array '") + key + "'");
    std::vector<std::size_t> out;
    for (const auto& v : doc[key]) {
        if (!v.is_number_unsigned())
            throw std::invalid_argument(std::string("'") + key + "' holds a non-negative integer list");
        out.push_back(v.get<std::size_t>());
    }
    return out;
}

}  // namespace

std::string index_to_json(const JumbledIndex& ix) {
    nlohmann::ordered_json doc;
    doc["version"] = index_format_version;
    doc["n"] = ix.n();
    doc["maxA"] = std::vector<std::size_t>(ix.max_a().values().begin(), ix.max_a().values().end());
    doc["minA"] = std::vector<std::size_t>(ix.min_a().values().begin(), ix.min_a().values().end());
    return doc.dump();
}

JumbledIndex index_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("index document is not JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("index document must be a JSON object");
    if (!doc.contains("version") || doc["version"] != index_format_version)
        throw std::invalid_argument("unsupported index format version");
    if (!doc.contains("n") || !doc["n"].is_number_unsigned())
        throw std::invalid_argument("index document lacks 'n'");

    const auto n = doc["n"].get<std::size_t>();
    auto max_a = read_profile(doc, "maxA");
    auto min_a = read_profile(doc, "minA");
    if (max_a.size() != n + 1 || min_a.size() != n + 1)
        throw std::invalid_argument("index profiles must have n + 1 entries");
    return JumbledIndex(OnesProfile(ProfileKind::max_a, std::move(max_a)),
                        OnesProfile(ProfileKind::min_a, std::move(min_a)));
}

}  // namespace pnw
