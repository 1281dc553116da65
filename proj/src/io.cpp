#include "engstrom/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace engstrom {

namespace {

std::vector<std::vector<int>> parse_set_family(const nlohmann::json& arr, const char* field) {
    if (!arr.is_array())
        throw ParseError(std::string("field '") + field + "' must be an array of arrays");
    std::vector<std::vector<int>> family;
    for (const auto& inner : arr) {
        if (!inner.is_array())
            throw ParseError(std::string("field '") + field + "' must be an array of arrays");
        std::vector<int> set;
        for (const auto& v : inner) {
            if (!v.is_number_integer())
                throw ParseError(std::string("elements in '") + field + "' must be integers");
            set.push_back(v.get<int>());
        }
        for (std::size_t i = 1; i < set.size(); ++i)
            if (set[i - 1] >= set[i])
                throw ParseError(std::string("inner arrays of '") + field +
                                 "' must be strictly increasing");
        family.push_back(std::move(set));
    }
    return family;
}

}  // namespace

MatroidDocument parse_matroid_document(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("matroid document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("matroid document requires an integer field 'n'");

    MatroidDocument out;
    out.n = doc["n"].get<int>();
    bool has_flats = doc.contains("flats");
    bool has_bases = doc.contains("bases");
    if (has_flats == has_bases)
        throw ParseError("matroid document requires exactly one of 'flats' or 'bases'");
    if (has_flats) out.flats = parse_set_family(doc["flats"], "flats");
    if (has_bases) out.bases = parse_set_family(doc["bases"], "bases");
    return out;
}

Matroid matroid_from_document(const MatroidDocument& doc) {
    if (doc.flats) return Matroid::from_flats(doc.n, *doc.flats);
    return Matroid::from_bases(doc.n, *doc.bases);
}

std::string matroid_to_document(const Matroid& m) {
    nlohmann::ordered_json doc;
    doc["n"] = m.ground_size();
    doc["flats"] = m.flats_as_lists();
    return doc.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Matroid load_matroid(const std::string& source) {
    if (source == "fano") return Matroid::fano();
    if (source.rfind("uniform:", 0) == 0) {
        std::size_t sep = source.find(':', 8);
        if (sep == std::string::npos)
            throw ParseError("uniform matroid source must look like uniform:R:N");
        int r = 0, n = 0;
        try {
            r = std::stoi(source.substr(8, sep - 8));
            n = std::stoi(source.substr(sep + 1));
        } catch (const std::exception&) {
            throw ParseError("uniform matroid source must look like uniform:R:N");
        }
        return Matroid::uniform(r, n);
    }
    return matroid_from_document(parse_matroid_document(read_file(source)));
}

CovectorSet load_covectors(const std::string& path) {
    try {
        return CovectorSet::parse(read_file(path));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad covector file: ") + e.what());
    }
}

}  // namespace engstrom
