#pragma once

#include <optional>
#include <string>
#include <vector>

#include "engstrom/matroid.hpp"
#include "engstrom/signvectors.hpp"

namespace engstrom {

// Matroid interchange document: `n` plus exactly one of `flats` or `bases`,
// arrays of strictly increasing 1-based element arrays.
struct MatroidDocument {
    int n = 0;
    std::optional<std::vector<std::vector<int>>> flats;
    std::optional<std::vector<std::vector<int>>> bases;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

MatroidDocument parse_matroid_document(const std::string& json_text);
Matroid matroid_from_document(const MatroidDocument& doc);

// Canonical echo of a matroid as a flats document; re-parsing yields an
// identical matroid.
std::string matroid_to_document(const Matroid& m);

// Resolves `uniform:R:N`, `fano`, or a file path.
Matroid load_matroid(const std::string& source);

CovectorSet load_covectors(const std::string& path);

std::string read_file(const std::string& path);  // throws ParseError

}  // namespace engstrom
