#pragma once

#include <string>

#include <json.hpp>

#include "spectre/matrix.hpp"

namespace spectre {

/// Insertion-ordered JSON: reports must serialize with a fixed field order.
using ojson = nlohmann::ordered_json;

/// Repo-wide matrix format: {"n": int, "entries": [[[re, im], ...], ...]},
/// row-major, each entry a 2-array of doubles. Doubles round-trip bit-exactly.
ojson matrix_to_json(const ComplexMatrix& x);
ComplexMatrix matrix_from_json(const ojson& j);

ojson complex_to_json(const cplx& z);
cplx complex_from_json(const ojson& j);

ojson complex_list_to_json(const std::vector<cplx>& values);
std::vector<cplx> complex_list_from_json(const ojson& j);

ComplexMatrix load_matrix_file(const std::string& path);
void save_matrix_file(const std::string& path, const ComplexMatrix& x);

ojson load_json_file(const std::string& path);
void save_json_file(const std::string& path, const ojson& j);

}  // namespace spectre
