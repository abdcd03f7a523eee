#include "spectre/json_io.hpp"

#include <fstream>

#include "spectre/errors.hpp"

namespace spectre {

ojson complex_to_json(const cplx& z) { return ojson::array({z.real(), z.imag()}); }

cplx complex_from_json(const ojson& j) {
    if (!j.is_array() || j.size() != 2)
        throw InvalidInputError("complex value must be a [re, im] array");
    return {j[0].get<double>(), j[1].get<double>()};
}

ojson complex_list_to_json(const std::vector<cplx>& values) {
    ojson a = ojson::array();
    for (const cplx& z : values) a.push_back(complex_to_json(z));
    return a;
}

std::vector<cplx> complex_list_from_json(const ojson& j) {
    if (!j.is_array()) throw InvalidInputError("expected a JSON array of [re, im] pairs");
    std::vector<cplx> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(complex_from_json(e));
    return v;
}

ojson matrix_to_json(const ComplexMatrix& x) {
    const int n = x.dim();
    ojson rows = ojson::array();
    for (int i = 0; i < n; ++i) {
        ojson row = ojson::array();
        for (int j = 0; j < n; ++j) row.push_back(complex_to_json(x(i, j)));
        rows.push_back(std::move(row));
    }
    ojson out;
    out["n"] = n;
    out["entries"] = std::move(rows);
    return out;
}

ComplexMatrix matrix_from_json(const ojson& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw InvalidInputError("matrix JSON must have fields n, entries");
    const int n = j["n"].get<int>();
    if (n < 1) throw InvalidInputError("matrix JSON: n must be >= 1");
    const ojson& rows = j["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw InvalidInputError("matrix JSON: entries must have n rows");
    ComplexMatrix x(n);
    for (int i = 0; i < n; ++i) {
        const ojson& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InvalidInputError("matrix JSON: each row must have n entries");
        for (int k = 0; k < n; ++k) x(i, k) = complex_from_json(row[k]);
    }
    if (!x.all_finite()) throw InvalidInputError("matrix JSON: non-finite entry");
    return x;
}

ojson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    ojson j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const ojson& j) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot open file for writing: " + path);
    out << j.dump(2) << '\n';
}

ComplexMatrix load_matrix_file(const std::string& path) {
    return matrix_from_json(load_json_file(path));
}

void save_matrix_file(const std::string& path, const ComplexMatrix& x) {
    save_json_file(path, matrix_to_json(x));
}

}  // namespace spectre
