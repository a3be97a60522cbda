#include "schmidt/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace schmidt {

namespace {

Complex complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("expected a complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

template <typename T>
T required(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("field '") + key + "': " + e.what());
    }
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw std::invalid_argument("matrix rows must be non-empty arrays");
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix rows have unequal length");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
    }
    return m;
}

json povm_to_json(const Povm& povm) {
    json j;
    j["dim"] = povm.dim;
    j["a"] = povm.a;
    if (povm.t) j["t"] = *povm.t;
    j["kind"] = to_string(povm.kind);
    json elems = json::array();
    for (const auto& e : povm.elements) elems.push_back(matrix_to_json(e));
    j["elements"] = std::move(elems);
    return j;
}

Povm povm_from_json(const json& j, double tol) {
    Povm povm;
    povm.dim = required<std::size_t>(j, "dim");
    povm.a = required<double>(j, "a");
    if (j.contains("t") && !j["t"].is_null()) povm.t = required<double>(j, "t");
    povm.kind = j.contains("kind") ? povm_kind_from_string(required<std::string>(j, "kind")) : PovmKind::External;
    const json& elems = j.contains("elements") ? j["elements"] : json();
    if (!elems.is_array()) throw std::invalid_argument("missing field 'elements'");
    for (const auto& e : elems) povm.elements.push_back(matrix_from_json(e));
    const auto rep = validate_gsic(povm, tol);
    if (!rep.all_passed()) throw std::invalid_argument("POVM failed validation: " + rep.failures());
    return povm;
}

json state_to_json(const BipartiteDensityMatrix& rho) {
    json j;
    j["d1"] = rho.d1();
    j["d2"] = rho.d2();
    j["matrix"] = matrix_to_json(rho.matrix());
    return j;
}

BipartiteDensityMatrix state_from_json(const json& j) {
    const auto d1 = required<std::size_t>(j, "d1");
    const auto d2 = required<std::size_t>(j, "d2");
    if (!j.contains("matrix")) throw std::invalid_argument("missing field 'matrix'");
    return BipartiteDensityMatrix(d1, d2, matrix_from_json(j["matrix"]));
}

json certificate_to_json(const SchmidtCertificate& cert) {
    json j;
    j["trace_norm"] = cert.trace_norm;
    json bounds = json::object();
    for (const auto& [r, b] : cert.bounds) bounds[std::to_string(r)] = b;
    j["bounds"] = std::move(bounds);
    j["sn_lower_bound"] = cert.sn_lower_bound;
    j["a1"] = cert.a1;
    j["a2"] = cert.a2;
    j["d1"] = cert.d1;
    j["d2"] = cert.d2;
    return j;
}

std::vector<Complex> fiducial_from_json(const json& j) {
    const json& arr = j.is_object() ? (j.contains("fiducial") ? j["fiducial"] : json()) : j;
    if (!arr.is_array() || arr.empty()) throw std::invalid_argument("fiducial must be a non-empty array");
    std::vector<Complex> v;
    for (const auto& z : arr) v.push_back(complex_from_json(z));
    if (j.is_object() && j.contains("dim") && required<std::size_t>(j, "dim") != v.size())
        throw std::invalid_argument("fiducial length does not match 'dim'");
    return v;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace schmidt
