#pragma once

// JSON exchange formats. Matrices are row-major arrays of rows, each entry a
// [re, im] pair. Readers always re-validate what they load.

#include <string>
#include <vector>

#include "json.hpp"

#include "schmidt/criteria.hpp"
#include "schmidt/povm.hpp"
#include "schmidt/states.hpp"

namespace schmidt {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

// {dim, a, t?, kind, elements}
json povm_to_json(const Povm& povm);
// Throws std::invalid_argument when malformed or when validate_gsic fails.
Povm povm_from_json(const json& j, double tol = 1e-10);

// {d1, d2, matrix}
json state_to_json(const BipartiteDensityMatrix& rho);
BipartiteDensityMatrix state_from_json(const json& j);

// {trace_norm, bounds: {"1": b1, ...}, sn_lower_bound, a1, a2, d1, d2}
json certificate_to_json(const SchmidtCertificate& cert);

// Either a bare [[re, im], ...] array or {"dim": d, "fiducial": [...]}.
std::vector<Complex> fiducial_from_json(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// printf("%.17g") with the C locale's '.' separator.
std::string format_double(double x);

}  // namespace schmidt
