#pragma once

// Parameter sweeps over the benchmark state families, emitted as CSV.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/povm.hpp"
#include "schmidt/states.hpp"

namespace schmidt {

enum class StateFamily { BoundEntangled, Isotropic, Werner };
enum class ScanCriterion { Gsic, Sic, Ccnr };

StateFamily state_family_from_string(const std::string& s);
ScanCriterion scan_criterion_from_string(const std::string& s);
std::string to_string(StateFamily f);
std::string to_string(ScanCriterion c);

struct ScanConfig {
    StateFamily family = StateFamily::BoundEntangled;
    std::size_t d = 3;        // ignored for the bound entangled family (always 3)
    double q = 1.0;           // white-noise weight, bound entangled family only
    ScanCriterion criterion = ScanCriterion::Gsic;
    double t = 0.01;
    std::optional<std::vector<Complex>> fiducial;  // required for SIC scans with d > 3
    int r = 1;                // value = ||P||_tr - bound(r)
    double min = 0.0, max = 1.0;
    std::size_t steps = 101;
    std::uint64_t seed = 0;
    bool rotate = false;      // seeded random orthogonal mixing of each side's generators
    unsigned threads = 1;

    // Default grid for the family: x in [0.001, 0.999], v in [0, 1], f in [-1, 1].
    static ScanConfig defaults_for(StateFamily family);

    std::size_t local_dim() const { return family == StateFamily::BoundEntangled ? 3 : d; }
    // Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

struct ScanRow {
    double param;
    double value;
    ScanCriterion criterion;
    std::optional<double> a;
    std::optional<double> t;
};

// POVM pair (A side, B side) used by a GSIC or SIC scan; B is the conjugate of A.
std::pair<Povm, Povm> scan_povms(const ScanConfig& config);

BipartiteDensityMatrix scan_state(const ScanConfig& config, double param);

// Grid point k of steps, both endpoints included.
double grid_point(const ScanConfig& config, std::size_t k);

// Rows are ordered by grid index regardless of how many threads evaluate them.
std::vector<ScanRow> run_scan(const ScanConfig& config);

// Header `param,value,criterion,a,t`; absent a/t fields are empty.
std::string scan_csv(const std::vector<ScanRow>& rows);

// Critical visibilities for r = 1 .. d-1, header `d,r,fidelity,gsic,mub,eam`.
std::string comparison_table_csv(const std::vector<std::size_t>& dims, int mub_count, std::optional<int> eam_count);

}  // namespace schmidt
