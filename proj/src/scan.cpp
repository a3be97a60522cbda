#include "schmidt/scan.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "schmidt/criteria.hpp"
#include "schmidt/io.hpp"

namespace schmidt {

StateFamily state_family_from_string(const std::string& s) {
    if (s == "bound-entangled") return StateFamily::BoundEntangled;
    if (s == "isotropic") return StateFamily::Isotropic;
    if (s == "werner") return StateFamily::Werner;
    throw std::invalid_argument("unknown state family '" + s + "'");
}

ScanCriterion scan_criterion_from_string(const std::string& s) {
    if (s == "gsic") return ScanCriterion::Gsic;
    if (s == "sic") return ScanCriterion::Sic;
    if (s == "ccnr") return ScanCriterion::Ccnr;
    throw std::invalid_argument("unknown criterion '" + s + "'");
}

std::string to_string(StateFamily f) {
    switch (f) {
        case StateFamily::BoundEntangled: return "bound-entangled";
        case StateFamily::Isotropic: return "isotropic";
        case StateFamily::Werner: return "werner";
    }
    return "";
}

std::string to_string(ScanCriterion c) {
    switch (c) {
        case ScanCriterion::Gsic: return "gsic";
        case ScanCriterion::Sic: return "sic";
        case ScanCriterion::Ccnr: return "ccnr";
    }
    return "";
}

ScanConfig ScanConfig::defaults_for(StateFamily family) {
    ScanConfig c;
    c.family = family;
    switch (family) {
        case StateFamily::BoundEntangled:
            c.min = 0.001;
            c.max = 0.999;
            break;
        case StateFamily::Isotropic:
            c.min = 0.0;
            c.max = 1.0;
            break;
        case StateFamily::Werner:
            c.min = -1.0;
            c.max = 1.0;
            break;
    }
    return c;
}

void ScanConfig::validate() const {
    if (steps < 2) throw std::invalid_argument("scan: steps must be at least 2");
    if (!(min < max)) throw std::invalid_argument("scan: grid requires min < max");
    const std::size_t dim = local_dim();
    if (dim < 2) throw std::invalid_argument("scan: dimension must be at least 2");
    if (family == StateFamily::BoundEntangled && !(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("scan: q must lie in [0, 1]");
    const auto [lo, hi] = [&]() -> std::pair<double, double> {
        const double dd = static_cast<double>(dim);
        switch (family) {
            case StateFamily::BoundEntangled: return {0.0, 1.0};
            case StateFamily::Isotropic: return {-1.0 / (dd * dd - 1.0), 1.0};
            case StateFamily::Werner: return {-1.0, 1.0};
        }
        return {0.0, 0.0};
    }();
    if (min < lo || max > hi) {
        std::ostringstream os;
        os << "scan: grid [" << min << ", " << max << "] leaves the family's range [" << lo << ", " << hi << "]";
        throw std::invalid_argument(os.str());
    }
    if (criterion != ScanCriterion::Ccnr) {
        if (r < 1 || static_cast<std::size_t>(r) > dim) throw std::invalid_argument("scan: r must lie in [1, d]");
        // Builds (and so validates) the POVMs, including t against its range.
        (void)scan_povms(*this);
    }
}

std::pair<Povm, Povm> scan_povms(const ScanConfig& config) {
    const std::size_t dim = config.local_dim();
    Povm a_side;
    if (config.criterion == ScanCriterion::Gsic) {
        HermitianBasis basis = gell_mann_basis(dim);
        if (config.rotate) basis = rotate_basis(basis, random_orthogonal(dim * dim - 1, config.seed));
        a_side = gsic_from_basis(basis, config.t);
    } else if (config.criterion == ScanCriterion::Sic) {
        a_side = sic_weyl_heisenberg(dim, config.fiducial ? *config.fiducial : builtin_sic_fiducial(dim));
    } else {
        throw std::invalid_argument("scan_povms: the CCNR criterion uses no POVM");
    }
    Povm b_side = conjugate_povm(a_side);
    return {std::move(a_side), std::move(b_side)};
}

BipartiteDensityMatrix scan_state(const ScanConfig& config, double param) {
    switch (config.family) {
        case StateFamily::BoundEntangled: return add_white_noise(bound_entangled_horodecki(param), config.q);
        case StateFamily::Isotropic: return isotropic(config.d, param);
        case StateFamily::Werner: return werner(config.d, param);
    }
    throw std::invalid_argument("scan_state: unknown family");
}

double grid_point(const ScanConfig& config, std::size_t k) {
    if (k + 1 == config.steps) return config.max;
    return config.min + (config.max - config.min) * static_cast<double>(k) / static_cast<double>(config.steps - 1);
}

std::vector<ScanRow> run_scan(const ScanConfig& config) {
    config.validate();
    std::optional<std::pair<Povm, Povm>> povms;
    double bound = 0.0;
    if (config.criterion != ScanCriterion::Ccnr) {
        povms = scan_povms(config);
        bound = gsic_bound(config.r, config.local_dim(), config.local_dim(), povms->first.a, povms->second.a);
    }

    std::vector<ScanRow> rows(config.steps);
    auto evaluate = [&](std::size_t k) {
        const double p = grid_point(config, k);
        const auto rho = scan_state(config, p);
        ScanRow row{p, 0.0, config.criterion, std::nullopt, std::nullopt};
        if (povms) {
            const auto c = correlation_matrix(rho, povms->first, povms->second);
            row.value = trace_norm(c.as_matrix()) - bound;
            row.a = povms->first.a;
            row.t = povms->first.t;
        } else {
            row.value = ccnr_value(rho) - 1.0;
        }
        rows[k] = row;
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(config.steps)));
    if (workers == 1) {
        for (std::size_t k = 0; k < config.steps; ++k) evaluate(k);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t k = next++; k < config.steps; k = next++) evaluate(k);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    pool.clear();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "param,value,criterion,a,t\n";
    for (const auto& r : rows) {
        out += format_double(r.param) + ',' + format_double(r.value) + ',' + to_string(r.criterion) + ',';
        if (r.a) out += format_double(*r.a);
        out += ',';
        if (r.t) out += format_double(*r.t);
        out += '\n';
    }
    return out;
}

std::string comparison_table_csv(const std::vector<std::size_t>& dims, int mub_count, std::optional<int> eam_count) {
    std::string out = "d,r,fidelity,gsic,mub,eam\n";
    for (std::size_t d : dims)
        for (int r = 1; static_cast<std::size_t>(r) < d; ++r) {
            const int n = eam_count.value_or(static_cast<int>(d) + 1);
            out += std::to_string(d) + ',' + std::to_string(r) + ',' +
                   format_double(critical_visibility(VisibilityCriterion::Fidelity, d, r)) + ',' +
                   format_double(critical_visibility(VisibilityCriterion::Gsic, d, r)) + ',' +
                   format_double(critical_visibility(VisibilityCriterion::Mub, d, r, mub_count)) + ',' +
                   format_double(critical_visibility(VisibilityCriterion::Eam, d, r, n)) + '\n';
        }
    return out;
}

}  // namespace schmidt
