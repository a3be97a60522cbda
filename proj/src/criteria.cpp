#include "schmidt/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace schmidt {

namespace {

void require_valid_a(std::size_t dim, double a, const char* context) {
    const double d = static_cast<double>(dim);
    if (!(a > 1.0 / (d * d * d) && a <= 1.0 / (d * d) + 1e-12)) {
        std::ostringstream os;
        os.precision(17);
        os << context << ": a = " << a << " is outside (1/d^3, 1/d^2] for d = " << dim;
        throw std::invalid_argument(os.str());
    }
}

// Generic tr(rho (A (x) B)) table over two operator families. For each A the
// partial contraction M_A[mu][nu] = sum_{i,j} rho[(j,nu),(i,mu)] A[i][j] is
// formed once, after which each entry costs d2^2.
ComplexMatrix expectation_table(const ComplexMatrix& rho, std::size_t d1, std::size_t d2,
                                const std::vector<ComplexMatrix>& ops_a, const std::vector<ComplexMatrix>& ops_b) {
    ComplexMatrix table(ops_a.size(), ops_b.size());
    ComplexMatrix partial(d2, d2);
    for (std::size_t alpha = 0; alpha < ops_a.size(); ++alpha) {
        const auto& a = ops_a[alpha];
        for (std::size_t mu = 0; mu < d2; ++mu)
            for (std::size_t nu = 0; nu < d2; ++nu) {
                Complex s = 0.0;
                for (std::size_t i = 0; i < d1; ++i)
                    for (std::size_t j = 0; j < d1; ++j) s += rho(j * d2 + nu, i * d2 + mu) * a(i, j);
                partial(mu, nu) = s;
            }
        for (std::size_t beta = 0; beta < ops_b.size(); ++beta) {
            const auto& b = ops_b[beta];
            Complex s = 0.0;
            for (std::size_t mu = 0; mu < d2; ++mu)
                for (std::size_t nu = 0; nu < d2; ++nu) s += partial(mu, nu) * b(mu, nu);
            table(alpha, beta) = s;
        }
    }
    return table;
}

}  // namespace

double index_of_coincidence(const Povm& povm, const ComplexMatrix& sigma, CoincidenceMode mode) {
    if (sigma.rows() != povm.dim || sigma.cols() != povm.dim) {
        std::ostringstream os;
        os << "index_of_coincidence: operator is " << sigma.rows() << "x" << sigma.cols() << ", POVM dimension is "
           << povm.dim;
        throw std::invalid_argument(os.str());
    }
    if (mode == CoincidenceMode::Direct) {
        double s = 0.0;
        for (const auto& p : povm.elements) s += std::norm(trace_of_product(p, sigma));
        return s;
    }
    const double d = static_cast<double>(povm.dim);
    double hs = 0.0;  // tr(sigma sigma^dagger)
    for (const auto& z : sigma.entries()) hs += std::norm(z);
    const double tr2 = std::norm(sigma.trace());
    return ((povm.a * d * d * d - 1.0) * hs + d * (1.0 - povm.a * d) * tr2) / (d * (d * d - 1.0));
}

ComplexMatrix CorrelationMatrix::as_matrix() const {
    ComplexMatrix m(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) m.entries()[k] = entries[k];
    return m;
}

CorrelationMatrix correlation_matrix(const BipartiteDensityMatrix& rho, const Povm& povm_a, const Povm& povm_b) {
    if (povm_a.dim != rho.d1() || povm_b.dim != rho.d2()) {
        std::ostringstream os;
        os << "correlation_matrix: POVM dimensions (" << povm_a.dim << ", " << povm_b.dim
           << ") do not match the state (" << rho.d1() << ", " << rho.d2() << ")";
        throw std::invalid_argument(os.str());
    }
    const ComplexMatrix table = expectation_table(rho.matrix(), rho.d1(), rho.d2(), povm_a.elements, povm_b.elements);

    CorrelationMatrix c;
    c.rows = table.rows();
    c.cols = table.cols();
    c.d1 = rho.d1();
    c.d2 = rho.d2();
    c.a1 = povm_a.a;
    c.a2 = povm_b.a;
    c.entries.resize(c.rows * c.cols);
    double total = 0.0;
    for (std::size_t k = 0; k < c.entries.size(); ++k) {
        const Complex z = table.entries()[k];
        if (std::abs(z.imag()) > 1e-12) {
            std::ostringstream os;
            os.precision(17);
            os << "correlation_matrix: entry " << k / c.cols << "," << k % c.cols << " has imaginary part "
               << z.imag() << " (non-Hermitian input?)";
            throw std::invalid_argument(os.str());
        }
        if (z.real() < -1e-12 || z.real() > 1.0 + 1e-12) {
            std::ostringstream os;
            os.precision(17);
            os << "correlation_matrix: entry " << k / c.cols << "," << k % c.cols << " = " << z.real()
               << " is not a probability";
            throw std::invalid_argument(os.str());
        }
        c.entries[k] = z.real();
        total += z.real();
    }
    if (std::abs(total - 1.0) > 1e-10) {
        std::ostringstream os;
        os.precision(17);
        os << "correlation_matrix: probabilities sum to " << total << " (incomplete POVM?)";
        throw std::invalid_argument(os.str());
    }
    return c;
}

ComplexMatrix basis_correlation_matrix(const BipartiteDensityMatrix& rho, const HermitianBasis& basis_a,
                                       const HermitianBasis& basis_b) {
    if (basis_a.dim() != rho.d1() || basis_b.dim() != rho.d2())
        throw std::invalid_argument("basis_correlation_matrix: basis dimensions do not match the state");
    return expectation_table(rho.matrix(), rho.d1(), rho.d2(), basis_a.full_basis(), basis_b.full_basis());
}

BoundConstants gsic_bound_constants(std::size_t dim1, std::size_t dim2, double a1, double a2) {
    require_valid_a(dim1, a1, "gsic_bound");
    require_valid_a(dim2, a2, "gsic_bound");
    const double d1 = static_cast<double>(dim1), d2 = static_cast<double>(dim2);
    return {
        std::sqrt(d1 * d2 * (d1 * d1 - 1.0) * (d2 * d2 - 1.0)),
        std::sqrt((a1 * d1 * d1 + 1.0) * (a2 * d2 * d2 + 1.0) * (d1 - 1.0) * (d2 - 1.0)),
        std::sqrt((a1 * d1 * d1 * d1 - 1.0) * (a2 * d2 * d2 * d2 - 1.0)),
    };
}

double gsic_bound(int r, std::size_t d1, std::size_t d2, double a1, double a2) {
    if (r < 1 || static_cast<std::size_t>(r) > std::min(d1, d2)) {
        std::ostringstream os;
        os << "gsic_bound: r = " << r << " outside [1, " << std::min(d1, d2) << "]";
        throw std::invalid_argument(os.str());
    }
    const auto c = gsic_bound_constants(d1, d2, a1, a2);
    return c.m / c.k + (r - 1) * c.n / c.k;
}

SchmidtCertificate certificate_from_trace_norm(double trace_norm, std::size_t d1, std::size_t d2, double a1,
                                               double a2) {
    SchmidtCertificate cert;
    cert.trace_norm = trace_norm;
    cert.d1 = d1;
    cert.d2 = d2;
    cert.a1 = a1;
    cert.a2 = a2;
    cert.constants = gsic_bound_constants(d1, d2, a1, a2);
    const int r_max = static_cast<int>(std::min(d1, d2));
    for (int r = 1; r <= r_max; ++r) {
        const double b = gsic_bound(r, d1, d2, a1, a2);
        cert.bounds[r] = b;
        if (trace_norm > b + kCertifyMargin) cert.sn_lower_bound = r + 1;
    }
    return cert;
}

SchmidtCertificate certify_schmidt_number(const BipartiteDensityMatrix& rho, const Povm& povm_a,
                                          const Povm& povm_b) {
    const CorrelationMatrix c = correlation_matrix(rho, povm_a, povm_b);
    return certificate_from_trace_norm(trace_norm(c.as_matrix()), rho.d1(), rho.d2(), povm_a.a, povm_b.a);
}

double ccnr_value(const BipartiteDensityMatrix& rho) {
    return trace_norm(realign(rho.matrix(), rho.d1(), rho.d2()));
}

double isotropic_trace_norm(std::size_t dim, double a, double v) {
    require_valid_a(dim, a, "isotropic_trace_norm");
    const double d = static_cast<double>(dim);
    // Eigenvalues 1/d^2 and v(ad^3-1)/(d^2(d^2-1)) (multiplicity d^2-1); the
    // matrix is symmetric so singular values are their absolute values.
    return 1.0 / (d * d) + std::abs(v) * (a * d * d * d - 1.0) / (d * d);
}

double werner_trace_norm(std::size_t dim, double a, double f) {
    require_valid_a(dim, a, "werner_trace_norm");
    const double d = static_cast<double>(dim);
    return 1.0 / (d * d) + std::abs(d * f - 1.0) * (a * d * d * d - 1.0) / (d * d * (d * d - 1.0));
}

double critical_visibility(VisibilityCriterion kind, std::size_t dim, int r, std::optional<int> count) {
    if (r < 1 || static_cast<std::size_t>(r) >= dim) {
        std::ostringstream os;
        os << "critical_visibility: r = " << r << " outside [1, d) for d = " << dim;
        throw std::invalid_argument(os.str());
    }
    const double d = static_cast<double>(dim);
    switch (kind) {
        case VisibilityCriterion::Fidelity:
        case VisibilityCriterion::Gsic:
            return (r * d - 1.0) / (d * d - 1.0);
        case VisibilityCriterion::Mub: {
            if (!count || *count < 2) throw std::invalid_argument("critical_visibility: MUB needs m >= 2");
            const double m = *count;
            return (d - r + m * (r - 1.0)) / (m * (d - 1.0));
        }
        case VisibilityCriterion::Eam: {
            if (!count || *count < 2) throw std::invalid_argument("critical_visibility: EAM needs n >= 2");
            const double n = *count;
            return (d - r) / (n - 1.0) + (r - 1.0) / (d - 1.0);
        }
    }
    throw std::invalid_argument("critical_visibility: unknown criterion");
}

double werner_detection_threshold(std::size_t dim, int r) {
    if (r < 1) throw std::invalid_argument("werner_detection_threshold: r must be at least 1");
    return 2.0 / static_cast<double>(dim) - r;
}

}  // namespace schmidt
