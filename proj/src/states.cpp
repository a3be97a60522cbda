#include "schmidt/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace schmidt {

BipartiteDensityMatrix::BipartiteDensityMatrix(std::size_t d1, std::size_t d2, ComplexMatrix matrix)
    : d1_(d1), d2_(d2), matrix_(std::move(matrix)) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("density matrix: local dimensions must be positive");
    if (matrix_.rows() != d1 * d2 || matrix_.cols() != d1 * d2) {
        std::ostringstream os;
        os << "density matrix: " << matrix_.rows() << "x" << matrix_.cols()
           << " does not match local dimensions (" << d1 << ", " << d2 << ")";
        throw std::invalid_argument(os.str());
    }
    require_hermitian(matrix_, "density matrix");
    const Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << "density matrix: trace is " << tr.real() << " (must be 1 within 1e-12)";
        throw std::invalid_argument(os.str());
    }
    const double min_eig = herm_eigenvalues(matrix_).front();
    if (min_eig < -kPsdTol) {
        std::ostringstream os;
        os.precision(17);
        os << "density matrix: not positive semidefinite (min eigenvalue " << min_eig << ")";
        throw std::invalid_argument(os.str());
    }
}

SchmidtVector::SchmidtVector(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw std::invalid_argument("SchmidtVector: no coefficients");
    double s = 0.0;
    for (double c : coefficients_) {
        if (c < 0.0) throw std::invalid_argument("SchmidtVector: coefficients must be nonnegative");
        s += c * c;
    }
    if (std::abs(s - 1.0) > 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << "SchmidtVector: sum of squares is " << s << " (must be 1 within 1e-12)";
        throw std::invalid_argument(os.str());
    }
    std::sort(coefficients_.begin(), coefficients_.end(), std::greater<>());
}

BipartiteDensityMatrix make_state(std::size_t d1, std::size_t d2, ComplexMatrix matrix) {
    if (matrix.is_square()) {
        const double tr = matrix.trace().real();
        const double dev = std::abs(tr - 1.0);
        if (dev > 1e-13) {
            std::ostringstream os;
            os.precision(17);
            os << "state construction produced trace " << tr;
            throw std::logic_error(os.str());
        }
        if (dev > 0.0) matrix *= Complex(1.0 / tr);
    }
    return BipartiteDensityMatrix(d1, d2, std::move(matrix));
}

BipartiteDensityMatrix bound_entangled_horodecki(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("bound_entangled_horodecki: x must lie in [0, 1]");
    ComplexMatrix m(9, 9);
    for (std::size_t i = 0; i < 9; ++i) m(i, i) = x;
    for (std::size_t i : {0u, 4u, 8u})
        for (std::size_t j : {0u, 4u, 8u}) m(i, j) = x;
    m(6, 6) = (1.0 + x) / 2.0;
    m(8, 8) = (1.0 + x) / 2.0;
    const double off = std::sqrt(1.0 - x * x) / 2.0;
    m(6, 8) = off;
    m(8, 6) = off;
    m *= Complex(1.0 / (8.0 * x + 1.0));
    return make_state(3, 3, std::move(m));
}

BipartiteDensityMatrix add_white_noise(const BipartiteDensityMatrix& rho, double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("add_white_noise: q must lie in [0, 1]");
    const std::size_t n = rho.d1() * rho.d2();
    ComplexMatrix m = q * rho.matrix() + ((1.0 - q) / static_cast<double>(n)) * ComplexMatrix::identity(n);
    return make_state(rho.d1(), rho.d2(), std::move(m));
}

BipartiteDensityMatrix isotropic(std::size_t d, double v) {
    if (d < 2) throw std::invalid_argument("isotropic: dimension must be at least 2");
    const double dd = static_cast<double>(d);
    const double v_min = -1.0 / (dd * dd - 1.0);
    if (!(v >= v_min && v <= 1.0)) {
        std::ostringstream os;
        os << "isotropic: v must lie in [" << v_min << ", 1]";
        throw std::invalid_argument(os.str());
    }
    const std::size_t n = d * d;
    ComplexMatrix m = ((1.0 - v) / (dd * dd)) * ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i * d + i, j * d + j) += v / dd;
    return make_state(d, d, std::move(m));
}

ComplexMatrix swap_operator(std::size_t d) {
    ComplexMatrix v(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) v(i * d + j, j * d + i) = 1.0;
    return v;
}

BipartiteDensityMatrix werner(std::size_t d, double f) {
    if (d < 2) throw std::invalid_argument("werner: dimension must be at least 2");
    if (!(f >= -1.0 && f <= 1.0)) throw std::invalid_argument("werner: f must lie in [-1, 1]");
    const double dd = static_cast<double>(d);
    const double norm = 1.0 / (dd * (dd * dd - 1.0));
    ComplexMatrix m = (norm * (dd - f)) * ComplexMatrix::identity(d * d) +
                      (norm * (dd * f - 1.0)) * swap_operator(d);
    return make_state(d, d, std::move(m));
}

BipartiteDensityMatrix pure_state(const ComplexMatrix& amplitudes) {
    const std::size_t d1 = amplitudes.rows(), d2 = amplitudes.cols();
    std::vector<Complex> psi(amplitudes.entries().begin(), amplitudes.entries().end());
    double n2 = 0.0;
    for (const auto& z : psi) n2 += std::norm(z);
    if (std::abs(n2 - 1.0) > 1e-10) {
        std::ostringstream os;
        os.precision(17);
        os << "pure_state: amplitudes are not normalized (norm^2 = " << n2 << ")";
        throw std::invalid_argument(os.str());
    }
    // Row-major amplitudes already follow the i*d2 + mu convention.
    return make_state(d1, d2, ComplexMatrix::outer(psi, psi) * (1.0 / n2));
}

BipartiteDensityMatrix pure_from_schmidt(const SchmidtVector& coeffs, std::size_t d1, std::size_t d2) {
    const auto& c = coeffs.coefficients();
    if (c.size() > std::min(d1, d2)) {
        std::ostringstream os;
        os << "pure_from_schmidt: " << c.size() << " coefficients exceed min(d1, d2) = " << std::min(d1, d2);
        throw std::invalid_argument(os.str());
    }
    ComplexMatrix amp(d1, d2);
    for (std::size_t s = 0; s < c.size(); ++s) amp(s, s) = c[s];
    return pure_state(amp);
}

int schmidt_rank(const ComplexMatrix& amplitudes, double tol) {
    double n2 = 0.0;
    for (const auto& z : amplitudes.entries()) n2 += std::norm(z);
    if (n2 == 0.0) throw std::invalid_argument("schmidt_rank: zero vector");
    if (std::abs(n2 - 1.0) > 1e-10) {
        std::ostringstream os;
        os.precision(17);
        os << "schmidt_rank: vector is not normalized (norm^2 = " << n2 << ")";
        throw std::invalid_argument(os.str());
    }
    int rank = 0;
    for (double s : singular_values(amplitudes))
        if (s > tol) ++rank;
    return rank;
}

std::vector<EnsembleComponent> werner_decomposition(std::size_t d, double f) {
    if (d < 2) throw std::invalid_argument("werner_decomposition: dimension must be at least 2");
    const double dd = static_cast<double>(d);
    if (!(f >= -1.0 && f <= 1.0 / dd)) {
        std::ostringstream os;
        os << "werner_decomposition: f must lie in [-1, 1/d] for a convex decomposition, got " << f;
        throw std::invalid_argument(os.str());
    }
    std::vector<EnsembleComponent> out;
    const std::size_t n = d * d;
    out.push_back({dd * (1.0 + f) / (dd + 1.0),
                   make_state(d, d, (1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n)),
                   std::nullopt});
    const double pair_weight = 2.0 * (1.0 - dd * f) / (dd * (dd * dd - 1.0));
    const double h = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            ComplexMatrix amp(d, d);
            amp(i, j) = h;
            amp(j, i) = -h;
            out.push_back({pair_weight, pure_state(amp), amp});
        }
    return out;
}

ComplexMatrix ensemble_sum(const std::vector<EnsembleComponent>& ensemble) {
    if (ensemble.empty()) throw std::invalid_argument("ensemble_sum: empty ensemble");
    const std::size_t n = ensemble.front().state.matrix().rows();
    ComplexMatrix sum(n, n);
    for (const auto& c : ensemble) sum += c.weight * c.state.matrix();
    return sum;
}

ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix u(d, d);
    for (auto& z : u.entries()) z = Complex(normal(rng), normal(rng));
    // Gram-Schmidt over columns; positive real r_jj gives Haar measure.
    for (std::size_t j = 0; j < d; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                Complex dot = 0.0;
                for (std::size_t i = 0; i < d; ++i) dot += std::conj(u(i, k)) * u(i, j);
                for (std::size_t i = 0; i < d; ++i) u(i, j) -= dot * u(i, k);
            }
        double norm = 0.0;
        for (std::size_t i = 0; i < d; ++i) norm += std::norm(u(i, j));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < d; ++i) u(i, j) /= norm;
    }
    return u;
}

ComplexMatrix random_density_matrix(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(d, d);
    for (auto& z : g.entries()) z = Complex(normal(rng), normal(rng));
    ComplexMatrix rho = g * g.adjoint();
    rho *= Complex(1.0 / rho.trace().real());
    // Remove rounding asymmetry.
    for (std::size_t i = 0; i < d; ++i) {
        rho(i, i) = rho(i, i).real();
        for (std::size_t j = i + 1; j < d; ++j) rho(j, i) = std::conj(rho(i, j));
    }
    return rho;
}

ComplexMatrix random_pure_amplitudes(std::size_t d1, std::size_t d2, std::size_t rank, std::mt19937_64& rng) {
    if (rank < 1 || rank > std::min(d1, d2))
        throw std::invalid_argument("random_pure_amplitudes: rank out of range");
    std::uniform_real_distribution<double> uniform(0.05, 1.0);
    std::vector<double> lambda(rank);
    double n2 = 0.0;
    for (auto& l : lambda) {
        l = uniform(rng);
        n2 += l * l;
    }
    for (auto& l : lambda) l /= std::sqrt(n2);
    const ComplexMatrix ua = random_unitary(d1, rng);
    const ComplexMatrix ub = random_unitary(d2, rng);
    ComplexMatrix amp(d1, d2);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t mu = 0; mu < d2; ++mu) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < rank; ++k) s += ua(i, k) * lambda[k] * ub(mu, k);
            amp(i, mu) = s;
        }
    // Renormalize away rounding.
    double m2 = 0.0;
    for (const auto& z : amp.entries()) m2 += std::norm(z);
    amp *= Complex(1.0 / std::sqrt(m2));
    return amp;
}

}  // namespace schmidt
