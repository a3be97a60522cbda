#include "schmidt/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace schmidt {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream os;
        os << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
           << b.cols();
        throw std::invalid_argument(os.str());
    }
}

double off_diagonal_norm2(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return s;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        std::ostringstream os;
        os << "ComplexMatrix: " << data_.size() << " entries for a " << rows_ << "x" << cols_
           << " matrix";
        throw std::invalid_argument(os.str());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
    ComplexMatrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m = *this;
    for (auto& z : m.data_) z = std::conj(z);
    return m;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix is not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& z : data_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        std::ostringstream os;
        os << "operator*: inner dimensions " << a.cols() << " and " << b.rows() << " differ";
        throw std::invalid_argument(os.str());
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return k;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw std::invalid_argument("trace_of_product: incompatible shapes");
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
    return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    return m;
}

double hermiticity_defect(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("hermiticity_defect: matrix is not square");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    return a.is_square() && hermiticity_defect(a) <= tol;
}

void require_hermitian(const ComplexMatrix& a, const char* context, double tol) {
    if (!a.is_square()) {
        std::ostringstream os;
        os << context << ": expected a square matrix, got " << a.rows() << "x" << a.cols();
        throw std::invalid_argument(os.str());
    }
    double worst = 0.0;
    std::size_t wi = 0, wj = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j) {
            const double dev = std::abs(a(i, j) - std::conj(a(j, i)));
            if (dev > worst) {
                worst = dev;
                wi = i;
                wj = j;
            }
        }
    if (worst > tol) {
        std::ostringstream os;
        os.precision(17);
        os << context << ": matrix is not Hermitian, |A[" << wi << "][" << wj << "] - conj(A[" << wj
           << "][" << wi << "])| = " << worst << " > " << tol;
        throw std::invalid_argument(os.str());
    }
}

// Cyclic complex Jacobi. Each rotation first removes the phase of a(p,q) and
// then applies the classical real rotation to the resulting symmetric block.
std::vector<double> herm_eigenvalues(const ComplexMatrix& input) {
    require_hermitian(input, "herm_eigenvalues");
    const std::size_t n = input.rows();
    ComplexMatrix a = input;
    // Symmetrize exactly so rounding in the input cannot bias the diagonal.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }

    double scale = 0.0;
    for (const auto& z : a.entries()) scale += std::norm(z);
    const double stop = 1e-32 * std::max(scale, 1e-300);

    for (int sweep = 0; sweep < 100 && off_diagonal_norm2(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) continue;
                const Complex phase = std::conj(a(p, q)) / r;  // e^{-i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // V = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on columns (p, q).
                const Complex vpp = c, vpq = s, vqp = -s * phase, vqq = c * phase;
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * vpp + akq * vqp;
                    a(k, q) = akp * vpq + akq * vqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
                    a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

// One-sided (Hestenes) Jacobi: orthogonalize the columns of A pairwise; the
// singular values are the final column norms.
std::vector<double> singular_values(const ComplexMatrix& input) {
    ComplexMatrix a = input.rows() >= input.cols() ? input : input.adjoint();
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (n == 0) return {};

    constexpr double eps = 1e-15;
    for (int sweep = 0; sweep < 100; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double alpha = 0.0, beta = 0.0;
                Complex gamma = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    alpha += std::norm(a(k, i));
                    beta += std::norm(a(k, j));
                    gamma += std::conj(a(k, i)) * a(k, j);
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const Complex phase = std::conj(gamma) / g;  // e^{-i phi}
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t k = 0; k < m; ++k) {
                    const Complex ai = a(k, i);
                    const Complex bj = a(k, j) * phase;
                    a(k, i) = c * ai - s * bj;
                    a(k, j) = s * ai + c * bj;
                }
            }
        if (!rotated) break;
    }

    std::vector<double> sv(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k) s += std::norm(a(k, j));
        sv[j] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double trace_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (double v : singular_values(a)) s += v;
    return s;
}

bool is_psd(const ComplexMatrix& a, double tol) {
    const auto eig = herm_eigenvalues(a);
    return eig.empty() || eig.front() >= -tol;
}

ComplexMatrix realign(const ComplexMatrix& rho, std::size_t d1, std::size_t d2) {
    if (rho.rows() != d1 * d2 || rho.cols() != d1 * d2) {
        std::ostringstream os;
        os << "realign: a " << rho.rows() << "x" << rho.cols()
           << " matrix does not match local dimensions (" << d1 << ", " << d2 << ")";
        throw std::invalid_argument(os.str());
    }
    ComplexMatrix r(d1 * d1, d2 * d2);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d1; ++j)
            for (std::size_t mu = 0; mu < d2; ++mu)
                for (std::size_t nu = 0; nu < d2; ++nu)
                    r(i * d1 + j, mu * d2 + nu) = rho(i * d2 + mu, j * d2 + nu);
    return r;
}

ComplexMatrix unrealign(const ComplexMatrix& r, std::size_t d1, std::size_t d2) {
    if (r.rows() != d1 * d1 || r.cols() != d2 * d2)
        throw std::invalid_argument("unrealign: shape does not match local dimensions");
    ComplexMatrix rho(d1 * d2, d1 * d2);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d1; ++j)
            for (std::size_t mu = 0; mu < d2; ++mu)
                for (std::size_t nu = 0; nu < d2; ++nu)
                    rho(i * d2 + mu, j * d2 + nu) = r(i * d1 + j, mu * d2 + nu);
    return rho;
}

}  // namespace schmidt
