#pragma once

// Dense complex matrix kernel.
//
// Everything here works on small matrices (operators on C^d and C^d1 (x) C^d2
// with d up to ~9), so storage is a flat row-major std::vector and the
// spectral routines are cyclic Jacobi methods, which give high relative
// accuracy at these sizes.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace schmidt {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    // |u><v|
    static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s); }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s); }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest entrywise modulus of a - b. Throws on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest |a(i,j) - conj(a(j,i))|.
double hermiticity_defect(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

// Throws std::invalid_argument naming the worst entry pair when `a` is not
// square or not Hermitian within `tol`.
void require_hermitian(const ComplexMatrix& a, const char* context, double tol = kHermitianTol);

// Eigenvalues of a Hermitian matrix in ascending order.
std::vector<double> herm_eigenvalues(const ComplexMatrix& a);

// Singular values in descending order (one-sided Jacobi).
std::vector<double> singular_values(const ComplexMatrix& a);

double trace_norm(const ComplexMatrix& a);

bool is_psd(const ComplexMatrix& a, double tol = kPsdTol);

// Realignment of an operator on C^d1 (x) C^d2:
//   R[i*d1 + j, mu*d2 + nu] = <i,mu| rho |j,nu>.
ComplexMatrix realign(const ComplexMatrix& rho, std::size_t d1, std::size_t d2);

// Inverse index map of realign.
ComplexMatrix unrealign(const ComplexMatrix& r, std::size_t d1, std::size_t d2);

}  // namespace schmidt
