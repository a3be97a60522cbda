#include <Eigen/Dense>

#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schmidt/basis.hpp"
#include "schmidt/matrix.hpp"
#include "schmidt/povm.hpp"
#include "schmidt/states.hpp"

using namespace schmidt;

namespace {

ComplexMatrix pauli_x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix pauli_y() { return ComplexMatrix(2, 2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

std::vector<double> eigen_singular_values(const ComplexMatrix& a) {
    Eigen::MatrixXcd m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

}  // namespace

TEST_CASE("kron") {
    CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));

    const std::vector<double> d12{1, 2}, d34{3, 4}, expected{3, 4, 6, 8};
    CHECK(kron(ComplexMatrix::diagonal(d12), ComplexMatrix::diagonal(d34)) == ComplexMatrix::diagonal(expected));

    // |0><0| (x) |1><1| is |01><01|, i.e. composite index 0*2 + 1.
    const std::vector<double> p0{1, 0}, p1{0, 1};
    const ComplexMatrix k = kron(ComplexMatrix::diagonal(p0), ComplexMatrix::diagonal(p1));
    ComplexMatrix ket01(4, 4);
    ket01(1, 1) = 1.0;
    CHECK(k == ket01);
}

TEST_CASE("kron mixed product on random inputs") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {2u, 3u}) {
        const auto a = oracle::random_matrix(n, n, rng), b = oracle::random_matrix(n, n, rng);
        const auto c = oracle::random_matrix(n, n, rng), d = oracle::random_matrix(n, n, rng);
        CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
    }
}

TEST_CASE("herm_eigenvalues") {
    auto ez = herm_eigenvalues(pauli_z());
    CHECK(ez[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(ez[1] == doctest::Approx(1.0).epsilon(1e-15));

    for (double e : herm_eigenvalues(ComplexMatrix::identity(3))) CHECK(std::abs(e - 1.0) < 1e-15);

    // (sx + sy + sz)/sqrt2 squares to (3/2) I.
    const auto m = (pauli_x() + pauli_y() + pauli_z()) * (1.0 / std::sqrt(2.0));
    const auto e = herm_eigenvalues(m);
    CHECK(std::abs(e[0] + std::sqrt(1.5)) < 1e-14);
    CHECK(std::abs(e[1] - std::sqrt(1.5)) < 1e-14);

    ComplexMatrix bad(3, 3);
    bad(0, 2) = 1.0;
    try {
        herm_eigenvalues(bad);
        FAIL("non-Hermitian input accepted");
    } catch (const std::invalid_argument& ex) {
        CHECK(std::string(ex.what()).find("A[0][2]") != std::string::npos);
    }
}

TEST_CASE("herm_eigenvalues sum to the trace and diagonalize random Hermitian matrices") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 9; ++n) {
        const auto h = oracle::random_hermitian(n, rng);
        const auto e = herm_eigenvalues(h);
        CHECK(std::is_sorted(e.begin(), e.end()));
        const double tr = h.trace().real();
        CHECK(std::abs(std::accumulate(e.begin(), e.end(), 0.0) - tr) <= 1e-10 * std::max(1.0, std::abs(tr)));
        // ||H||_F^2 = sum of squared eigenvalues.
        double f2 = 0.0, e2 = 0.0;
        for (const auto& z : h.entries()) f2 += std::norm(z);
        for (double x : e) e2 += x * x;
        CHECK(std::abs(f2 - e2) < 1e-10 * f2);
    }
}

TEST_CASE("trace_norm") {
    const std::vector<double> d{3, -4};
    CHECK(std::abs(trace_norm(ComplexMatrix::diagonal(d)) - 7.0) < 1e-14);
    CHECK(trace_norm(ComplexMatrix(4, 4)) == 0.0);
    ComplexMatrix flat(9, 9, std::vector<Complex>(81, Complex(1.0 / 81.0)));
    CHECK(std::abs(trace_norm(flat) - 1.0 / 9.0) < 1e-15);
    // Non-square input works in either orientation.
    std::mt19937_64 rng(3);
    const auto r = oracle::random_matrix(4, 9, rng);
    CHECK(std::abs(trace_norm(r) - trace_norm(r.adjoint())) < 1e-12);
}

TEST_CASE("singular values agree with an independent SVD up to 81x81") {
    std::mt19937_64 rng(17);
    for (std::size_t n : {2u, 5u, 9u, 16u, 81u}) {
        const auto a = oracle::random_matrix(n, n, rng);
        const auto mine = singular_values(a);
        const auto ref = eigen_singular_values(a);
        const double ts = std::accumulate(mine.begin(), mine.end(), 0.0);
        const double tr = std::accumulate(ref.begin(), ref.end(), 0.0);
        CHECK(std::abs(ts - tr) <= 1e-12 * tr);
    }
    // A rank-deficient case: small singular values must stay small.
    const auto u = oracle::random_matrix(9, 2, rng), v = oracle::random_matrix(2, 9, rng);
    const auto sv = singular_values(u * v);
    for (std::size_t k = 2; k < sv.size(); ++k) CHECK(sv[k] < 1e-13 * sv[0]);
}

TEST_CASE("trace norm is unitarily invariant") {
    std::mt19937_64 rng(23);
    for (std::size_t n = 2; n <= 9; ++n) {
        const auto a = oracle::random_matrix(n, n, rng);
        const auto u = random_unitary(n, rng), v = random_unitary(n, rng);
        CHECK(std::abs(trace_norm(u * a * v) - trace_norm(a)) < 1e-9);
    }
}

TEST_CASE("trace norm equals sum of |eigenvalues| for Hermitian input") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const auto h = oracle::random_hermitian(2 + trial % 8, rng);
        double s = 0.0;
        for (double e : herm_eigenvalues(h)) s += std::abs(e);
        CHECK(std::abs(trace_norm(h) - s) < 1e-10);
    }
}

TEST_CASE("realign") {
    ComplexMatrix p00(4, 4);
    p00(0, 0) = 1.0;
    CHECK(std::abs(trace_norm(realign(p00, 2, 2)) - 1.0) < 1e-14);

    ComplexMatrix bell(4, 4);
    for (std::size_t i : {0u, 3u})
        for (std::size_t j : {0u, 3u}) bell(i, j) = 0.5;
    CHECK(std::abs(trace_norm(realign(bell, 2, 2)) - 2.0) < 1e-14);

    CHECK(std::abs(trace_norm(realign(ComplexMatrix::identity(9) * (1.0 / 9.0), 3, 3)) - 1.0 / 3.0) < 1e-15);

    CHECK_THROWS_AS(realign(ComplexMatrix::identity(6), 2, 2), std::invalid_argument);
}

TEST_CASE("realign matches explicit matrix elements and inverts exactly") {
    std::mt19937_64 rng(31);
    for (auto [d1, d2] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 2}, {3, 3}}) {
        const auto rho = oracle::random_matrix(d1 * d2, d1 * d2, rng);
        const auto r = realign(rho, d1, d2);
        CHECK(r.rows() == d1 * d1);
        CHECK(r.cols() == d2 * d2);
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j)
                for (std::size_t mu = 0; mu < d2; ++mu)
                    for (std::size_t nu = 0; nu < d2; ++nu)
                        CHECK(r(i * d1 + j, mu * d2 + nu) == oracle::matrix_element(rho, d1, d2, i, mu, j, nu));
        CHECK(unrealign(r, d1, d2) == rho);
    }
}

TEST_CASE("is_psd") {
    CHECK(is_psd(ComplexMatrix::identity(3), 1e-9));
    const std::vector<double> d{1, -0.5};
    CHECK_FALSE(is_psd(ComplexMatrix::diagonal(d), 1e-9));
    const auto povm = gsic_from_basis(gell_mann_basis(3), 0.01);
    CHECK(is_psd(povm.elements[0], 1e-9));
    CHECK_THROWS_AS(is_psd(ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0})), std::invalid_argument);
}
