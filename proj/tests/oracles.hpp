#pragma once

// Test-only reference computations. Each one takes a deliberately naive
// route (explicit Kronecker products, explicit sums over basis kets) so it
// stays independent of the optimized library paths it checks.

#include <cmath>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "schmidt/io.hpp"
#include "schmidt/matrix.hpp"
#include "schmidt/povm.hpp"

namespace oracle {

using schmidt::Complex;
using schmidt::ComplexMatrix;

inline ComplexMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix m(r, c);
    for (auto& z : m.entries()) z = Complex(n(rng), n(rng));
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t d, std::mt19937_64& rng) {
    const ComplexMatrix g = random_matrix(d, d, rng);
    ComplexMatrix h = g + g.adjoint();
    h *= Complex(0.5);
    return h;
}

// tr(rho (A (x) B)) with the Kronecker product formed explicitly.
inline Complex dense_expectation(const ComplexMatrix& rho, const ComplexMatrix& a, const ComplexMatrix& b) {
    return (rho * schmidt::kron(a, b)).trace();
}

inline std::vector<std::vector<double>> dense_correlation(const ComplexMatrix& rho, const schmidt::Povm& pa,
                                                          const schmidt::Povm& pb) {
    std::vector<std::vector<double>> out;
    for (const auto& a : pa.elements) {
        std::vector<double> row;
        for (const auto& b : pb.elements) row.push_back(dense_expectation(rho, a, b).real());
        out.push_back(std::move(row));
    }
    return out;
}

// <i,mu| rho |j,nu> via explicit basis kets.
inline Complex matrix_element(const ComplexMatrix& rho, std::size_t d1, std::size_t d2, std::size_t i,
                              std::size_t mu, std::size_t j, std::size_t nu) {
    auto ket = [&](std::size_t x, std::size_t y) {
        ComplexMatrix ex(d1, 1), ey(d2, 1);
        ex(x, 0) = 1.0;
        ey(y, 0) = 1.0;
        return schmidt::kron(ex, ey);
    };
    return (ket(i, mu).adjoint() * rho * ket(j, nu))(0, 0);
}

inline std::vector<Complex> load_fiducial(std::size_t d) {
    return schmidt::fiducial_from_json(
        schmidt::read_json_file(std::string(SCHMIDT_TEST_DATA) + "/fiducial_d" + std::to_string(d) + ".json"));
}

// Any SIC for d in 2..5: built-in fiducials for d <= 3, shipped test data otherwise.
inline schmidt::Povm sic_for(std::size_t d) {
    return schmidt::sic_weyl_heisenberg(d, d <= 3 ? schmidt::builtin_sic_fiducial(d) : load_fiducial(d));
}

}  // namespace oracle
