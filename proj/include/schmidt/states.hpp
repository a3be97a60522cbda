#pragma once

// Bipartite density matrices, the state families used for benchmarking the
// criteria, and Schmidt-rank utilities.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "schmidt/matrix.hpp"

namespace schmidt {

// A validated density matrix on C^d1 (x) C^d2. Subsystem A is the slow index:
// |i, mu> is row i*d2 + mu.
class BipartiteDensityMatrix {
public:
    // Checks Hermiticity (1e-10), trace 1 (1e-12) and positivity (1e-9).
    // Throws std::invalid_argument naming the violated invariant.
    BipartiteDensityMatrix(std::size_t d1, std::size_t d2, ComplexMatrix matrix);

    std::size_t d1() const noexcept { return d1_; }
    std::size_t d2() const noexcept { return d2_; }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }

private:
    std::size_t d1_;
    std::size_t d2_;
    ComplexMatrix matrix_;
};

// Schmidt coefficients, sorted descending, with sum of squares 1 (1e-12).
class SchmidtVector {
public:
    explicit SchmidtVector(std::vector<double> coefficients);
    const std::vector<double>& coefficients() const noexcept { return coefficients_; }

private:
    std::vector<double> coefficients_;
};

// Closed-form constructors: a trace off by less than 1e-13 is renormalized,
// anything larger is a construction bug and throws.
BipartiteDensityMatrix make_state(std::size_t d1, std::size_t d2, ComplexMatrix matrix);

// The 3x3 bound entangled family with x in [0, 1].
BipartiteDensityMatrix bound_entangled_horodecki(double x);

// q rho + (1 - q) I/(d1 d2), q in [0, 1].
BipartiteDensityMatrix add_white_noise(const BipartiteDensityMatrix& rho, double q);

// v |psi+><psi+| + (1 - v) I/d^2; accepts -1/(d^2-1) <= v <= 1.
BipartiteDensityMatrix isotropic(std::size_t d, double v);

// [(d - f) I + (d f - 1) V] / (d(d^2-1)) with V the swap, f in [-1, 1].
BipartiteDensityMatrix werner(std::size_t d, double f);

// |psi><psi| for psi = sum_s lambda_s |ss>.
BipartiteDensityMatrix pure_from_schmidt(const SchmidtVector& coeffs, std::size_t d1, std::size_t d2);

// Amplitudes psi(i, mu) of a pure state, as a d1 x d2 matrix.
BipartiteDensityMatrix pure_state(const ComplexMatrix& amplitudes);

// Number of singular values of the d1 x d2 amplitude matrix above tol.
int schmidt_rank(const ComplexMatrix& amplitudes, double tol = 1e-10);

ComplexMatrix swap_operator(std::size_t d);

struct EnsembleComponent {
    double weight;
    BipartiteDensityMatrix state;
    // Present for pure components.
    std::optional<ComplexMatrix> amplitudes;
};

// Convex decomposition of a Werner state into white noise plus the
// antisymmetric pair states (|ij> - |ji>)/sqrt2, valid for -1 <= f <= 1/d.
std::vector<EnsembleComponent> werner_decomposition(std::size_t d, double f);

// Weighted sum of the components.
ComplexMatrix ensemble_sum(const std::vector<EnsembleComponent>& ensemble);

// Random sampling helpers for property tests and scans.
ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng);
ComplexMatrix random_density_matrix(std::size_t d, std::mt19937_64& rng);
// Amplitudes (U_A diag(lambda) U_B^T) of a random pure state with exactly
// `rank` nonzero Schmidt coefficients.
ComplexMatrix random_pure_amplitudes(std::size_t d1, std::size_t d2, std::size_t rank, std::mt19937_64& rng);

}  // namespace schmidt
