#pragma once

// Orthonormal Hermitian operator bases {G_0 = I/sqrt(d); G_1 ... G_{d^2-1}}.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "schmidt/matrix.hpp"

namespace schmidt {

// Real square matrix stored row-major; used for orthogonal mixing of generators.
struct RealMatrix {
    std::size_t n = 0;
    std::vector<double> entries;

    double operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    double& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

class HermitianBasis {
public:
    // Validates tracelessness (1e-12) and orthonormality (1e-10, including G_0).
    static HermitianBasis from_generators(std::size_t dim, std::vector<ComplexMatrix> generators);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<ComplexMatrix>& generators() const noexcept { return generators_; }
    ComplexMatrix identity_component() const;

    // G_0 followed by the traceless generators: d^2 operators in total.
    std::vector<ComplexMatrix> full_basis() const;

private:
    HermitianBasis(std::size_t dim, std::vector<ComplexMatrix> generators)
        : dim_(dim), generators_(std::move(generators)) {}

    std::size_t dim_;
    std::vector<ComplexMatrix> generators_;
};

// Generalized Gell-Mann generators in the order: symmetric pairs (j<k,
// lexicographic), antisymmetric pairs (same order, -i above the diagonal),
// then diagonal l = 1..d-1 with diag(1,..,1,-l,0,..)/sqrt(l(l+1)).
HermitianBasis gell_mann_basis(std::size_t d);

// Reorders generators: output[k] = basis.generators()[permutation[k]].
HermitianBasis reorder_basis(const HermitianBasis& basis, const std::vector<std::size_t>& permutation);

// Library index for each of the eight qutrit generators of the worked
// example, in that example's order. Applying it with reorder_basis to
// gell_mann_basis(3) reproduces the example's G_1..G_8.
inline constexpr std::array<std::size_t, 8> kQutritExampleOrder = {6, 0, 1, 3, 7, 2, 4, 5};

// G = sum of the traceless generators.
ComplexMatrix sum_operator(const HermitianBasis& basis);

struct TRange {
    double t_min;
    double t_max;
    bool contains(double t) const { return t >= t_min && t <= t_max; }
};

// Interval of t for which every GSIC element built from `basis` is PSD.
// Extrema are taken over the union of spectra of G - d(d+1)G_alpha and (d+1)G.
TRange t_range(const HermitianBasis& basis);

// Purity tr(P_alpha^2) of the GSIC built with parameter t.
double a_from_t(std::size_t d, double t);

// G~_alpha = sum_beta o(alpha, beta) G_beta. Rejects o unless o^T o = I within 1e-10.
HermitianBasis rotate_basis(const HermitianBasis& basis, const RealMatrix& o);

// Haar-like random orthogonal matrix: Gram-Schmidt on a seeded Gaussian
// matrix, with column signs fixed so that R has a positive diagonal.
RealMatrix random_orthogonal(std::size_t n, std::uint64_t seed);

}  // namespace schmidt
