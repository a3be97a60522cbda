#pragma once

// GSIC and SIC POVMs: construction, validation and the dual-frame identities.

#include <optional>
#include <string>
#include <vector>

#include "schmidt/basis.hpp"
#include "schmidt/matrix.hpp"

namespace schmidt {

enum class PovmKind { GsicFromBasis, SicWeylHeisenberg, External };

std::string to_string(PovmKind kind);
PovmKind povm_kind_from_string(const std::string& s);

struct Povm {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> elements;
    double a = 0.0;            // common purity tr(P^2)
    std::optional<double> t;   // construction parameter, when built from a basis
    PovmKind kind = PovmKind::External;
};

struct ConditionResult {
    bool passed = false;
    double worst_deviation = 0.0;
};

struct ValidationReport {
    bool element_count = false;
    ConditionResult completeness;   // sum P = I
    ConditionResult equal_trace;    // tr P = 1/d
    ConditionResult equal_purity;   // tr P^2 = a, with 1/d^3 < a <= 1/d^2
    ConditionResult equal_overlap;  // tr P_a P_b = (1 - a d)/(d(d^2-1))
    ConditionResult psd;            // worst_deviation = -min eigenvalue (clamped at 0)
    bool purity_in_range = false;
    double measured_a = 0.0;        // tr(P_0^2)

    bool all_passed() const;
    // Names of the failing conditions, comma separated; empty when valid.
    std::string failures() const;
    std::string summary() const;
};

ValidationReport validate_gsic(const Povm& povm, double tol = 1e-10);

// P_alpha = I/d^2 + t[G - d(d+1)G_alpha] for the d^2-1 generators and
// P_{d^2} = I/d^2 + t(d+1)G. Throws std::invalid_argument for t outside
// t_range (reporting the most negative eigenvalue) and for t = 0.
Povm gsic_from_basis(const HermitianBasis& basis, double t);

// Elements |psi_pq><psi_pq|/d with psi_pq = X^p Z^q fiducial, ordered p-major.
// Throws when the fiducial is not normalized or the orbit is not a SIC.
Povm sic_weyl_heisenberg(std::size_t d, const std::vector<Complex>& fiducial);

// Built-in fiducials for d = 2 and d = 3 only.
std::vector<Complex> builtin_sic_fiducial(std::size_t d);

Povm conjugate_povm(const Povm& povm);

// P'_alpha = I/d^2 + weight (P_alpha - I/d^2), weight in (0, 1]. The result is
// again a GSIC with a' = 1/d^3 + weight^2 (a - 1/d^3).
Povm mix_with_flat(const Povm& povm, double weight);

// sum_alpha d(d^2-1)/(ad^3-1) tr(P_alpha sigma) P_alpha - (d - ad^2)/(ad^3-1) tr(sigma) I.
ComplexMatrix reconstruct_operator(const ComplexMatrix& sigma, const Povm& povm);

// The orthonormal operator basis F_alpha obtained from the POVM elements
// by an affine shift. Throws when a <= 1/d^3.
std::vector<ComplexMatrix> f_basis(const Povm& povm);

}  // namespace schmidt
