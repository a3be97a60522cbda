#pragma once

// Schmidt-number certification from GSIC correlation matrices, plus the
// comparison baselines (CCNR, fidelity, MUB, EAM) and closed forms for the
// isotropic and Werner families.

#include <map>
#include <optional>
#include <vector>

#include "schmidt/basis.hpp"
#include "schmidt/povm.hpp"
#include "schmidt/states.hpp"

namespace schmidt {

enum class CoincidenceMode { Direct, Formula };

// I(sigma) = sum_alpha |tr(P_alpha sigma)|^2, either summed directly or from
// the closed form in tr(sigma sigma^dagger) and |tr sigma|^2.
double index_of_coincidence(const Povm& povm, const ComplexMatrix& sigma, CoincidenceMode mode);

// Joint outcome probabilities P[alpha][beta] = tr(rho P_alpha (x) Q_beta).
struct CorrelationMatrix {
    std::size_t rows = 0;  // d1^2
    std::size_t cols = 0;  // d2^2
    std::vector<double> entries;  // row-major
    std::size_t d1 = 0, d2 = 0;
    double a1 = 0.0, a2 = 0.0;

    double operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    ComplexMatrix as_matrix() const;
};

// Throws when dimensions mismatch or an entry has imaginary part above 1e-12.
CorrelationMatrix correlation_matrix(const BipartiteDensityMatrix& rho, const Povm& povm_a, const Povm& povm_b);

// [C]_{ab} = tr(rho G_a (x) G_b) over the full orthonormal bases {G_0, G_1, ...}.
ComplexMatrix basis_correlation_matrix(const BipartiteDensityMatrix& rho, const HermitianBasis& basis_a,
                                       const HermitianBasis& basis_b);

struct BoundConstants {
    double k, m, n;
};

BoundConstants gsic_bound_constants(std::size_t d1, std::size_t d2, double a1, double a2);

// Upper bound on ||P||_tr for states of Schmidt number at most r:
// M/K + (r - 1) N/K.
double gsic_bound(int r, std::size_t d1, std::size_t d2, double a1, double a2);

struct SchmidtCertificate {
    double trace_norm = 0.0;
    std::map<int, double> bounds;  // r = 1 .. min(d1, d2)
    BoundConstants constants{};
    int sn_lower_bound = 1;
    std::size_t d1 = 0, d2 = 0;
    double a1 = 0.0, a2 = 0.0;
};

// Schmidt number lower bound 1 + max{r : trace_norm > bound(r) + kCertifyMargin}.
// Equality certifies nothing, and neither does an excess at rounding level:
// a separable state sitting exactly on bound(1) (the d=2 Werner state at f=0)
// otherwise comes out of the SVD some 1e-17 above it.
inline constexpr double kCertifyMargin = 1e-12;

SchmidtCertificate certify_schmidt_number(const BipartiteDensityMatrix& rho, const Povm& povm_a,
                                          const Povm& povm_b);
SchmidtCertificate certificate_from_trace_norm(double trace_norm, std::size_t d1, std::size_t d2, double a1,
                                               double a2);

// Trace norm of the realigned density matrix; above 1 detects entanglement.
double ccnr_value(const BipartiteDensityMatrix& rho);

// Closed-form ||P||_tr for the isotropic state with (P, P*) on the two sides.
double isotropic_trace_norm(std::size_t d, double a, double v);

// Closed-form ||P||_tr for the Werner state, 1/d^2 + |df - 1|(ad^3 - 1)/(d^2(d^2 - 1)).
double werner_trace_norm(std::size_t d, double a, double f);

enum class VisibilityCriterion { Fidelity, Gsic, Mub, Eam };

// Critical isotropic visibility above which each criterion certifies SN >= r + 1.
// For Mub `count` is the number m of bases; for Eam it is the parameter n of
// the equiangular-measurement comparison. Both require count >= 2.
double critical_visibility(VisibilityCriterion kind, std::size_t d, int r, std::optional<int> count = std::nullopt);

// Werner states with f below this value have Schmidt number at least r + 1.
double werner_detection_threshold(std::size_t d, int r);

}  // namespace schmidt
