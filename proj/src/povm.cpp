#include "schmidt/povm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace schmidt {

namespace {

double cube(double x) { return x * x * x; }

ComplexMatrix flat_element(std::size_t d) {
    return ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d * d));
}

}  // namespace

std::string to_string(PovmKind kind) {
    switch (kind) {
        case PovmKind::GsicFromBasis: return "gsic-from-basis";
        case PovmKind::SicWeylHeisenberg: return "sic-weyl-heisenberg";
        case PovmKind::External: return "external";
    }
    return "external";
}

PovmKind povm_kind_from_string(const std::string& s) {
    if (s == "gsic-from-basis") return PovmKind::GsicFromBasis;
    if (s == "sic-weyl-heisenberg") return PovmKind::SicWeylHeisenberg;
    if (s == "external") return PovmKind::External;
    throw std::invalid_argument("unknown POVM kind '" + s + "'");
}

bool ValidationReport::all_passed() const {
    return element_count && completeness.passed && equal_trace.passed && equal_purity.passed &&
           equal_overlap.passed && psd.passed;
}

std::string ValidationReport::failures() const {
    std::vector<std::string> names;
    if (!element_count) names.emplace_back("element count");
    if (!completeness.passed) names.emplace_back("completeness");
    if (!equal_trace.passed) names.emplace_back("equal trace");
    if (!equal_purity.passed) names.emplace_back(purity_in_range ? "equal purity" : "purity range");
    if (!equal_overlap.passed) names.emplace_back("pairwise overlap");
    if (!psd.passed) names.emplace_back("positivity");
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
    return out;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os.precision(6);
    auto line = [&](const char* name, const ConditionResult& c) {
        os << "  " << name << ": " << (c.passed ? "pass" : "FAIL") << " (worst deviation "
           << std::scientific << c.worst_deviation << std::defaultfloat << ")\n";
    };
    os << "  element count: " << (element_count ? "pass" : "FAIL") << "\n";
    line("completeness", completeness);
    line("equal trace", equal_trace);
    line("equal purity", equal_purity);
    os << "  purity range: " << (purity_in_range ? "pass" : "FAIL") << "\n";
    line("pairwise overlap", equal_overlap);
    line("positivity", psd);
    os.precision(17);
    os << "  measured a: " << measured_a << "\n";
    return os.str();
}

ValidationReport validate_gsic(const Povm& povm, double tol) {
    ValidationReport rep;
    const std::size_t n = povm.dim;
    const double d = static_cast<double>(n);
    rep.element_count = n >= 2 && povm.elements.size() == n * n;
    for (const auto& p : povm.elements)
        if (p.rows() != n || p.cols() != n) rep.element_count = false;
    if (!rep.element_count) return rep;

    ComplexMatrix sum(n, n);
    for (const auto& p : povm.elements) sum += p;
    rep.completeness.worst_deviation = max_abs_diff(sum, ComplexMatrix::identity(n));
    rep.completeness.passed = rep.completeness.worst_deviation <= tol;

    const double overlap = (1.0 - povm.a * d) / (d * (d * d - 1.0));
    double trace_dev = 0.0, purity_dev = 0.0, overlap_dev = 0.0, min_eig = 0.0;
    bool hermitian = true;
    for (std::size_t i = 0; i < povm.elements.size(); ++i) {
        const auto& p = povm.elements[i];
        trace_dev = std::max(trace_dev, std::abs(p.trace() - 1.0 / d));
        for (std::size_t j = i; j < povm.elements.size(); ++j) {
            const Complex ov = trace_of_product(p, povm.elements[j]);
            if (i == j)
                purity_dev = std::max(purity_dev, std::abs(ov - povm.a));
            else
                overlap_dev = std::max(overlap_dev, std::abs(ov - overlap));
        }
        if (!is_hermitian(p)) {
            hermitian = false;
            continue;
        }
        min_eig = std::min(min_eig, herm_eigenvalues(p).front());
    }
    rep.measured_a = trace_of_product(povm.elements[0], povm.elements[0]).real();
    rep.purity_in_range = povm.a > 1.0 / cube(d) && povm.a <= 1.0 / (d * d) + tol;

    rep.equal_trace = {trace_dev <= tol, trace_dev};
    rep.equal_purity = {purity_dev <= tol && rep.purity_in_range, purity_dev};
    rep.equal_overlap = {overlap_dev <= tol, overlap_dev};
    rep.psd = {hermitian && min_eig >= -kPsdTol, hermitian ? -min_eig : INFINITY};
    return rep;
}

Povm gsic_from_basis(const HermitianBasis& basis, double t) {
    const std::size_t n = basis.dim();
    const double d = static_cast<double>(n);
    if (t == 0.0)
        throw std::invalid_argument(
            "gsic_from_basis: t = 0 gives a = 1/d^3, which is not a GSIC (requires a > 1/d^3)");

    const ComplexMatrix g = sum_operator(basis);
    const ComplexMatrix flat = flat_element(n);
    Povm povm;
    povm.dim = n;
    povm.a = a_from_t(n, t);
    povm.t = t;
    povm.kind = PovmKind::GsicFromBasis;
    povm.elements.reserve(n * n);
    for (const auto& ga : basis.generators()) povm.elements.push_back(flat + t * (g - d * (d + 1.0) * ga));
    povm.elements.push_back(flat + t * (d + 1.0) * g);

    // Endpoints computed another way may land an ulp outside the eigenvalue-derived range.
    const TRange range = t_range(basis);
    const double slack = 1e-12 * std::max(-range.t_min, range.t_max);
    if (t < range.t_min - slack || t > range.t_max + slack) {
        double worst = INFINITY;
        std::size_t worst_index = 0;
        for (std::size_t k = 0; k < povm.elements.size(); ++k) {
            const double e = herm_eigenvalues(povm.elements[k]).front();
            if (e < worst) {
                worst = e;
                worst_index = k;
            }
        }
        std::ostringstream os;
        os.precision(17);
        os << "gsic_from_basis: t = " << t << " is outside [" << range.t_min << ", " << range.t_max
           << "]; element " << worst_index << " has eigenvalue " << worst;
        throw std::invalid_argument(os.str());
    }
    return povm;
}

std::vector<Complex> builtin_sic_fiducial(std::size_t d) {
    using std::numbers::pi;
    using std::numbers::sqrt3;
    if (d == 2)
        return {std::sqrt((3.0 + sqrt3) / 6.0), std::polar(std::sqrt((3.0 - sqrt3) / 6.0), pi / 4.0)};
    if (d == 3) {
        const double h = 1.0 / std::sqrt(2.0);
        return {0.0, h, -h};
    }
    std::ostringstream os;
    os << "no built-in SIC fiducial for d = " << d << "; supply one explicitly";
    throw std::invalid_argument(os.str());
}

Povm sic_weyl_heisenberg(std::size_t d, const std::vector<Complex>& fiducial) {
    if (d < 2) throw std::invalid_argument("sic_weyl_heisenberg: dimension must be at least 2");
    if (fiducial.size() != d) {
        std::ostringstream os;
        os << "sic_weyl_heisenberg: fiducial has " << fiducial.size() << " components, expected " << d;
        throw std::invalid_argument(os.str());
    }
    double norm2 = 0.0;
    for (const auto& z : fiducial) norm2 += std::norm(z);
    if (std::abs(norm2 - 1.0) > 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << "sic_weyl_heisenberg: fiducial is not normalized (norm^2 = " << norm2 << ")";
        throw std::invalid_argument(os.str());
    }

    const double dd = static_cast<double>(d);
    Povm povm;
    povm.dim = d;
    povm.a = 1.0 / (dd * dd);
    povm.kind = PovmKind::SicWeylHeisenberg;
    povm.elements.reserve(d * d);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            // (X^p Z^q psi)_k = omega^{q(k-p)} psi_{k-p}
            std::vector<Complex> v(d);
            for (std::size_t k = 0; k < d; ++k) {
                const std::size_t src = (k + d - p) % d;
                const double angle = 2.0 * std::numbers::pi * static_cast<double>((q * src) % d) / dd;
                v[k] = std::polar(1.0, angle) * fiducial[src];
            }
            povm.elements.push_back(ComplexMatrix::outer(v, v) * (1.0 / dd));
        }

    const auto rep = validate_gsic(povm, 1e-10);
    if (!rep.all_passed())
        throw std::invalid_argument("sic_weyl_heisenberg: fiducial does not generate a SIC (" +
                                    rep.failures() + " violated)");
    return povm;
}

Povm conjugate_povm(const Povm& povm) {
    Povm out = povm;
    for (auto& p : out.elements) p = p.conjugate();
    return out;
}

Povm mix_with_flat(const Povm& povm, double weight) {
    if (!(weight > 0.0 && weight <= 1.0))
        throw std::invalid_argument("mix_with_flat: weight must lie in (0, 1]");
    const double d = static_cast<double>(povm.dim);
    const ComplexMatrix flat = flat_element(povm.dim);
    Povm out;
    out.dim = povm.dim;
    out.a = 1.0 / cube(d) + weight * weight * (povm.a - 1.0 / cube(d));
    // Shrinking a basis-built GSIC is the same as shrinking its t.
    if (povm.kind == PovmKind::GsicFromBasis && povm.t) {
        out.kind = PovmKind::GsicFromBasis;
        out.t = *povm.t * weight;
    }
    out.elements.reserve(povm.elements.size());
    for (const auto& p : povm.elements) out.elements.push_back(flat + weight * (p - flat));
    return out;
}

ComplexMatrix reconstruct_operator(const ComplexMatrix& sigma, const Povm& povm) {
    const std::size_t n = povm.dim;
    if (sigma.rows() != n || sigma.cols() != n) {
        std::ostringstream os;
        os << "reconstruct_operator: operator is " << sigma.rows() << "x" << sigma.cols()
           << ", POVM dimension is " << n;
        throw std::invalid_argument(os.str());
    }
    const double d = static_cast<double>(n);
    const double denom = povm.a * cube(d) - 1.0;
    if (!(denom > 0.0)) throw std::invalid_argument("reconstruct_operator: requires a > 1/d^3");
    const double frame = d * (d * d - 1.0) / denom;
    ComplexMatrix out(n, n);
    for (const auto& p : povm.elements) out += (frame * trace_of_product(p, sigma)) * p;
    out -= ((d - povm.a * d * d) / denom * sigma.trace()) * ComplexMatrix::identity(n);
    return out;
}

std::vector<ComplexMatrix> f_basis(const Povm& povm) {
    const double d = static_cast<double>(povm.dim);
    const double denom = povm.a * cube(d) - 1.0;
    if (!(denom > 0.0)) throw std::invalid_argument("f_basis: requires a > 1/d^3");
    const double scale = std::sqrt(d * (d * d - 1.0) / denom);
    const double shift = (1.0 - std::sqrt((d * d - 1.0) / denom)) / (d * std::sqrt(d));
    const ComplexMatrix id = ComplexMatrix::identity(povm.dim);
    std::vector<ComplexMatrix> out;
    out.reserve(povm.elements.size());
    for (const auto& p : povm.elements) out.push_back(scale * p + shift * id);
    return out;
}

}  // namespace schmidt
