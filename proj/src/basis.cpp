#include "schmidt/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace schmidt {

HermitianBasis HermitianBasis::from_generators(std::size_t dim, std::vector<ComplexMatrix> generators) {
    if (dim < 2) throw std::invalid_argument("HermitianBasis: dimension must be at least 2");
    if (generators.size() != dim * dim - 1) {
        std::ostringstream os;
        os << "HermitianBasis: expected " << dim * dim - 1 << " generators, got " << generators.size();
        throw std::invalid_argument(os.str());
    }
    for (std::size_t a = 0; a < generators.size(); ++a) {
        const auto& g = generators[a];
        if (g.rows() != dim || g.cols() != dim)
            throw std::invalid_argument("HermitianBasis: generator has the wrong shape");
        require_hermitian(g, "HermitianBasis generator");
        if (std::abs(g.trace()) > 1e-12) {
            std::ostringstream os;
            os << "HermitianBasis: generator " << a << " has trace " << std::abs(g.trace());
            throw std::invalid_argument(os.str());
        }
    }
    HermitianBasis basis(dim, std::move(generators));
    const auto full = basis.full_basis();
    for (std::size_t a = 0; a < full.size(); ++a)
        for (std::size_t b = a; b < full.size(); ++b) {
            const Complex ip = trace_of_product(full[a], full[b]);
            const double expected = a == b ? 1.0 : 0.0;
            if (std::abs(ip - expected) > 1e-10) {
                std::ostringstream os;
                os << "HermitianBasis: tr(G_" << a << " G_" << b << ") = " << ip.real() << "+"
                   << ip.imag() << "i, expected " << expected;
                throw std::invalid_argument(os.str());
            }
        }
    return basis;
}

ComplexMatrix HermitianBasis::identity_component() const {
    return ComplexMatrix::identity(dim_) * (1.0 / std::sqrt(static_cast<double>(dim_)));
}

std::vector<ComplexMatrix> HermitianBasis::full_basis() const {
    std::vector<ComplexMatrix> out;
    out.reserve(generators_.size() + 1);
    out.push_back(identity_component());
    out.insert(out.end(), generators_.begin(), generators_.end());
    return out;
}

HermitianBasis gell_mann_basis(std::size_t d) {
    if (d < 2) throw std::invalid_argument("gell_mann_basis: dimension must be at least 2");
    const double h = 1.0 / std::sqrt(2.0);
    std::vector<ComplexMatrix> gens;
    gens.reserve(d * d - 1);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = h;
            m(k, j) = h;
            gens.push_back(std::move(m));
        }
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = Complex(0.0, -h);
            m(k, j) = Complex(0.0, h);
            gens.push_back(std::move(m));
        }
    for (std::size_t l = 1; l < d; ++l) {
        ComplexMatrix m(d, d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
        for (std::size_t i = 0; i < l; ++i) m(i, i) = norm;
        m(l, l) = -static_cast<double>(l) * norm;
        gens.push_back(std::move(m));
    }
    return HermitianBasis::from_generators(d, std::move(gens));
}

HermitianBasis reorder_basis(const HermitianBasis& basis, const std::vector<std::size_t>& permutation) {
    const auto& src = basis.generators();
    if (permutation.size() != src.size())
        throw std::invalid_argument("reorder_basis: permutation has the wrong length");
    std::vector<bool> seen(src.size(), false);
    std::vector<ComplexMatrix> out;
    out.reserve(src.size());
    for (std::size_t k : permutation) {
        if (k >= src.size() || seen[k]) throw std::invalid_argument("reorder_basis: not a permutation");
        seen[k] = true;
        out.push_back(src[k]);
    }
    return HermitianBasis::from_generators(basis.dim(), std::move(out));
}

ComplexMatrix sum_operator(const HermitianBasis& basis) {
    ComplexMatrix g(basis.dim(), basis.dim());
    for (const auto& ga : basis.generators()) g += ga;
    return g;
}

TRange t_range(const HermitianBasis& basis) {
    const double d = static_cast<double>(basis.dim());
    const ComplexMatrix g = sum_operator(basis);
    double lmax = -std::numeric_limits<double>::infinity();
    double lmin = std::numeric_limits<double>::infinity();
    auto absorb = [&](const ComplexMatrix& op) {
        const auto eig = herm_eigenvalues(op);
        lmin = std::min(lmin, eig.front());
        lmax = std::max(lmax, eig.back());
    };
    for (const auto& ga : basis.generators()) absorb(g - d * (d + 1.0) * ga);
    absorb((d + 1.0) * g);
    // Every operator in the set is traceless and nonzero, so lmin < 0 < lmax.
    if (!(lmax > 0.0) || !(lmin < 0.0)) {
        std::ostringstream os;
        os << "t_range: degenerate spectrum (lambda_min = " << lmin << ", lambda_max = " << lmax << ")";
        throw std::domain_error(os.str());
    }
    return {-1.0 / (d * d * lmax), 1.0 / (d * d * std::abs(lmin))};
}

double a_from_t(std::size_t dim, double t) {
    const double d = static_cast<double>(dim);
    return 1.0 / (d * d * d) + t * t * (d - 1.0) * (d + 1.0) * (d + 1.0) * (d + 1.0);
}

HermitianBasis rotate_basis(const HermitianBasis& basis, const RealMatrix& o) {
    const std::size_t n = basis.generators().size();
    if (o.n != n || o.entries.size() != n * n)
        throw std::invalid_argument("rotate_basis: orthogonal matrix has the wrong size");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += o(k, i) * o(k, j);
            if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-10) {
                std::ostringstream os;
                os << "rotate_basis: matrix is not orthogonal, (O^T O)[" << i << "][" << j << "] = " << s;
                throw std::invalid_argument(os.str());
            }
        }
    std::vector<ComplexMatrix> out;
    out.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        ComplexMatrix g(basis.dim(), basis.dim());
        for (std::size_t b = 0; b < n; ++b)
            if (o(a, b) != 0.0) g += o(a, b) * basis.generators()[b];
        out.push_back(std::move(g));
    }
    return HermitianBasis::from_generators(basis.dim(), std::move(out));
}

RealMatrix random_orthogonal(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    RealMatrix q{n, std::vector<double>(n * n)};
    for (auto& x : q.entries) x = normal(rng);
    // Modified Gram-Schmidt over columns; r_jj > 0 by construction, which is
    // the sign normalization that makes the result Haar distributed.
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += q(i, k) * q(i, j);
                for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
            }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += q(i, j) * q(i, j);
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
    }
    return q;
}

}  // namespace schmidt
