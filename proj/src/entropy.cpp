#include "qinfo/entropy.hpp"

#include <cmath>

#include "qinfo/local_coherence.hpp"

namespace qinfo {

namespace {

constexpr double kZeroLogThreshold = 1e-14;
constexpr double kSupportThreshold = 1e-12;

}  // namespace

double clamp_bits(double value) {
    if (value < 0.0 && value > -1e-9) return 0.0;
    return value;
}

double shannon_entropy(const RealVector& p) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (p[i] > kZeroLogThreshold) h -= p[i] * std::log2(p[i]);
    return clamp_bits(h);
}

double von_neumann(const DensityOperator& rho) {
    return shannon_entropy(eigenvalues_of(rho.matrix()));
}

double diagonal_entropy(const DensityOperator& rho) {
    RealVector p = rho.matrix().diagonal().real();
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (p[i] < 0.0) p[i] = 0.0;
    return shannon_entropy(p);
}

double diagonal_entropy(const DensityOperator& rho, const ComplexMatrix& basis) {
    if (basis.rows() != rho.dim() || basis.cols() != rho.dim())
        throw InvalidBasis("diagonal_entropy: basis has wrong dimensions");
    const double err = unitarity_error(basis);
    if (err > 1e-9)
        throw InvalidBasis("diagonal_entropy: basis is not unitary, error " +
                           std::to_string(err));
    RealVector p(rho.dim());
    for (int s = 0; s < rho.dim(); ++s) {
        const Complex v = basis.col(s).dot(rho.matrix() * basis.col(s));
        p[s] = std::max(v.real(), 0.0);
    }
    return shannon_entropy(p);
}

double relative_entropy(const DensityOperator& a, const DensityOperator& b) {
    Spectrum sa = eig_hermitian(a);
    Spectrum sb = eig_hermitian(b);

    // support(a) must lie inside support(b): the kernel of b carries no
    // weight of a.
    double kernel_weight = 0.0;
    for (Eigen::Index j = 0; j < sb.eigenvalues.size(); ++j) {
        if (sb.eigenvalues[j] > kSupportThreshold) continue;
        const ComplexVector v = sb.eigenvectors.col(j);
        kernel_weight += v.dot(a.matrix() * v).real();
    }
    if (kernel_weight > 1e-10)
        throw InfiniteRelativeEntropy(
            "relative_entropy: support(a) not contained in support(b), kernel weight " +
            std::to_string(kernel_weight));

    // Tr(a log2 a)
    double tr_a_log_a = 0.0;
    for (Eigen::Index i = 0; i < sa.eigenvalues.size(); ++i)
        if (sa.eigenvalues[i] > kZeroLogThreshold)
            tr_a_log_a += sa.eigenvalues[i] * std::log2(sa.eigenvalues[i]);

    // Tr(a log2 b) over the support of b
    double tr_a_log_b = 0.0;
    for (Eigen::Index j = 0; j < sb.eigenvalues.size(); ++j) {
        if (sb.eigenvalues[j] <= kSupportThreshold) continue;
        const ComplexVector v = sb.eigenvectors.col(j);
        const double weight = v.dot(a.matrix() * v).real();
        tr_a_log_b += weight * std::log2(sb.eigenvalues[j]);
    }

    return clamp_bits(tr_a_log_a - tr_a_log_b);
}

double coherent_entropy(const DensityOperator& rho) {
    return clamp_bits(std::log2(static_cast<double>(rho.dim())) - von_neumann(rho));
}

double binary_entropy(double x) {
    if (x < -1e-12 || x > 1.0 + 1e-12)
        throw DomainError("binary_entropy: argument " + std::to_string(x) +
                          " outside [0, 1]");
    x = std::min(std::max(x, 0.0), 1.0);
    double h = 0.0;
    if (x > kZeroLogThreshold) h -= x * std::log2(x);
    if (1.0 - x > kZeroLogThreshold) h -= (1.0 - x) * std::log2(1.0 - x);
    return clamp_bits(h);
}

ComplexMatrix equalizing_basis(const Spectrum& spec) {
    const int d = static_cast<int>(spec.eigenvalues.size());
    ComplexMatrix fourier(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            fourier(j, k) = std::polar(norm, 2.0 * M_PI * j * k / d);
    return spec.eigenvectors * fourier;
}

ExtremalResult coherent_entropy_extremal(const DensityOperator& rho,
                                         const OptimizerConfig& cfg) {
    const std::vector<PartitionLabel> whole = {
        PartitionLabel::full(rho.space().num_subsystems())};
    const OptimizeOutcome lo = optimize_diag_entropy(rho, whole, OptimizeDirection::Minimize, cfg);
    const OptimizeOutcome hi = optimize_diag_entropy(rho, whole, OptimizeDirection::Maximize, cfg);
    ExtremalResult res;
    res.min_diag = lo.value;
    res.max_diag = hi.value;
    res.sc = clamp_bits(hi.value - lo.value);
    res.converged = lo.converged && hi.converged;
    return res;
}

}  // namespace qinfo
