#include "qinfo/density.hpp"

#include <Eigen/Eigenvalues>

namespace qinfo {

namespace {

// Decomposes a flat index into per-subsystem digits, factor 0 slowest
// (consistent with the Kronecker product ordering).
std::vector<int> strides_for(const std::vector<int>& dims) {
    std::vector<int> strides(dims.size());
    int acc = 1;
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        strides[static_cast<std::size_t>(k)] = acc;
        acc *= dims[static_cast<std::size_t>(k)];
    }
    return strides;
}

}  // namespace

DensityOperator::DensityOperator(HilbertSpec space, ComplexMatrix mat)
    : space_(std::move(space)), mat_(std::move(mat)) {
    const int d = space_.total_dim();
    if (mat_.rows() != d || mat_.cols() != d)
        throw InvalidState("DensityOperator: matrix is " + std::to_string(mat_.rows()) + "x" +
                           std::to_string(mat_.cols()) + " but the space has dimension " +
                           std::to_string(d));
    const double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermiticityTol)
        throw InvalidState("DensityOperator: not Hermitian, max |M - M^dag| = " +
                           std::to_string(herm));
    const Complex tr = mat_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol)
        throw InvalidState("DensityOperator: trace " + std::to_string(tr.real()) + " != 1");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("DensityOperator: eigenvalue check failed to converge");
    const double min_eval = solver.eigenvalues().minCoeff();
    if (min_eval < kEigenvalueFloor)
        throw InvalidState("DensityOperator: negative eigenvalue " + std::to_string(min_eval));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double unitarity_error(const ComplexMatrix& u) {
    ComplexMatrix g = u.adjoint() * u;
    g -= ComplexMatrix::Identity(u.cols(), u.cols());
    return g.cwiseAbs().maxCoeff();
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
    std::vector<int> dims = a.space().dims();
    dims.insert(dims.end(), b.space().dims().begin(), b.space().dims().end());
    return DensityOperator(HilbertSpec(std::move(dims)), kron(a.matrix(), b.matrix()));
}

DensityOperator partial_trace(const DensityOperator& rho, const PartitionLabel& keep) {
    const auto& dims = rho.space().dims();
    const int n = rho.space().num_subsystems();
    keep.validate_against(rho.space());

    std::vector<int> kept = keep.indices();
    std::vector<int> traced;
    for (int k = 0; k < n; ++k)
        if (!keep.contains(k)) traced.push_back(k);

    std::vector<int> kept_dims, traced_dims;
    for (int k : kept) kept_dims.push_back(dims[static_cast<std::size_t>(k)]);
    for (int k : traced) traced_dims.push_back(dims[static_cast<std::size_t>(k)]);

    const auto full_strides = strides_for(dims);
    const int d_keep =
        std::accumulate(kept_dims.begin(), kept_dims.end(), 1, std::multiplies<int>());
    const int d_trace =
        std::accumulate(traced_dims.begin(), traced_dims.end(), 1, std::multiplies<int>());

    // Offsets of each kept (resp. traced) multi-index inside the full index.
    auto offsets = [&](const std::vector<int>& subsys, const std::vector<int>& sub_dims,
                       int count) {
        std::vector<int> off(static_cast<std::size_t>(count), 0);
        const auto sub_strides = strides_for(sub_dims);
        for (int idx = 0; idx < count; ++idx) {
            int o = 0;
            for (std::size_t p = 0; p < subsys.size(); ++p) {
                const int digit = (idx / sub_strides[p]) % sub_dims[p];
                o += digit * full_strides[static_cast<std::size_t>(subsys[p])];
            }
            off[static_cast<std::size_t>(idx)] = o;
        }
        return off;
    };

    const auto keep_off = offsets(kept, kept_dims, d_keep);
    const auto trace_off = traced.empty() ? std::vector<int>{0}
                                          : offsets(traced, traced_dims, d_trace);

    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix out = ComplexMatrix::Zero(d_keep, d_keep);
    for (int a = 0; a < d_keep; ++a)
        for (int b = 0; b < d_keep; ++b) {
            Complex acc(0.0, 0.0);
            for (int off : trace_off) acc += m(keep_off[static_cast<std::size_t>(a)] + off,
                                               keep_off[static_cast<std::size_t>(b)] + off);
            out(a, b) = acc;
        }

    return DensityOperator(HilbertSpec(std::move(kept_dims)), std::move(out));
}

RealVector eigenvalues_of(const ComplexMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("eigenvalues_of: solver did not converge");
    RealVector evals = solver.eigenvalues().reverse();
    for (Eigen::Index i = 0; i < evals.size(); ++i)
        if (evals[i] < 0.0) evals[i] = 0.0;
    return evals;
}

Spectrum eig_hermitian(const DensityOperator& rho) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("eig_hermitian: solver did not converge");
    Spectrum spec;
    spec.eigenvalues = solver.eigenvalues().reverse();
    spec.eigenvectors = solver.eigenvectors().rowwise().reverse();
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i)
        if (spec.eigenvalues[i] < 0.0) spec.eigenvalues[i] = 0.0;
    return spec;
}

}  // namespace qinfo
