#include "qinfo/concurrence.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "qinfo/entropy.hpp"

namespace qinfo {

ConcurrenceResult concurrence(const DensityOperator& rho) {
    if (rho.space().dims() != std::vector<int>{2, 2})
        throw DimensionError("concurrence: defined only for two qubits (dims [2,2])");

    const ComplexMatrix& m = rho.matrix();

    // Spin-flip operator sigma_y x sigma_y (real representation).
    ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;

    // sqrt(rho) via the spectral decomposition.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("concurrence: eigensolver failed");
    RealVector evals = solver.eigenvalues();
    ComplexVector roots(4);
    for (int i = 0; i < 4; ++i) roots[i] = std::sqrt(std::max(evals[i], 0.0));
    const ComplexMatrix sqrt_rho =
        solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();

    const ComplexMatrix flipped = yy * m.conjugate() * yy;
    const ComplexMatrix h = sqrt_rho * flipped * sqrt_rho;

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> hsolver(h);
    if (hsolver.info() != Eigen::Success)
        throw NumericalFailure("concurrence: eigensolver failed");

    std::array<double, 4> mu;
    for (int i = 0; i < 4; ++i) {
        double v = hsolver.eigenvalues()[i];
        if (v < 0.0 && v > -1e-12) v = 0.0;
        mu[static_cast<std::size_t>(i)] = std::sqrt(std::max(v, 0.0));
    }
    std::sort(mu.begin(), mu.end(), std::greater<double>());

    ConcurrenceResult res;
    res.concurrence = std::clamp(mu[0] - mu[1] - mu[2] - mu[3], 0.0, 1.0);
    res.e_f = res.concurrence == 0.0
                  ? 0.0
                  : binary_entropy(
                        0.5 * (1.0 + std::sqrt(1.0 - res.concurrence * res.concurrence)));
    return res;
}

}  // namespace qinfo
