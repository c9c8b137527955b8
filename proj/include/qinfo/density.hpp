#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qinfo/hilbert.hpp"

namespace qinfo {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Validation tolerances for density operators.
inline constexpr double kHermiticityTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-10;

/// Hermitian, positive-semidefinite, unit-trace operator on a tensor-product
/// space with declared subsystem dimensions. Immutable after construction;
/// all operations on it are pure functions and safe to call concurrently.
class DensityOperator {
  public:
    /// Validates Hermiticity (max-abs of M - M^dag <= 1e-10), unit trace
    /// (<= 1e-10) and eigenvalue floor (>= -1e-10). Throws InvalidState.
    DensityOperator(HilbertSpec space, ComplexMatrix mat);

    const HilbertSpec& space() const { return space_; }
    const ComplexMatrix& matrix() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }

  private:
    HilbertSpec space_;
    ComplexMatrix mat_;
};

/// Eigendecomposition of a density operator: eigenvalues sorted descending,
/// negatives clamped to zero; eigenvector columns match the eigenvalue order.
struct Spectrum {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Kronecker product; the result's subsystem list is the concatenation.
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

/// Traces out every subsystem not in `keep`. The result acts on the kept
/// factors in their original order. Trace- and positivity-preserving.
DensityOperator partial_trace(const DensityOperator& rho, const PartitionLabel& keep);

/// Hermitian eigendecomposition; reconstruction V L V^dag matches the input
/// within 1e-9. Throws NumericalFailure if the solver does not converge.
Spectrum eig_hermitian(const DensityOperator& rho);

/// Eigenvalues only (descending, clamped), without the eigenvector matrix.
RealVector eigenvalues_of(const ComplexMatrix& hermitian);

/// Kronecker product of raw matrices.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-abs deviation from unitarity, ||U^dag U - I||_maxabs.
double unitarity_error(const ComplexMatrix& u);

}  // namespace qinfo
