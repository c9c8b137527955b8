#pragma once

#include "qinfo/density.hpp"
#include "qinfo/optimizer_config.hpp"

namespace qinfo {

/// Entropy values are reported in bits (base-2 logarithms) throughout.
/// Tiny negatives from roundoff (> -1e-9) are clamped to zero.
double clamp_bits(double value);

/// Shannon entropy of a probability vector, with the 0 log 0 = 0 convention
/// applied below an explicit 1e-14 threshold.
double shannon_entropy(const RealVector& p);

/// S(rho) = -Tr(rho log2 rho).
double von_neumann(const DensityOperator& rho);

/// Shannon entropy of the diagonal of rho in the computational basis.
double diagonal_entropy(const DensityOperator& rho);

/// Shannon entropy of diag(U^dag rho U), i.e. of the measurement outcomes in
/// the basis given by the columns of U. Throws InvalidBasis if U is not
/// unitary within 1e-9.
double diagonal_entropy(const DensityOperator& rho, const ComplexMatrix& basis);

/// S(a||b) = Tr[a (log2 a - log2 b)] >= 0. Throws InfiniteRelativeEntropy if
/// support(a) is not contained in support(b) (eigenvalue threshold 1e-12).
double relative_entropy(const DensityOperator& a, const DensityOperator& b);

/// Coherent entropy S_c(rho) = log2 d - S(rho): the spread between the
/// maximal and minimal measurement-outcome entropy over all bases.
double coherent_entropy(const DensityOperator& rho);

/// H2(x) = -x log2 x - (1-x) log2(1-x); requires x in [0,1].
double binary_entropy(double x);

/// Basis in which every diagonal element of rho equals 1/d: the discrete
/// Fourier transform of the eigenbasis, |phi_k> = d^{-1/2} sum_j
/// exp(2 pi i j k / d) |r_j>. Output is unitary within 1e-12.
ComplexMatrix equalizing_basis(const Spectrum& spec);

struct ExtremalResult {
    double max_diag = 0.0;
    double min_diag = 0.0;
    double sc = 0.0;
    bool converged = true;
};

/// Numerically extremizes the diagonal entropy over the full unitary group.
/// Serves as an executable cross-check of the closed form: min_diag should
/// equal S(rho) and max_diag should equal log2 d. `converged` is false when
/// no restart met the optimizer tolerances (the best value found is still
/// reported).
ExtremalResult coherent_entropy_extremal(const DensityOperator& rho,
                                         const OptimizerConfig& cfg);

}  // namespace qinfo
