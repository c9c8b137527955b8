#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qinfo/density.hpp"

namespace qinfo {

/// Density operator |psi><psi| of a normalized pure state.
DensityOperator pure_state(const HilbertSpec& space, const ComplexVector& amplitudes);

/// (|00> + |11>)/sqrt(2) on two qubits.
DensityOperator bell_state();

/// (|0...0> + |1...1>)/sqrt(2) on n qubits.
DensityOperator ghz_state(int n = 3);

/// (|001> + |010> + |100>)/sqrt(3) on three qubits.
DensityOperator w_state();

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
DensityOperator pure_qubit(double theta, double phi);

/// Qubit (I + r.sigma)/2; requires |r| <= 1.
DensityOperator bloch_state(const Eigen::Vector3d& r);

/// I_d / d.
DensityOperator maximally_mixed(int d);

/// Diagonal state from a probability vector (single subsystem of dimension d).
DensityOperator diagonal_state(const RealVector& probabilities);

/// String-keyed factory used by the CLI:
///   bell | ghz3 | w3 | mixed:<d> | bloch:<x,y,z> | pure_qubit:<theta,phi> | diag:<p1,p2,...>
/// Throws InvalidState for unknown names or bad parameters.
DensityOperator make_named_state(const std::string& name);

/// Ginibre construction G G^dag / Tr(G G^dag) with G a d x rank matrix of
/// seeded standard complex normals. Declares a single subsystem of dimension
/// d unless `dims` overrides the factor structure (their product must be d).
DensityOperator random_density(int d, int rank, std::uint64_t seed);
DensityOperator random_density(const HilbertSpec& space, int rank, std::uint64_t seed);

/// Haar-distributed unitary via QR of a Ginibre matrix with phase fix.
ComplexMatrix random_unitary(int d, std::uint64_t seed);

/// Seeded probability vector of length d (normalized absolute normals).
RealVector random_spectrum(int d, std::uint64_t seed);

}  // namespace qinfo
