#pragma once

#include <cstdint>
#include <vector>

#include "qinfo/density.hpp"

namespace qinfo {

/// Complete projective measurement: the columns of `basis` are the outcome
/// states. Outcome s collapses onto |basis.col(s)><basis.col(s)|.
class ProjectiveMeasurement {
  public:
    /// Throws InvalidBasis unless the matrix is unitary within 1e-9.
    explicit ProjectiveMeasurement(ComplexMatrix basis);

    const ComplexMatrix& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.rows()); }

    ComplexMatrix projector(int outcome) const;

    /// diag(U^dag rho U), clamped to nonnegative values.
    RealVector outcome_probabilities(const ComplexMatrix& rho) const;
    RealVector outcome_probabilities(const DensityOperator& rho) const;

    static ProjectiveMeasurement computational(int d);
    /// Qubit measurement along a Bloch direction; outcome 0 is the +1 result.
    static ProjectiveMeasurement along_bloch(const Eigen::Vector3d& direction);

  private:
    ComplexMatrix basis_;
};

/// Finite Kraus decomposition of a channel, sum_m M_m rho M_m^dag.
class KrausChannel {
  public:
    /// Throws InvalidState unless sum_m M_m^dag M_m = I within 1e-9.
    explicit KrausChannel(std::vector<ComplexMatrix> ops);

    const std::vector<ComplexMatrix>& ops() const { return ops_; }
    int dim() const { return static_cast<int>(ops_.front().rows()); }

    ComplexMatrix apply(const ComplexMatrix& rho) const;
    DensityOperator apply(const DensityOperator& rho) const;

    /// Max-abs deviation of sum_m M_m^dag M_m from the identity.
    double completeness_error() const;

    static KrausChannel identity(int d);

  private:
    std::vector<ComplexMatrix> ops_;
};

/// rho -> shrink * rho + (1 - shrink) * I/d, realized by Heisenberg-Weyl
/// (clock and shift) Kraus operators.
KrausChannel depolarizing_channel(int d, double shrink);

/// Joint distribution of the two measurement outcomes; marginals are exact
/// row/column sums of the joint table.
class JointDistribution {
  public:
    explicit JointDistribution(Eigen::MatrixXd joint);

    const Eigen::MatrixXd& joint() const { return joint_; }
    const RealVector& marginal1() const { return marginal1_; }
    const RealVector& marginal2() const { return marginal2_; }
    int outcomes1() const { return static_cast<int>(joint_.rows()); }
    int outcomes2() const { return static_cast<int>(joint_.cols()); }

  private:
    Eigen::MatrixXd joint_;
    RealVector marginal1_;
    RealVector marginal2_;
};

/// Exact distribution of the prepare -> measure -> decohere -> measure
/// sequence: p(s1, s2) = Tr(rho_in P1^{s1}) Tr(channel(P1^{s1}) P2^{s2}).
JointDistribution protocol_distribution(const DensityOperator& rho_in,
                                        const ProjectiveMeasurement& meas1,
                                        const KrausChannel& channel,
                                        const ProjectiveMeasurement& meas2);

/// I_{1:2} = sum p(s1,s2) log2[ p(s1,s2) / (p(s1) p(s2)) ].
double mutual_information_12(const JointDistribution& dist);

/// Closed form for one qubit under a depolarizing channel:
///   I = H2((1 + (r1.n1hat)(n1.n2hat))/2) - H2((1 + n1.n2hat)/2),
/// with n1 = shrink * n1hat. Matches the matrix pipeline to 1e-12.
double qubit_tcorr_closed_form(const Eigen::Vector3d& r1, const Eigen::Vector3d& n1hat,
                               double shrink, const Eigen::Vector3d& n2hat);

struct OptimalProtocol {
    ProjectiveMeasurement meas1;
    KrausChannel channel;
    ProjectiveMeasurement meas2;
};

/// Protocol achieving I_{1:2} = log2 d - S(rho) for an intermediate state
/// with the given spectrum, when run on rho_in = I/d.
///
/// meas2 measures in the eigenbasis {|b_m>}. The channel measures in a basis
/// {|a_s>} and prepares the diagonal state whose spectrum is the s-shifted
/// cyclic permutation of the eigenvalues: M_{(m,s)} = sqrt(l_{(m-s) mod d})
/// |b_m><a_s|, which is exactly trace-preserving. meas1 uses the same basis
/// {|a_s>}, whose first vector has components sqrt(l_m) in the eigenbasis,
/// so Tr(P1^0 P2^m) = l_m. Every first outcome is equally likely on I/d and
/// the second-outcome marginal is uniform.
OptimalProtocol optimal_protocol(const Spectrum& spec);

/// Seeded empirical counts from the exact conditional distributions.
struct SampledDistribution {
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> counts;
    std::int64_t total = 0;

    JointDistribution to_distribution() const;
};

SampledDistribution sample_protocol(const DensityOperator& rho_in,
                                    const ProjectiveMeasurement& meas1,
                                    const KrausChannel& channel,
                                    const ProjectiveMeasurement& meas2,
                                    std::int64_t n_samples, std::uint64_t seed);

/// Spectra (descending) of the post-channel states channel(P1^{s1}).
std::vector<RealVector> intermediate_spectra(const ProjectiveMeasurement& meas1,
                                             const KrausChannel& channel);

/// True when all intermediate states are unitarily equivalent (equal
/// spectra within tol). When false, I_{1:2} is still well defined but does
/// not measure the coherent entropy of a single intermediate state.
bool intermediates_unitarily_equivalent(const ProjectiveMeasurement& meas1,
                                        const KrausChannel& channel, double tol = 1e-9);

}  // namespace qinfo
