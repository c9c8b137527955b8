#include "qinfo/timechannel.hpp"

#include <cmath>
#include <random>

#include "qinfo/entropy.hpp"

namespace qinfo {

namespace {

double canonical_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int sample_index(const RealVector& p, std::mt19937_64& rng) {
    const double u = canonical_double(rng);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        acc += p[i];
        if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(p.size() - 1);
}

}  // namespace

ProjectiveMeasurement::ProjectiveMeasurement(ComplexMatrix basis) : basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols() || basis_.rows() < 1)
        throw InvalidBasis("ProjectiveMeasurement: basis must be square");
    const double err = unitarity_error(basis_);
    if (err > 1e-9)
        throw InvalidBasis("ProjectiveMeasurement: basis not unitary, error " +
                           std::to_string(err));
}

ComplexMatrix ProjectiveMeasurement::projector(int outcome) const {
    const ComplexVector v = basis_.col(outcome);
    return v * v.adjoint();
}

RealVector ProjectiveMeasurement::outcome_probabilities(const ComplexMatrix& rho) const {
    if (rho.rows() != basis_.rows())
        throw DimensionError("outcome_probabilities: state dimension mismatch");
    RealVector p(basis_.cols());
    for (int s = 0; s < basis_.cols(); ++s) {
        const Complex v = basis_.col(s).dot(rho * basis_.col(s));
        p[s] = std::max(v.real(), 0.0);
    }
    return p;
}

RealVector ProjectiveMeasurement::outcome_probabilities(const DensityOperator& rho) const {
    return outcome_probabilities(rho.matrix());
}

ProjectiveMeasurement ProjectiveMeasurement::computational(int d) {
    return ProjectiveMeasurement(ComplexMatrix::Identity(d, d));
}

ProjectiveMeasurement ProjectiveMeasurement::along_bloch(const Eigen::Vector3d& direction) {
    const double norm = direction.norm();
    if (std::abs(norm - 1.0) > 1e-12)
        throw DomainError("along_bloch: direction must be a unit vector");
    const double theta = std::atan2(std::hypot(direction.x(), direction.y()), direction.z());
    const double phi = std::atan2(direction.y(), direction.x());
    ComplexMatrix basis(2, 2);
    basis(0, 0) = std::cos(theta / 2.0);
    basis(1, 0) = std::polar(std::sin(theta / 2.0), phi);
    basis(0, 1) = -std::sin(theta / 2.0);
    basis(1, 1) = std::polar(std::cos(theta / 2.0), phi);
    return ProjectiveMeasurement(std::move(basis));
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) throw InvalidState("KrausChannel: empty operator list");
    const Eigen::Index d = ops_.front().rows();
    for (const auto& m : ops_)
        if (m.rows() != d || m.cols() != d)
            throw DimensionError("KrausChannel: operators must be square and equally sized");
    const double err = completeness_error();
    if (err > 1e-9)
        throw InvalidState("KrausChannel: completeness violated, error " + std::to_string(err));
}

double KrausChannel::completeness_error() const {
    const Eigen::Index d = ops_.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& m : ops_) sum += m.adjoint() * m;
    sum -= ComplexMatrix::Identity(d, d);
    return sum.cwiseAbs().maxCoeff();
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& rho) const {
    if (rho.rows() != ops_.front().rows())
        throw DimensionError("KrausChannel::apply: state dimension mismatch");
    ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (const auto& m : ops_) out += m * rho * m.adjoint();
    return out;
}

DensityOperator KrausChannel::apply(const DensityOperator& rho) const {
    return DensityOperator(rho.space(), apply(rho.matrix()));
}

KrausChannel KrausChannel::identity(int d) {
    return KrausChannel({ComplexMatrix::Identity(d, d)});
}

KrausChannel depolarizing_channel(int d, double shrink) {
    if (shrink < 0.0 || shrink > 1.0)
        throw DomainError("depolarizing_channel: shrink must be in [0, 1]");
    // Clock and shift operators X^j Z^k twirl any state to I/d.
    ComplexMatrix shift = ComplexMatrix::Zero(d, d);
    for (int t = 0; t < d; ++t) shift((t + 1) % d, t) = 1.0;
    ComplexMatrix clock = ComplexMatrix::Zero(d, d);
    for (int t = 0; t < d; ++t) clock(t, t) = std::polar(1.0, 2.0 * M_PI * t / d);

    const double rest = (1.0 - shrink) / (d * d);
    std::vector<ComplexMatrix> ops;
    ComplexMatrix xj = ComplexMatrix::Identity(d, d);
    for (int j = 0; j < d; ++j) {
        ComplexMatrix w = xj;
        for (int k = 0; k < d; ++k) {
            const double weight = (j == 0 && k == 0) ? shrink + rest : rest;
            if (weight > 0.0) ops.push_back(std::sqrt(weight) * w);
            w = w * clock;
        }
        xj = shift * xj;
    }
    return KrausChannel(std::move(ops));
}

JointDistribution::JointDistribution(Eigen::MatrixXd joint) : joint_(std::move(joint)) {
    for (Eigen::Index i = 0; i < joint_.rows(); ++i)
        for (Eigen::Index j = 0; j < joint_.cols(); ++j) {
            if (joint_(i, j) < -1e-12)
                throw DomainError("JointDistribution: negative probability");
            if (joint_(i, j) < 0.0) joint_(i, j) = 0.0;
        }
    const double total = joint_.sum();
    if (std::abs(total - 1.0) > 1e-9)
        throw DomainError("JointDistribution: probabilities sum to " + std::to_string(total));
    marginal1_ = joint_.rowwise().sum();
    marginal2_ = joint_.colwise().sum().transpose();
}

JointDistribution protocol_distribution(const DensityOperator& rho_in,
                                        const ProjectiveMeasurement& meas1,
                                        const KrausChannel& channel,
                                        const ProjectiveMeasurement& meas2) {
    const int d = rho_in.dim();
    if (meas1.dim() != d || channel.dim() != d || meas2.dim() != d)
        throw DimensionError("protocol_distribution: all stages must share one dimension");

    const RealVector p1 = meas1.outcome_probabilities(rho_in);
    Eigen::MatrixXd joint(d, d);
    for (int s1 = 0; s1 < d; ++s1) {
        const ComplexMatrix rho_s1 = channel.apply(meas1.projector(s1));
        const RealVector cond = meas2.outcome_probabilities(rho_s1);
        joint.row(s1) = p1[s1] * cond.transpose();
    }
    return JointDistribution(std::move(joint));
}

double mutual_information_12(const JointDistribution& dist) {
    const auto& p = dist.joint();
    const auto& pa = dist.marginal1();
    const auto& pb = dist.marginal2();
    double info = 0.0;
    for (Eigen::Index i = 0; i < p.rows(); ++i)
        for (Eigen::Index j = 0; j < p.cols(); ++j)
            if (p(i, j) > 1e-15) info += p(i, j) * std::log2(p(i, j) / (pa[i] * pb[j]));
    return clamp_bits(info);
}

double qubit_tcorr_closed_form(const Eigen::Vector3d& r1, const Eigen::Vector3d& n1hat,
                               double shrink, const Eigen::Vector3d& n2hat) {
    if (r1.norm() > 1.0 + 1e-12)
        throw DomainError("qubit_tcorr_closed_form: |r1| > 1");
    if (std::abs(n1hat.norm() - 1.0) > 1e-12 || std::abs(n2hat.norm() - 1.0) > 1e-12)
        throw DomainError("qubit_tcorr_closed_form: measurement directions must be unit vectors");
    if (shrink < 0.0 || shrink > 1.0)
        throw DomainError("qubit_tcorr_closed_form: shrink must be in [0, 1]");
    const double a = r1.dot(n1hat);
    const double b = shrink * n1hat.dot(n2hat);
    return clamp_bits(binary_entropy(0.5 * (1.0 + a * b)) - binary_entropy(0.5 * (1.0 + b)));
}

OptimalProtocol optimal_protocol(const Spectrum& spec) {
    const int d = static_cast<int>(spec.eigenvalues.size());
    if (d < 2) throw InvalidState("optimal_protocol: need dimension >= 2");
    double total = 0.0;
    for (int i = 0; i < d; ++i) {
        if (spec.eigenvalues[i] < -1e-12)
            throw InvalidState("optimal_protocol: negative spectrum entry");
        total += spec.eigenvalues[i];
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw InvalidState("optimal_protocol: spectrum sums to " + std::to_string(total));

    const ComplexMatrix& eigenbasis = spec.eigenvectors;

    // First-measurement basis: the first vector has components sqrt(l_m) in
    // the eigenbasis; a Householder reflection supplies the rest.
    ComplexVector a0(d);
    for (int m = 0; m < d; ++m) a0[m] = std::sqrt(std::max(spec.eigenvalues[m], 0.0));
    a0.normalize();
    ComplexMatrix completion = ComplexMatrix::Identity(d, d);
    ComplexVector v = a0;
    v[0] -= 1.0;
    const double vnorm2 = v.squaredNorm();
    if (vnorm2 > 1e-28) completion -= (2.0 / vnorm2) * (v * v.adjoint());
    const ComplexMatrix basis_a = eigenbasis * completion;

    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<std::size_t>(d) * d);
    for (int m = 0; m < d; ++m)
        for (int s = 0; s < d; ++s) {
            const double weight = std::max(spec.eigenvalues[(m - s + d) % d], 0.0);
            ops.push_back(std::sqrt(weight) * eigenbasis.col(m) * basis_a.col(s).adjoint());
        }

    return OptimalProtocol{ProjectiveMeasurement(basis_a), KrausChannel(std::move(ops)),
                           ProjectiveMeasurement(eigenbasis)};
}

JointDistribution SampledDistribution::to_distribution() const {
    if (total <= 0) throw DomainError("SampledDistribution: no samples");
    return JointDistribution(counts.cast<double>() / static_cast<double>(total));
}

SampledDistribution sample_protocol(const DensityOperator& rho_in,
                                    const ProjectiveMeasurement& meas1,
                                    const KrausChannel& channel,
                                    const ProjectiveMeasurement& meas2,
                                    std::int64_t n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw DomainError("sample_protocol: n_samples must be >= 1");
    const int d = rho_in.dim();
    if (meas1.dim() != d || channel.dim() != d || meas2.dim() != d)
        throw DimensionError("sample_protocol: all stages must share one dimension");

    RealVector p1 = meas1.outcome_probabilities(rho_in);
    p1 /= p1.sum();
    std::vector<RealVector> cond;
    for (int s1 = 0; s1 < d; ++s1) {
        RealVector q = meas2.outcome_probabilities(channel.apply(meas1.projector(s1)));
        q /= q.sum();
        cond.push_back(std::move(q));
    }

    SampledDistribution out;
    out.counts.setZero(d, d);
    out.total = n_samples;
    std::mt19937_64 rng(seed);
    for (std::int64_t n = 0; n < n_samples; ++n) {
        const int s1 = sample_index(p1, rng);
        const int s2 = sample_index(cond[static_cast<std::size_t>(s1)], rng);
        out.counts(s1, s2) += 1;
    }
    return out;
}

std::vector<RealVector> intermediate_spectra(const ProjectiveMeasurement& meas1,
                                             const KrausChannel& channel) {
    std::vector<RealVector> spectra;
    for (int s1 = 0; s1 < meas1.dim(); ++s1)
        spectra.push_back(eigenvalues_of(channel.apply(meas1.projector(s1))));
    return spectra;
}

bool intermediates_unitarily_equivalent(const ProjectiveMeasurement& meas1,
                                        const KrausChannel& channel, double tol) {
    const auto spectra = intermediate_spectra(meas1, channel);
    for (std::size_t k = 1; k < spectra.size(); ++k)
        if ((spectra[k] - spectra[0]).cwiseAbs().maxCoeff() > tol) return false;
    return true;
}

}  // namespace qinfo
