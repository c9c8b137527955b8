#include "qinfo/states.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace qinfo {

namespace {

std::vector<double> parse_params(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw InvalidState("make_named_state: bad numeric parameter '" + tok + "'");
        }
    }
    return out;
}

ComplexMatrix ginibre(int rows, int cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    return g;
}

}  // namespace

DensityOperator pure_state(const HilbertSpec& space, const ComplexVector& amplitudes) {
    if (amplitudes.size() != space.total_dim())
        throw InvalidState("pure_state: amplitude vector length does not match the space");
    const double norm = amplitudes.norm();
    if (norm < 1e-14) throw InvalidState("pure_state: zero amplitude vector");
    ComplexVector psi = amplitudes / norm;
    return DensityOperator(space, psi * psi.adjoint());
}

DensityOperator bell_state() {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
    return pure_state(HilbertSpec({2, 2}), psi);
}

DensityOperator ghz_state(int n) {
    if (n < 2) throw InvalidState("ghz_state: need at least 2 qubits");
    const int d = 1 << n;
    ComplexVector psi = ComplexVector::Zero(d);
    psi(0) = psi(d - 1) = 1.0 / std::sqrt(2.0);
    return pure_state(HilbertSpec(std::vector<int>(static_cast<std::size_t>(n), 2)), psi);
}

DensityOperator w_state() {
    ComplexVector psi = ComplexVector::Zero(8);
    psi(1) = psi(2) = psi(4) = 1.0 / std::sqrt(3.0);
    return pure_state(HilbertSpec({2, 2, 2}), psi);
}

DensityOperator pure_qubit(double theta, double phi) {
    ComplexVector psi(2);
    psi(0) = std::cos(theta / 2.0);
    psi(1) = std::polar(std::sin(theta / 2.0), phi);
    return pure_state(HilbertSpec({2}), psi);
}

DensityOperator bloch_state(const Eigen::Vector3d& r) {
    if (r.norm() > 1.0 + 1e-12)
        throw InvalidState("bloch_state: |r| = " + std::to_string(r.norm()) + " > 1");
    ComplexMatrix m(2, 2);
    m(0, 0) = Complex(0.5 * (1.0 + r.z()), 0.0);
    m(1, 1) = Complex(0.5 * (1.0 - r.z()), 0.0);
    m(0, 1) = Complex(0.5 * r.x(), -0.5 * r.y());
    m(1, 0) = Complex(0.5 * r.x(), 0.5 * r.y());
    return DensityOperator(HilbertSpec({2}), std::move(m));
}

DensityOperator maximally_mixed(int d) {
    if (d < 2) throw InvalidState("maximally_mixed: dimension must be >= 2");
    return DensityOperator(HilbertSpec({d}),
                           ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityOperator diagonal_state(const RealVector& probabilities) {
    const int d = static_cast<int>(probabilities.size());
    if (d < 2) throw InvalidState("diagonal_state: need at least 2 entries");
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        if (probabilities[i] < -1e-12)
            throw InvalidState("diagonal_state: negative probability");
        m(i, i) = Complex(std::max(probabilities[i], 0.0), 0.0);
    }
    return DensityOperator(HilbertSpec({d}), std::move(m));
}

DensityOperator make_named_state(const std::string& name) {
    if (name == "bell") return bell_state();
    if (name == "ghz3") return ghz_state(3);
    if (name == "w3") return w_state();

    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);

    if (head == "mixed") {
        const auto p = parse_params(args);
        if (p.size() != 1) throw InvalidState("mixed:<d> takes one integer");
        return maximally_mixed(static_cast<int>(p[0]));
    }
    if (head == "bloch") {
        const auto p = parse_params(args);
        if (p.size() != 3) throw InvalidState("bloch:<x,y,z> takes three reals");
        return bloch_state(Eigen::Vector3d(p[0], p[1], p[2]));
    }
    if (head == "pure_qubit") {
        const auto p = parse_params(args);
        if (p.size() != 2) throw InvalidState("pure_qubit:<theta,phi> takes two reals");
        return pure_qubit(p[0], p[1]);
    }
    if (head == "diag") {
        const auto p = parse_params(args);
        RealVector v(static_cast<Eigen::Index>(p.size()));
        for (std::size_t i = 0; i < p.size(); ++i) v[static_cast<Eigen::Index>(i)] = p[i];
        return diagonal_state(v);
    }
    throw InvalidState("make_named_state: unknown state '" + name + "'");
}

DensityOperator random_density(const HilbertSpec& space, int rank, std::uint64_t seed) {
    const int d = space.total_dim();
    if (rank < 1 || rank > d)
        throw InvalidState("random_density: rank must be in [1, d]");
    ComplexMatrix g = ginibre(d, rank, seed);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityOperator(space, std::move(m));
}

DensityOperator random_density(int d, int rank, std::uint64_t seed) {
    return random_density(HilbertSpec({d}), rank, seed);
}

ComplexMatrix random_unitary(int d, std::uint64_t seed) {
    ComplexMatrix g = ginibre(d, d, seed);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the distribution is Haar.
    for (int j = 0; j < d; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag > 1e-14) q.col(j) *= rjj / mag;
    }
    return q;
}

RealVector random_spectrum(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    RealVector p(d);
    for (int i = 0; i < d; ++i) {
        const double x = gauss(rng);
        p[i] = x * x;
    }
    p /= p.sum();
    return p;
}

}  // namespace qinfo
