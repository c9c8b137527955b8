#include <doctest.h>

#include <cmath>

#include "qinfo/entropy.hpp"
#include "qinfo/local_coherence.hpp"
#include "qinfo/states.hpp"

using namespace qinfo;

namespace {

OptimizerConfig fast_config(std::uint64_t seed, int restarts = 8) {
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.max_iters = 500;
    cfg.seed = seed;
    return cfg;
}

const std::vector<PartitionLabel> kTwoQubits = {PartitionLabel{0}, PartitionLabel{1}};

}  // namespace

TEST_CASE("objective at hand-picked points on the Bell state") {
    const auto bell = bell_state();
    const std::vector<int> dims = {2, 2};

    // Identity: the computational diagonal (1/2, 0, 0, 1/2) carries one bit.
    const auto ident = UnitaryPoint::identity(dims);
    CHECK(diag_entropy_objective(bell, kTwoQubits, ident) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // A Hadamard on one side spreads the diagonal to all quarters.
    ComplexMatrix hadamard(2, 2);
    hadamard << 1, 1, 1, -1;
    hadamard /= std::sqrt(2.0);
    const ComplexMatrix rotated =
        kron(hadamard, ComplexMatrix::Identity(2, 2)) * bell.matrix() *
        kron(hadamard, ComplexMatrix::Identity(2, 2)).adjoint();
    RealVector diag = rotated.diagonal().real();
    CHECK(shannon_entropy(diag) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("parameterized unitaries stay unitary") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const int d = 2 + t % 3;
        RealVector theta(d * d);
        for (int a = 0; a < d * d; ++a)
            theta[a] = 2.0 * M_PI * (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5);
        CHECK(unitarity_error(unitary_from_params(theta, d)) < 1e-12);
    }
    CHECK(unitary_from_params(RealVector::Zero(4), 2).isApprox(ComplexMatrix::Identity(2, 2)));
}

TEST_CASE("objective is invariant along the per-factor phase direction") {
    const auto rho = random_density(HilbertSpec({2, 2}), 3, 303);
    std::mt19937_64 rng(9);
    UnitaryPoint point;
    for (int p = 0; p < 2; ++p) {
        RealVector theta(4);
        for (int a = 0; a < 4; ++a)
            theta[a] = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        point.thetas.push_back(theta);
    }
    const double base = diag_entropy_objective(rho, kTwoQubits, point);
    for (int p = 0; p < 2; ++p) {
        UnitaryPoint shifted = point;
        shifted.thetas[static_cast<std::size_t>(p)][0] += 0.37;  // identity generator
        CHECK(diag_entropy_objective(rho, kTwoQubits, shifted) ==
              doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("partition validation") {
    const auto rho = random_density(HilbertSpec({2, 2}), 2, 1);
    const auto cfg = fast_config(1, 1);
    CHECK_THROWS_AS(
        optimize_diag_entropy(rho, {PartitionLabel{0}, PartitionLabel{0}},
                              OptimizeDirection::Minimize, cfg),
        InvalidPartition);
    CHECK_THROWS_AS(optimize_diag_entropy(rho, {PartitionLabel{0}},
                                          OptimizeDirection::Minimize, cfg),
                    InvalidPartition);
    CHECK_THROWS_AS(optimize_diag_entropy(rho, {}, OptimizeDirection::Minimize, cfg),
                    InvalidPartition);
}

TEST_CASE("local extremes of the Bell state") {
    const auto bell = bell_state();
    const auto cfg = fast_config(17);
    const auto lo = optimize_diag_entropy(bell, kTwoQubits, OptimizeDirection::Minimize, cfg);
    const auto hi = optimize_diag_entropy(bell, kTwoQubits, OptimizeDirection::Maximize, cfg);
    CHECK(lo.value == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(hi.value == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(lo.restart_values.size() == static_cast<std::size_t>(cfg.restarts) + 1);

    const auto result = sc_local(bell, kTwoQubits, cfg);
    CHECK(result.sc_loc == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(result.gap == doctest::Approx(1.0).epsilon(1e-3));
    REQUIRE(result.local.has_value());
    CHECK(*result.local == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(std::abs(result.sc_loc - (result.max_diag - result.min_diag)) < 1e-12);
}

TEST_CASE("single whole-system part reproduces the closed form") {
    const auto rho = random_density(HilbertSpec({3}), 3, 2024);
    const auto cfg = fast_config(23, 6);
    const auto result = sc_local(rho, {PartitionLabel{0}}, cfg);
    CHECK(std::abs(result.min_diag - von_neumann(rho)) < 2e-6);
    CHECK(std::abs(result.max_diag - std::log2(3.0)) < 2e-6);
    CHECK(std::abs(result.sc_loc - coherent_entropy(rho)) < 5e-6);
    CHECK(std::abs(result.gap) < 5e-6);
}

TEST_CASE("pair marginal of GHZ has no coherence gap") {
    const auto pair = partial_trace(ghz_state(3), PartitionLabel{0, 1});
    const auto result = sc_local(pair, kTwoQubits, fast_config(29));
    CHECK(result.gap == doctest::Approx(0.0).epsilon(2e-2));
    REQUIRE(result.local.has_value());
    CHECK(*result.local == doctest::Approx(1.0).epsilon(2e-2));
}

TEST_CASE("coherence gap is invariant under local rotations of the input") {
    const auto bell = bell_state();
    const ComplexMatrix u = kron(random_unitary(2, 404), random_unitary(2, 405));
    DensityOperator rotated(bell.space(), u * bell.matrix() * u.adjoint());
    const auto cfg = fast_config(31);
    const auto g0 = sc_local(bell, kTwoQubits, cfg).gap;
    const auto g1 = sc_local(rotated, kTwoQubits, cfg).gap;
    CHECK(g0 == doctest::Approx(g1).epsilon(5e-3));
}

TEST_CASE("restart bookkeeping is deterministic and thread independent") {
    const auto rho = random_density(HilbertSpec({2, 2}), 4, 777);
    auto cfg = fast_config(55, 4);
    const auto serial = optimize_diag_entropy(rho, kTwoQubits, OptimizeDirection::Maximize, cfg);
    cfg.threads = 4;
    const auto parallel =
        optimize_diag_entropy(rho, kTwoQubits, OptimizeDirection::Maximize, cfg);
    REQUIRE(serial.restart_values.size() == parallel.restart_values.size());
    for (std::size_t r = 0; r < serial.restart_values.size(); ++r)
        CHECK(serial.restart_values[r] == parallel.restart_values[r]);
    CHECK(serial.value == parallel.value);
}
