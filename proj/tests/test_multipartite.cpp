#include <doctest.h>

#include <cmath>

#include "qinfo/entropy.hpp"
#include "qinfo/multipartite.hpp"
#include "qinfo/states.hpp"

using namespace qinfo;

namespace {
const double kH13 = 0.918295834054490;  // H2(1/3)
}

TEST_CASE("mutual information reference values") {
    CHECK(mutual_information(bell_state(), PartitionLabel{0}, PartitionLabel{1}) ==
          doctest::Approx(2.0).epsilon(1e-12));

    const auto prod = tensor(random_density(2, 2, 3), random_density(3, 2, 4));
    CHECK(mutual_information(prod, PartitionLabel{0}, PartitionLabel{1}) ==
          doctest::Approx(0.0).epsilon(1e-9));

    const auto ghz = ghz_state(3);
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            CHECK(mutual_information(ghz, PartitionLabel{a}, PartitionLabel{b}) ==
                  doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(mutual_information(ghz, PartitionLabel{0, 1}, PartitionLabel{1}),
                    InvalidPartition);
}

TEST_CASE("mutual information is nonnegative and doubles for pure states") {
    for (int t = 0; t < 100; ++t) {
        const auto rho = random_density(HilbertSpec({2, 3}), 1 + t % 6, 3000 + t);
        CHECK(mutual_information(rho, PartitionLabel{0}, PartitionLabel{1}) >= 0.0);
    }
    for (int t = 0; t < 20; ++t) {
        const auto pure = random_density(HilbertSpec({3, 4}), 1, 3200 + t);
        const double info = mutual_information(pure, PartitionLabel{0}, PartitionLabel{1});
        const double s_a = von_neumann(partial_trace(pure, PartitionLabel{0}));
        const double s_b = von_neumann(partial_trace(pure, PartitionLabel{1}));
        CHECK(info == doctest::Approx(2.0 * s_a).epsilon(1e-9));
        CHECK(s_a == doctest::Approx(s_b).epsilon(1e-9));
    }
}

TEST_CASE("bipartite ledger on the Bell state") {
    const auto ledger = bipartite_ledger(bell_state(), PartitionLabel{0}, PartitionLabel{1});
    CHECK(ledger.total_coherent == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ledger.part_coherent[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ledger.part_coherent[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ledger.chain_mutual[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ledger.residual < 1e-9);
}

TEST_CASE("bipartite ledger splits the W state across A vs BC") {
    const auto ledger = bipartite_ledger(w_state(), PartitionLabel{0}, PartitionLabel{1, 2});
    CHECK(ledger.total_coherent == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(ledger.part_coherent[0] == doctest::Approx(1.0 - kH13).epsilon(1e-9));
    CHECK(ledger.part_coherent[1] == doctest::Approx(2.0 - kH13).epsilon(1e-9));
    CHECK(ledger.chain_mutual[0] == doctest::Approx(2.0 * kH13).epsilon(1e-9));
    CHECK(ledger.residual < 1e-9);
}

TEST_CASE("bipartite ledger on a product state has no mutual term") {
    const auto prod = tensor(random_density(2, 2, 5), random_density(2, 2, 6));
    const auto ledger = bipartite_ledger(prod, PartitionLabel{0}, PartitionLabel{1});
    CHECK(ledger.chain_mutual[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(ledger.total_coherent ==
          doctest::Approx(ledger.part_coherent[0] + ledger.part_coherent[1]).epsilon(1e-9));
}

TEST_CASE("tripartite ledger on GHZ") {
    const auto ledger = tripartite_ledger(ghz_state(3), {0, 1, 2});
    CHECK(ledger.total_coherent == doctest::Approx(3.0).epsilon(1e-12));
    for (double sc : ledger.part_coherent) CHECK(sc == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(ledger.chain_mutual[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(ledger.chain_mutual[1] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(ledger.residual < 1e-9);
}

TEST_CASE("tripartite ledger on W") {
    const auto ledger = tripartite_ledger(w_state(), {0, 1, 2});
    for (double sc : ledger.part_coherent)
        CHECK(sc == doctest::Approx(1.0 - kH13).epsilon(1e-9));
    CHECK(ledger.chain_mutual[0] == doctest::Approx(kH13).epsilon(1e-9));
    CHECK(ledger.chain_mutual[1] == doctest::Approx(2.0 * kH13).epsilon(1e-9));
    CHECK(ledger.residual < 1e-9);
}

TEST_CASE("tripartite ledger on three pure qubits") {
    const auto prod = tensor(tensor(pure_qubit(0.3, 0.1), pure_qubit(1.1, 2.0)),
                             pure_qubit(2.2, -0.4));
    const auto ledger = tripartite_ledger(prod, {0, 1, 2});
    CHECK(ledger.total_coherent == doctest::Approx(3.0).epsilon(1e-9));
    for (double sc : ledger.part_coherent) CHECK(sc == doctest::Approx(1.0).epsilon(1e-9));
    for (double i : ledger.chain_mutual) CHECK(i == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("tripartite ledger holds for all six orderings") {
    const std::array<std::array<int, 3>, 6> orders = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (int t = 0; t < 25; ++t) {
        const auto rho = random_density(HilbertSpec({2, 2, 2}), 1 + t % 8, 4000 + t);
        for (const auto& order : orders) CHECK(tripartite_ledger(rho, order).residual < 1e-9);
    }
    CHECK_THROWS_AS(tripartite_ledger(bell_state(), {0, 1, 2}), InvalidPartition);
}

TEST_CASE("chain ledger degenerates to the bipartite one for n = 2") {
    const auto rho = random_density(HilbertSpec({2, 3}), 4, 91);
    const auto chain = chain_ledger(rho);
    const auto bi = bipartite_ledger(rho, PartitionLabel{0}, PartitionLabel{1});
    CHECK(chain.total_coherent == doctest::Approx(bi.total_coherent).epsilon(1e-12));
    CHECK(chain.chain_mutual[0] == doctest::Approx(bi.chain_mutual[0]).epsilon(1e-12));
}

TEST_CASE("chain ledger on the four-qubit parity state") {
    const auto ledger = chain_ledger(ghz_state(4));
    CHECK(ledger.total_coherent == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(ledger.chain_mutual[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(ledger.chain_mutual[1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(ledger.chain_mutual[2] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(ledger.residual < 1e-9);
}

TEST_CASE("chain ledger on independent maximally mixed qubits") {
    const auto prod = tensor(tensor(maximally_mixed(2), maximally_mixed(2)),
                             maximally_mixed(2));
    const auto ledger = chain_ledger(prod);
    CHECK(ledger.total_coherent == doctest::Approx(0.0).epsilon(1e-12));
    for (double sc : ledger.part_coherent) CHECK(sc == doctest::Approx(0.0).epsilon(1e-12));
    for (double i : ledger.chain_mutual) CHECK(i == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("chain ledger accepts caller orderings") {
    for (int t = 0; t < 10; ++t) {
        const auto rho = random_density(HilbertSpec({2, 2, 2, 2}), 1 + t % 4, 5000 + t);
        CHECK(chain_ledger(rho, {3, 1, 0, 2}).residual < 1e-8);
        CHECK(chain_ledger(rho, {2, 0, 3, 1}).residual < 1e-8);
    }
    CHECK_THROWS_AS(chain_ledger(ghz_state(3), {0, 1}), InvalidPartition);
}

TEST_CASE("coherent entropy grows under aggregation") {
    // Monotonicity: S_c(rho_AB) >= S_c(rho_A) + S_c(rho_B), including for
    // classically correlated diagonal states.
    for (int t = 0; t < 100; ++t) {
        const auto rho = random_density(HilbertSpec({2, 3}), 1 + t % 6, 6000 + t);
        const auto ledger = bipartite_ledger(rho, PartitionLabel{0}, PartitionLabel{1});
        CHECK(ledger.total_coherent >=
              ledger.part_coherent[0] + ledger.part_coherent[1] - 1e-10);
    }
    // Perfectly correlated classical bits: the excess is exactly 1 bit.
    ComplexMatrix mat = ComplexMatrix::Zero(4, 4);
    mat(0, 0) = mat(3, 3) = 0.5;
    DensityOperator classical(HilbertSpec({2, 2}), mat);
    const auto ledger = bipartite_ledger(classical, PartitionLabel{0}, PartitionLabel{1});
    CHECK(ledger.chain_mutual[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ledger.total_coherent ==
          doctest::Approx(ledger.part_coherent[0] + ledger.part_coherent[1] + 1.0)
              .epsilon(1e-9));
}
