#include <doctest.h>

#include "qinfo/density.hpp"
#include "qinfo/entropy.hpp"
#include "qinfo/states.hpp"

using namespace qinfo;

namespace {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("HilbertSpec rejects degenerate inputs") {
    CHECK_THROWS_AS(HilbertSpec({}), InvalidState);
    CHECK_THROWS_AS(HilbertSpec({2, 1}), InvalidState);
    CHECK(HilbertSpec({2, 3, 4}).total_dim() == 24);
}

TEST_CASE("PartitionLabel invariants") {
    CHECK_THROWS_AS(PartitionLabel(std::vector<int>{}), InvalidPartition);
    CHECK_THROWS_AS(PartitionLabel({1, 1}), InvalidPartition);
    CHECK_THROWS_AS(PartitionLabel({-1}), InvalidPartition);
    PartitionLabel p({2, 0});
    CHECK(p.indices() == std::vector<int>{0, 2});
    CHECK(p.contains(2));
    CHECK_FALSE(p.contains(1));
    CHECK(p.disjoint_with(PartitionLabel{1}));
    CHECK_FALSE(p.disjoint_with(PartitionLabel{0}));
}

TEST_CASE("DensityOperator validation") {
    ComplexMatrix ok = ComplexMatrix::Identity(2, 2) * 0.5;
    CHECK_NOTHROW(DensityOperator(HilbertSpec({2}), ok));

    ComplexMatrix bad_trace = ComplexMatrix::Identity(2, 2);
    CHECK_THROWS_AS(DensityOperator(HilbertSpec({2}), bad_trace), InvalidState);

    ComplexMatrix non_herm = ok;
    non_herm(0, 1) = Complex(0.1, 0.0);
    CHECK_THROWS_AS(DensityOperator(HilbertSpec({2}), non_herm), InvalidState);

    ComplexMatrix negative(2, 2);
    negative << 1.5, 0.0, 0.0, -0.5;
    CHECK_THROWS_AS(DensityOperator(HilbertSpec({2}), negative), InvalidState);
}

TEST_CASE("tensor of maximally mixed states") {
    const auto half = maximally_mixed(2);
    const auto prod = tensor(half, half);
    CHECK(prod.space().dims() == std::vector<int>{2, 2});
    CHECK(max_abs_diff(prod.matrix(), ComplexMatrix::Identity(4, 4) * 0.25) < 1e-15);
}

TEST_CASE("tensor of basis projectors") {
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    const auto prod = tensor(DensityOperator(HilbertSpec({2}), p0),
                             DensityOperator(HilbertSpec({2}), p1));
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(1, 1) = 1.0;  // |01>
    CHECK(max_abs_diff(prod.matrix(), expected) == 0.0);
}

TEST_CASE("tensor then partial trace round trip") {
    const auto rho = random_density(3, 2, 42);
    const auto padded = tensor(rho, maximally_mixed(2));
    const auto back = partial_trace(padded, PartitionLabel{0});
    CHECK(max_abs_diff(back.matrix(), rho.matrix()) < 1e-10);
}

TEST_CASE("Bell marginal is maximally mixed") {
    const auto marginal = partial_trace(bell_state(), PartitionLabel{0});
    CHECK(max_abs_diff(marginal.matrix(), ComplexMatrix::Identity(2, 2) * 0.5) < 1e-12);
}

TEST_CASE("GHZ two-site marginal is the classical parity mixture") {
    const auto marginal = partial_trace(ghz_state(3), PartitionLabel{0, 1});
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 0) = expected(3, 3) = 0.5;
    CHECK(max_abs_diff(marginal.matrix(), expected) < 1e-12);
}

TEST_CASE("product-state marginal recovers the factor") {
    const auto a = random_density(2, 2, 7);
    const auto b = random_density(3, 3, 8);
    const auto back = partial_trace(tensor(a, b), PartitionLabel{1});
    CHECK(max_abs_diff(back.matrix(), b.matrix()) < 1e-10);
}

TEST_CASE("partial trace rejects out-of-range labels") {
    CHECK_THROWS_AS(partial_trace(bell_state(), PartitionLabel{2}), InvalidPartition);
}

TEST_CASE("partial trace preserves trace and positivity") {
    for (int t = 0; t < 50; ++t) {
        const auto rho = random_density(HilbertSpec({2, 2, 3}), 1 + t % 12, 100 + t);
        const auto marginal = partial_trace(rho, PartitionLabel{0, 2});
        CHECK(std::abs(marginal.matrix().trace().real() - 1.0) < 1e-12);
        CHECK(eigenvalues_of(marginal.matrix()).minCoeff() >= 0.0);
    }
}

TEST_CASE("composing partial traces equals tracing the union") {
    for (int t = 0; t < 20; ++t) {
        const auto rho = random_density(HilbertSpec({2, 3, 2}), 1 + t % 6, 200 + t);
        const auto two_step =
            partial_trace(partial_trace(rho, PartitionLabel{0, 1}), PartitionLabel{0});
        const auto direct = partial_trace(rho, PartitionLabel{0});
        CHECK(max_abs_diff(two_step.matrix(), direct.matrix()) < 1e-10);
    }
}

TEST_CASE("eigendecomposition basics") {
    const auto half = eig_hermitian(maximally_mixed(2));
    CHECK(half.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(half.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-12));

    const auto bloch = eig_hermitian(bloch_state({0.0, 0.0, 0.6}));
    CHECK(bloch.eigenvalues[0] == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(bloch.eigenvalues[1] == doctest::Approx(0.2).epsilon(1e-12));

    const auto w_site = eig_hermitian(partial_trace(w_state(), PartitionLabel{0}));
    CHECK(w_site.eigenvalues[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(w_site.eigenvalues[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("eigendecomposition reconstructs 1000 seeded states") {
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const int d = 2 + t % 15;
        const auto rho = random_density(d, 1 + t % d, 300 + t);
        const auto spec = eig_hermitian(rho);
        const ComplexMatrix rebuilt = spec.eigenvectors *
                                      spec.eigenvalues.cast<Complex>().asDiagonal() *
                                      spec.eigenvectors.adjoint();
        worst = std::max(worst, max_abs_diff(rebuilt, rho.matrix()));
        CHECK(unitarity_error(spec.eigenvectors) < 1e-9);
        CHECK(std::abs(spec.eigenvalues.sum() - 1.0) < 1e-9);
        for (Eigen::Index i = 1; i < spec.eigenvalues.size(); ++i)
            CHECK(spec.eigenvalues[i] <= spec.eigenvalues[i - 1]);
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("named states") {
    const auto bell = make_named_state("bell");
    CHECK(bell.dim() == 4);
    CHECK(eig_hermitian(bell).eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));

    const auto mixed3 = make_named_state("mixed:3");
    CHECK(max_abs_diff(mixed3.matrix(), ComplexMatrix::Identity(3, 3) / 3.0) < 1e-15);

    const auto bloch = make_named_state("bloch:0,0,0.4");
    const auto evals = eigenvalues_of(bloch.matrix());
    CHECK(evals[0] == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(evals[1] == doctest::Approx(0.3).epsilon(1e-12));

    CHECK_THROWS_AS(make_named_state("nope"), InvalidState);
    CHECK_THROWS_AS(make_named_state("bloch:0,0,1.5"), InvalidState);
    CHECK_THROWS_AS(make_named_state("bloch:0,0"), InvalidState);
}

TEST_CASE("random density operators") {
    const auto pure = random_density(5, 1, 99);
    CHECK(von_neumann(pure) < 1e-9);

    const auto a = random_density(4, 4, 1234);
    const auto b = random_density(4, 4, 1234);
    CHECK(max_abs_diff(a.matrix(), b.matrix()) == 0.0);

    const auto c = random_density(4, 4, 1235);
    CHECK(max_abs_diff(a.matrix(), c.matrix()) > 1e-3);

    CHECK_THROWS_AS(random_density(3, 0, 1), InvalidState);
    CHECK_THROWS_AS(random_density(3, 4, 1), InvalidState);
}

TEST_CASE("random unitaries are unitary") {
    for (int t = 0; t < 20; ++t) CHECK(unitarity_error(random_unitary(2 + t % 7, t)) < 1e-12);
}
