#include "qinfo/selftest.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "qinfo/concurrence.hpp"
#include "qinfo/density.hpp"
#include "qinfo/entropy.hpp"
#include "qinfo/local_coherence.hpp"
#include "qinfo/multipartite.hpp"
#include "qinfo/states.hpp"
#include "qinfo/timechannel.hpp"

namespace qinfo {

namespace {

struct Checker {
    std::vector<CheckResult> results;

    void run(const std::string& name, const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        try {
            r.detail = body();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
};

void require(bool cond, const std::string& message) {
    if (!cond) throw std::runtime_error(message);
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

}  // namespace

std::vector<CheckResult> run_validation(bool full, std::uint64_t seed, int threads) {
    Checker c;
    const int scale = full ? 3 : 1;

    c.run("partial-trace-properties", [&] {
        double worst = 0.0;
        for (int t = 0; t < 40 * scale; ++t) {
            const auto a = random_density(3, 2, seed + 10 * t);
            const auto b = random_density(4, 4, seed + 10 * t + 1);
            const auto ab = tensor(a, b);
            const auto back = partial_trace(ab, PartitionLabel{0});
            worst = std::max(worst, (back.matrix() - a.matrix()).cwiseAbs().maxCoeff());
            require(worst < 1e-10, "tensor/partial-trace round trip error " + fmt(worst));

            const auto abc = tensor(ab, random_density(2, 2, seed + 10 * t + 2));
            const auto two_step = partial_trace(partial_trace(abc, PartitionLabel{0, 1}),
                                                PartitionLabel{0});
            const auto one_step = partial_trace(abc, PartitionLabel{0});
            const double comp =
                (two_step.matrix() - one_step.matrix()).cwiseAbs().maxCoeff();
            require(comp < 1e-10, "partial-trace composition error " + fmt(comp));
        }
        return "round trip and composition within 1e-10, worst " + fmt(worst);
    });

    c.run("eig-reconstruction", [&] {
        double worst = 0.0;
        for (int t = 0; t < 100 * scale; ++t) {
            const int d = 2 + static_cast<int>((seed + t) % 15);
            const auto rho = random_density(d, 1 + t % d, seed + 1000 + t);
            const auto spec = eig_hermitian(rho);
            const ComplexMatrix rebuilt = spec.eigenvectors *
                                          spec.eigenvalues.cast<Complex>().asDiagonal() *
                                          spec.eigenvectors.adjoint();
            worst = std::max(worst, (rebuilt - rho.matrix()).cwiseAbs().maxCoeff());
        }
        require(worst < 1e-9, "reconstruction error " + fmt(worst));
        return "worst reconstruction error " + fmt(worst);
    });

    c.run("entropy-sum-rule", [&] {
        for (int t = 0; t < 100 * scale; ++t) {
            const int d = 2 + t % 7;
            const auto rho = random_density(d, 1 + t % d, seed + 2000 + t);
            const double gap =
                std::abs(coherent_entropy(rho) + von_neumann(rho) - std::log2(double(d)));
            require(gap < 1e-12, "S_c + S != log2 d, gap " + fmt(gap));
        }
        return "S_c + S = log2 d on every sample";
    });

    c.run("diagonal-entropy-dominance", [&] {
        double margin = 1e9;
        for (int t = 0; t < 200 * scale; ++t) {
            const int d = 2 + t % 7;
            const auto rho = random_density(d, 1 + t % d, seed + 3000 + t);
            const auto u = random_unitary(d, seed + 33000 + t);
            const double diff = diagonal_entropy(rho, u) - von_neumann(rho);
            margin = std::min(margin, diff);
            require(diff > -1e-10, "diagonal entropy below von Neumann by " + fmt(-diff));
        }
        return "S(diag) >= S(rho) on every sample";
    });

    c.run("equalizing-basis", [&] {
        double worst = 0.0;
        for (int t = 0; t < 50 * scale; ++t) {
            const int d = 2 + t % 7;
            const auto rho = random_density(d, d, seed + 4000 + t);
            const auto basis = equalizing_basis(eig_hermitian(rho));
            require(unitarity_error(basis) < 1e-12, "equalizing basis not unitary");
            for (int k = 0; k < d; ++k) {
                const Complex diag = basis.col(k).dot(rho.matrix() * basis.col(k));
                worst = std::max(worst, std::abs(diag.real() - 1.0 / d));
            }
        }
        require(worst < 1e-12, "diagonal deviates from 1/d by " + fmt(worst));
        return "all diagonals 1/d within 1e-12, worst " + fmt(worst);
    });

    c.run("conservation-bipartite", [&] {
        double worst = 0.0;
        for (int t = 0; t < 100 * scale; ++t) {
            const int da = 2 + t % 3, db = 2 + (t / 3) % 3;
            const auto rho = random_density(HilbertSpec({da, db}), 1 + t % (da * db),
                                            seed + 5000 + t);
            const auto ledger = bipartite_ledger(rho, PartitionLabel{0}, PartitionLabel{1});
            worst = std::max(worst, ledger.residual);
        }
        require(worst < 1e-9, "bipartite residual " + fmt(worst));
        return "worst residual " + fmt(worst);
    });

    c.run("conservation-tripartite", [&] {
        double worst = 0.0;
        const std::array<std::array<int, 3>, 6> orders = {
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        for (int t = 0; t < 30 * scale; ++t) {
            const auto rho =
                random_density(HilbertSpec({2, 2, 2}), 1 + t % 8, seed + 6000 + t);
            for (const auto& order : orders)
                worst = std::max(worst, tripartite_ledger(rho, order).residual);
        }
        require(worst < 1e-9, "tripartite residual " + fmt(worst));
        return "worst residual over all orderings " + fmt(worst);
    });

    c.run("conservation-chain", [&] {
        double worst = 0.0;
        for (int t = 0; t < 15 * scale; ++t) {
            const int n = 4 + t % 2;
            const auto rho = random_density(HilbertSpec(std::vector<int>(n, 2)), 1 + t % 4,
                                            seed + 7000 + t);
            worst = std::max(worst, chain_ledger(rho).residual);
        }
        require(worst < 1e-8, "chain residual " + fmt(worst));
        return "worst n=4,5 residual " + fmt(worst);
    });

    c.run("mutual-information-properties", [&] {
        for (int t = 0; t < 50 * scale; ++t) {
            const auto rho =
                random_density(HilbertSpec({2, 3}), 1 + t % 6, seed + 8000 + t);
            const double info = mutual_information(rho, PartitionLabel{0}, PartitionLabel{1});
            require(info >= 0.0, "negative mutual information " + fmt(info));
        }
        // Pure global state: I_{A:B} = 2 S(rho_A).
        const auto pure = random_density(36, 1, seed + 8500);
        DensityOperator bip(HilbertSpec({6, 6}), pure.matrix());
        const double info = mutual_information(bip, PartitionLabel{0}, PartitionLabel{1});
        const double s_a = von_neumann(partial_trace(bip, PartitionLabel{0}));
        require(std::abs(info - 2.0 * s_a) < 1e-9, "pure-state I != 2 S(A)");
        return "nonnegative; pure-state I = 2 S(A)";
    });

    c.run("coherent-entropy-convexity", [&] {
        std::mt19937_64 rng(seed + 9000);
        for (int t = 0; t < 100 * scale; ++t) {
            const int d = 2 + t % 5;
            const auto r1 = random_density(d, 1 + t % d, seed + 9100 + t);
            const auto r2 = random_density(d, d, seed + 9600 + t);
            const double w = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            DensityOperator mix(r1.space(), w * r1.matrix() + (1.0 - w) * r2.matrix());
            const double lhs = coherent_entropy(mix);
            const double rhs = w * coherent_entropy(r1) + (1.0 - w) * coherent_entropy(r2);
            require(lhs <= rhs + 1e-10, "convexity violated by " + fmt(lhs - rhs));
        }
        return "S_c convex on every sampled mixture";
    });

    c.run("concurrence-local-invariance", [&] {
        double worst = 0.0;
        for (int t = 0; t < 50 * scale; ++t) {
            const auto rho = random_density(HilbertSpec({2, 2}), 1 + t % 4, seed + 11000 + t);
            const double e_f = concurrence(rho).e_f;
            const ComplexMatrix u = kron(random_unitary(2, seed + 11500 + t),
                                         random_unitary(2, seed + 11800 + t));
            DensityOperator rotated(rho.space(), u * rho.matrix() * u.adjoint());
            worst = std::max(worst, std::abs(concurrence(rotated).e_f - e_f));
        }
        require(worst < 1e-9, "E_f changed under local unitaries by " + fmt(worst));
        return "E_f invariant under local unitaries, worst drift " + fmt(worst);
    });

    c.run("tcorr-pipeline-consistency", [&] {
        std::mt19937_64 rng(seed + 12000);
        auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
        auto unit_vec = [&] {
            Eigen::Vector3d v;
            do {
                v = Eigen::Vector3d(2 * uniform() - 1, 2 * uniform() - 1, 2 * uniform() - 1);
            } while (v.norm() < 1e-3);
            return Eigen::Vector3d(v / v.norm());
        };
        double worst = 0.0;
        for (int t = 0; t < 200 * scale; ++t) {
            const Eigen::Vector3d r1 = std::cbrt(uniform()) * unit_vec();
            const Eigen::Vector3d n1 = unit_vec(), n2 = unit_vec();
            const double shrink = uniform();
            const auto dist = protocol_distribution(
                bloch_state(r1), ProjectiveMeasurement::along_bloch(n1),
                depolarizing_channel(2, shrink), ProjectiveMeasurement::along_bloch(n2));
            const double gap = std::abs(mutual_information_12(dist) -
                                        qubit_tcorr_closed_form(r1, n1, shrink, n2));
            worst = std::max(worst, gap);
        }
        require(worst < 1e-12, "closed form vs pipeline gap " + fmt(worst));
        return "closed form matches pipeline, worst gap " + fmt(worst);
    });

    c.run("tcorr-optimality", [&] {
        double worst = 0.0;
        const int dmax = full ? 4 : 3;
        for (int d = 2; d <= dmax; ++d)
            for (int t = 0; t < (full ? 20 : 10); ++t) {
                const auto rho = random_density(d, d, seed + 13000 + 100 * d + t);
                const auto spec = eig_hermitian(rho);
                const auto protocol = optimal_protocol(spec);
                require(protocol.channel.completeness_error() < 1e-9,
                        "channel completeness violated");
                const auto dist = protocol_distribution(maximally_mixed(d), protocol.meas1,
                                                        protocol.channel, protocol.meas2);
                const double target = std::log2(double(d)) - shannon_entropy(spec.eigenvalues);
                worst = std::max(worst, std::abs(mutual_information_12(dist) - target));
            }
        require(worst < 1e-9, "protocol misses log2 d - S by " + fmt(worst));
        return "I = log2 d - S achieved up to " + fmt(worst) + " (d <= " +
               std::to_string(dmax) + ")";
    });

    c.run("named-state-tables", [&] {
        const auto ghz = ghz_state(3);
        const auto w = w_state();
        const double h13 = binary_entropy(1.0 / 3.0);
        for (int k = 0; k < 3; ++k) {
            require(std::abs(von_neumann(partial_trace(ghz, PartitionLabel{k})) - 1.0) < 1e-9,
                    "GHZ single-site entropy != 1");
            require(std::abs(von_neumann(partial_trace(w, PartitionLabel{k})) - h13) < 1e-9,
                    "W single-site entropy != H2(1/3)");
        }
        const auto ghz_ab = partial_trace(ghz, PartitionLabel{0, 1});
        const auto w_ab = partial_trace(w, PartitionLabel{0, 1});
        require(concurrence(ghz_ab).e_f < 1e-9, "GHZ pair E_f != 0");
        require(std::abs(concurrence(w_ab).concurrence - 2.0 / 3.0) < 1e-9,
                "W pair concurrence != 2/3");
        require(std::abs(coherent_entropy(bell_state()) - 2.0) < 1e-12, "S_c(bell) != 2");
        return "Bell, GHZ and W analytic values reproduced";
    });

    if (full) {
        c.run("tcorr-random-protocols-bounded", [&] {
            for (int d = 2; d <= 4; ++d) {
                const auto rho = random_density(d, d, seed + 14000 + d);
                const auto spec = eig_hermitian(rho);
                const auto protocol = optimal_protocol(spec);
                const double target =
                    std::log2(double(d)) - shannon_entropy(spec.eigenvalues);
                for (int t = 0; t < 20; ++t) {
                    const ProjectiveMeasurement m1(random_unitary(d, seed + 15000 + 50 * d + t));
                    const ProjectiveMeasurement m2(random_unitary(d, seed + 16000 + 50 * d + t));
                    const double info = mutual_information_12(protocol_distribution(
                        maximally_mixed(d), m1, protocol.channel, m2));
                    require(info <= target + 1e-9,
                            "random protocol beats the optimum by " + fmt(info - target));
                }
            }
            return "no random measurement pair exceeds log2 d - S";
        });

        c.run("tcorr-monte-carlo", [&] {
            const auto rho = random_density(3, 3, seed + 17000);
            const auto spec = eig_hermitian(rho);
            const auto protocol = optimal_protocol(spec);
            const auto exact = protocol_distribution(maximally_mixed(3), protocol.meas1,
                                                     protocol.channel, protocol.meas2);
            const double target = mutual_information_12(exact);
            const std::int64_t n = 200000;
            const auto sampled = sample_protocol(maximally_mixed(3), protocol.meas1,
                                                 protocol.channel, protocol.meas2, n, seed + 1);
            const double estimate = mutual_information_12(sampled.to_distribution());
            // Plug-in estimator: ~1/sqrt(n) fluctuation plus O(d^2/n) bias.
            const double band = 3.0 * (1.0 / std::sqrt(double(n))) + 9.0 / double(n);
            require(std::abs(estimate - target) < band,
                    "MC estimate off by " + fmt(estimate - target));
            return "plug-in estimate within the 3-sigma band";
        });

        c.run("extremal-search-cross-check", [&] {
            OptimizerConfig cfg;
            cfg.restarts = 6;
            cfg.max_iters = 400;
            cfg.seed = seed + 18000;
            cfg.threads = threads;
            double worst = 0.0;
            for (int t = 0; t < 3; ++t) {
                const int d = 3 + t % 2;
                const auto rho = random_density(d, d, seed + 18100 + t);
                const auto ext = coherent_entropy_extremal(rho, cfg);
                worst = std::max(worst, std::abs(ext.min_diag - von_neumann(rho)));
                worst = std::max(worst, std::abs(ext.max_diag - std::log2(double(d))));
                require(std::abs(ext.sc - coherent_entropy(rho)) < 5e-6,
                        "extremal S_c disagrees with log2 d - S");
            }
            require(worst < 2e-6, "extremes off by " + fmt(worst));
            return "search reproduces min = S and max = log2 d, worst " + fmt(worst);
        });
    }

    return c.results;
}

}  // namespace qinfo
