#include "qinfo/local_coherence.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <future>
#include <random>

#include "qinfo/entropy.hpp"
#include "qinfo/multipartite.hpp"

namespace qinfo {

namespace {

constexpr double kFdStep = 1e-5;
constexpr double kInitialStep = 0.1;
constexpr double kPolishStep = 0.02;
constexpr int kMaxPolishSweeps = 200;
constexpr int kStallLimit = 3;

void check_partition(const HilbertSpec& space, const std::vector<PartitionLabel>& parts) {
    if (parts.empty()) throw InvalidPartition("optimizer: empty partition list");
    int covered = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        parts[p].validate_against(space);
        covered += parts[p].size();
        for (std::size_t q = p + 1; q < parts.size(); ++q)
            if (!parts[p].disjoint_with(parts[q]))
                throw InvalidPartition("optimizer: parts overlap");
    }
    if (covered != space.num_subsystems())
        throw InvalidPartition("optimizer: parts do not cover all subsystems");
}

void fill_hermitian(const RealVector& theta, int d, ComplexMatrix& h) {
    h.setZero(d, d);
    for (int k = 0; k < d; ++k) h(k, k) = theta[0];
    for (int k = 1; k < d; ++k) h(k, k) += theta[k];
    int idx = d;
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            const double sym = theta[idx++];
            const double anti = theta[idx++];
            h(j, k) = Complex(sym, anti);
            h(k, j) = Complex(sym, -anti);
        }
}

// Evaluates the diagonal entropy of U(theta) rho U(theta)^dag with reusable
// buffers; one instance per worker thread.
class DiagEntropyObjective {
  public:
    DiagEntropyObjective(const DensityOperator& rho, const std::vector<PartitionLabel>& parts)
        : rho_(rho.matrix()), d_(rho.dim()) {
        const auto& dims = rho.space().dims();
        for (const auto& part : parts) {
            int pd = 1;
            for (int k : part.indices()) pd *= dims[static_cast<std::size_t>(k)];
            part_dims_.push_back(pd);
        }
        offsets_.push_back(0);
        for (int pd : part_dims_) offsets_.push_back(offsets_.back() + pd * pd);

        // Per-part local index of each global basis index.
        std::vector<int> strides(dims.size());
        int acc = 1;
        for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
            strides[static_cast<std::size_t>(k)] = acc;
            acc *= dims[static_cast<std::size_t>(k)];
        }
        for (const auto& part : parts) {
            std::vector<int> map(static_cast<std::size_t>(d_));
            for (int i = 0; i < d_; ++i) {
                int local = 0;
                for (int k : part.indices()) {
                    const int digit = (i / strides[static_cast<std::size_t>(k)]) %
                                      dims[static_cast<std::size_t>(k)];
                    local = local * dims[static_cast<std::size_t>(k)] + digit;
                }
                map[static_cast<std::size_t>(i)] = local;
            }
            local_index_.push_back(std::move(map));
        }

        for (int pd : part_dims_) {
            h_.emplace_back(pd, pd);
            factors_.emplace_back(pd, pd);
        }
        u_.resize(d_, d_);
        m_.resize(d_, d_);
        probs_.resize(d_);
    }

    int param_count() const { return offsets_.back(); }
    const std::vector<int>& part_dims() const { return part_dims_; }

    double eval(const RealVector& theta) {
        for (std::size_t p = 0; p < part_dims_.size(); ++p) {
            const int pd = part_dims_[p];
            fill_hermitian(theta.segment(offsets_[p], pd * pd), pd, h_[p]);
            solver_.compute(h_[p]);
            ComplexVector phases(pd);
            for (int i = 0; i < pd; ++i)
                phases[i] = std::polar(1.0, solver_.eigenvalues()[i]);
            factors_[p].noalias() = solver_.eigenvectors() * phases.asDiagonal() *
                                    solver_.eigenvectors().adjoint();
        }

        if (part_dims_.size() == 1) {
            m_.noalias() = factors_[0] * rho_;
            for (int i = 0; i < d_; ++i)
                probs_[i] = std::max(m_.row(i).dot(factors_[0].row(i)).real(), 0.0);
        } else {
            for (int i = 0; i < d_; ++i)
                for (int j = 0; j < d_; ++j) {
                    Complex v(1.0, 0.0);
                    for (std::size_t p = 0; p < part_dims_.size(); ++p)
                        v *= factors_[p](local_index_[p][static_cast<std::size_t>(i)],
                                         local_index_[p][static_cast<std::size_t>(j)]);
                    u_(i, j) = v;
                }
            m_.noalias() = u_ * rho_;
            for (int i = 0; i < d_; ++i)
                probs_[i] = std::max(m_.row(i).dot(u_.row(i)).real(), 0.0);
        }
        return shannon_entropy(probs_);
    }

  private:
    ComplexMatrix rho_;
    int d_;
    std::vector<int> part_dims_;
    std::vector<int> offsets_;
    std::vector<std::vector<int>> local_index_;
    std::vector<ComplexMatrix> h_;
    std::vector<ComplexMatrix> factors_;
    ComplexMatrix u_;
    ComplexMatrix m_;
    RealVector probs_;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver_;
};

struct RestartResult {
    double signed_value = 0.0;
    RealVector theta;
    bool converged = false;
};

// Minimizes sign * entropy from the given start point.
RestartResult run_restart(DiagEntropyObjective& obj, double sign, RealVector theta,
                          const OptimizerConfig& cfg) {
    const int k = static_cast<int>(theta.size());
    auto g = [&](const RealVector& x) { return sign * obj.eval(x); };

    double fx = g(theta);
    RealVector grad(k);
    RealVector cand(k);
    double step = kInitialStep;
    int stall = 0;

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        for (int a = 0; a < k; ++a) {
            const double saved = theta[a];
            theta[a] = saved + kFdStep;
            const double fp = g(theta);
            theta[a] = saved - kFdStep;
            const double fm = g(theta);
            theta[a] = saved;
            grad[a] = (fp - fm) / (2.0 * kFdStep);
        }
        const double gnorm = grad.norm();
        if (gnorm < 1e-12) break;

        bool improved = false;
        while (step >= cfg.step_tol) {
            cand = theta - (step / gnorm) * grad;
            const double fc = g(cand);
            if (fc < fx) {
                const double delta = fx - fc;
                theta.swap(cand);
                fx = fc;
                step = std::min(step * 1.5, 1.0);
                stall = delta < cfg.objective_tol ? stall + 1 : 0;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved || stall >= kStallLimit) break;
    }

    // Derivative-free polish: cyclic coordinate search with step halving.
    double pstep = kPolishStep;
    int sweeps = 0;
    while (pstep >= cfg.step_tol && sweeps < kMaxPolishSweeps) {
        bool improved = false;
        for (int a = 0; a < k; ++a) {
            const double saved = theta[a];
            theta[a] = saved + pstep;
            double fc = g(theta);
            if (fc < fx) {
                fx = fc;
                improved = true;
                continue;
            }
            theta[a] = saved - pstep;
            fc = g(theta);
            if (fc < fx) {
                fx = fc;
                improved = true;
                continue;
            }
            theta[a] = saved;
        }
        if (!improved) pstep *= 0.5;
        ++sweeps;
    }

    RestartResult res;
    res.signed_value = fx;
    res.theta = std::move(theta);
    res.converged = pstep < cfg.step_tol;
    return res;
}

}  // namespace

UnitaryPoint UnitaryPoint::identity(const std::vector<int>& part_dims) {
    UnitaryPoint point;
    for (int pd : part_dims) point.thetas.push_back(RealVector::Zero(pd * pd));
    return point;
}

ComplexMatrix unitary_from_params(const RealVector& theta, int d) {
    if (theta.size() != static_cast<Eigen::Index>(d) * d)
        throw DimensionError("unitary_from_params: theta must have length d^2");
    ComplexMatrix h(d, d);
    fill_hermitian(theta, d, h);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("unitary_from_params: eigensolver failed");
    ComplexVector phases(d);
    for (int i = 0; i < d; ++i) phases[i] = std::polar(1.0, solver.eigenvalues()[i]);
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

ComplexMatrix build_product_unitary(const HilbertSpec& space,
                                    const std::vector<PartitionLabel>& parts,
                                    const UnitaryPoint& point) {
    check_partition(space, parts);
    if (point.thetas.size() != parts.size())
        throw DimensionError("build_product_unitary: one theta vector per part required");

    const auto& dims = space.dims();
    std::vector<int> strides(dims.size());
    int acc = 1;
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        strides[static_cast<std::size_t>(k)] = acc;
        acc *= dims[static_cast<std::size_t>(k)];
    }
    const int d = space.total_dim();

    std::vector<ComplexMatrix> factors;
    std::vector<std::vector<int>> local_index;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        int pd = 1;
        for (int k : parts[p].indices()) pd *= dims[static_cast<std::size_t>(k)];
        factors.push_back(unitary_from_params(point.thetas[p], pd));
        std::vector<int> map(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            int local = 0;
            for (int k : parts[p].indices()) {
                const int digit =
                    (i / strides[static_cast<std::size_t>(k)]) % dims[static_cast<std::size_t>(k)];
                local = local * dims[static_cast<std::size_t>(k)] + digit;
            }
            map[static_cast<std::size_t>(i)] = local;
        }
        local_index.push_back(std::move(map));
    }

    ComplexMatrix u(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex v(1.0, 0.0);
            for (std::size_t p = 0; p < parts.size(); ++p)
                v *= factors[p](local_index[p][static_cast<std::size_t>(i)],
                                local_index[p][static_cast<std::size_t>(j)]);
            u(i, j) = v;
        }
    return u;
}

double diag_entropy_objective(const DensityOperator& rho,
                              const std::vector<PartitionLabel>& parts,
                              const UnitaryPoint& point) {
    check_partition(rho.space(), parts);
    DiagEntropyObjective obj(rho, parts);
    if (point.thetas.size() != parts.size())
        throw DimensionError("diag_entropy_objective: one theta vector per part required");
    RealVector theta(obj.param_count());
    int off = 0;
    for (std::size_t p = 0; p < point.thetas.size(); ++p) {
        theta.segment(off, point.thetas[p].size()) = point.thetas[p];
        off += static_cast<int>(point.thetas[p].size());
    }
    return obj.eval(theta);
}

OptimizeOutcome optimize_diag_entropy(const DensityOperator& rho,
                                      const std::vector<PartitionLabel>& parts,
                                      OptimizeDirection direction,
                                      const OptimizerConfig& cfg) {
    check_partition(rho.space(), parts);
    if (cfg.restarts < 1) throw DomainError("optimize_diag_entropy: restarts must be >= 1");

    const double sign = direction == OptimizeDirection::Minimize ? 1.0 : -1.0;
    DiagEntropyObjective layout(rho, parts);
    const int k = layout.param_count();

    // Restart 0 starts at the identity; restarts r >= 1 draw uniformly from
    // [-pi, pi]^k with an RNG stream seeded seed + r, so results do not
    // depend on the thread count.
    const int total = cfg.restarts + 1;
    std::vector<RestartResult> results(static_cast<std::size_t>(total));

    auto run_range = [&](int begin, int end) {
        DiagEntropyObjective obj(rho, parts);
        for (int r = begin; r < end; ++r) {
            RealVector theta = RealVector::Zero(k);
            if (r > 0) {
                std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(r));
                std::uniform_real_distribution<double> uni(-M_PI, M_PI);
                for (int a = 0; a < k; ++a) theta[a] = uni(rng);
            }
            results[static_cast<std::size_t>(r)] = run_restart(obj, sign, std::move(theta), cfg);
        }
    };

    const int threads = std::max(1, cfg.threads);
    if (threads == 1 || total == 1) {
        run_range(0, total);
    } else {
        const int workers = std::min(threads, total);
        std::vector<std::future<void>> futures;
        for (int w = 0; w < workers; ++w) {
            const int begin = total * w / workers;
            const int end = total * (w + 1) / workers;
            futures.push_back(std::async(std::launch::async, run_range, begin, end));
        }
        for (auto& f : futures) f.get();
    }

    int best = 0;
    for (int r = 1; r < total; ++r)
        if (results[static_cast<std::size_t>(r)].signed_value <
            results[static_cast<std::size_t>(best)].signed_value)
            best = r;

    OptimizeOutcome outcome;
    outcome.value = sign * results[static_cast<std::size_t>(best)].signed_value;
    for (const auto& r : results) {
        outcome.restart_values.push_back(sign * r.signed_value);
        outcome.restart_converged.push_back(r.converged ? 1 : 0);
    }
    // The run is trusted if the winning restart converged or another
    // converged restart reached the same value.
    outcome.converged = results[static_cast<std::size_t>(best)].converged;
    if (!outcome.converged)
        for (const auto& r : results)
            if (r.converged &&
                std::abs(r.signed_value - results[static_cast<std::size_t>(best)].signed_value) <
                    1e-6)
                outcome.converged = true;

    const auto& dims = layout.part_dims();
    const RealVector& theta = results[static_cast<std::size_t>(best)].theta;
    int off = 0;
    for (int pd : dims) {
        outcome.point.thetas.push_back(theta.segment(off, pd * pd));
        off += pd * pd;
    }
    return outcome;
}

LocalCoherenceResult sc_local(const DensityOperator& rho,
                              const std::vector<PartitionLabel>& parts,
                              const OptimizerConfig& cfg) {
    LocalCoherenceResult res;
    res.min_outcome = optimize_diag_entropy(rho, parts, OptimizeDirection::Minimize, cfg);
    res.max_outcome = optimize_diag_entropy(rho, parts, OptimizeDirection::Maximize, cfg);
    res.min_diag = res.min_outcome.value;
    res.max_diag = res.max_outcome.value;
    res.sc_loc = clamp_bits(res.max_diag - res.min_diag);
    res.gap = clamp_bits(coherent_entropy(rho) - res.sc_loc);
    if (parts.size() == 2)
        res.local = clamp_bits(mutual_information(rho, parts[0], parts[1]) - res.gap);
    res.converged = res.min_outcome.converged && res.max_outcome.converged;
    return res;
}

}  // namespace qinfo
