#include "szego/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "szego/errors.hpp"

namespace szego {
namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

double group_penalty(const VectorXcd& x, std::size_t rings) {
    double total = 0.0;
    for (std::size_t k = 1; k <= rings; ++k) {
        total += x.segment(static_cast<Eigen::Index>(ring_offset(k)), static_cast<Eigen::Index>(k)).norm();
    }
    return total;
}

std::vector<std::size_t> active_set(const VectorXcd& x, std::size_t rings) {
    std::vector<std::size_t> active;
    for (std::size_t k = 1; k <= rings; ++k) {
        if (x.segment(static_cast<Eigen::Index>(ring_offset(k)), static_cast<Eigen::Index>(k)).squaredNorm() > 0.0) {
            active.push_back(k);
        }
    }
    return active;
}

// Minimum-norm least squares restricted to the columns of `rings_used`.
VectorXcd refit(const MatrixXcd& a, const VectorXcd& c, const std::vector<std::size_t>& rings_used) {
    Eigen::Index cols = 0;
    for (std::size_t k : rings_used) cols += static_cast<Eigen::Index>(k);
    MatrixXcd sub(a.rows(), cols);
    Eigen::Index at = 0;
    for (std::size_t k : rings_used) {
        const auto len = static_cast<Eigen::Index>(k);
        sub.middleCols(at, len) = a.middleCols(static_cast<Eigen::Index>(ring_offset(k)), len);
        at += len;
    }
    const VectorXcd local = sub.completeOrthogonalDecomposition().solve(c);
    VectorXcd full = VectorXcd::Zero(a.cols());
    at = 0;
    for (std::size_t k : rings_used) {
        const auto len = static_cast<Eigen::Index>(k);
        full.segment(static_cast<Eigen::Index>(ring_offset(k)), len) = local.segment(at, len);
        at += len;
    }
    return full;
}

MixedCoefficients to_mixed(const VectorXcd& x, std::size_t rings) {
    MixedCoefficients out(rings);
    auto flat = out.flat();
    for (Eigen::Index n = 0; n < x.size(); ++n) flat[static_cast<std::size_t>(n)] = x[n];
    return out;
}

struct PrefixTrace {
    std::vector<double> residuals;
    double sup_norm = 0.0;
};

PrefixTrace prefix_trace(const MixedCoefficients& x, const SynthesisProblem& problem) {
    const std::size_t m_max = problem.truncation();
    std::vector<Complex> partial(m_max + 1);
    PrefixTrace trace;
    trace.residuals.reserve(x.rings());
    for (std::size_t k = 1; k <= x.rings(); ++k) {
        const auto block = x.block(k);
        const auto nodes = problem.grid().ring(k);
        for (std::size_t j = 0; j < k; ++j) {
            if (block[j] == Complex{}) continue;
            const Complex ratio = std::conj(nodes[j].point.value());
            Complex term = block[j] * nodes[j].weight;
            for (std::size_t m = 0; m <= m_max; ++m) {
                partial[m] += term;
                term *= ratio;
            }
        }
        double res = 0.0;
        double norm = 0.0;
        for (std::size_t m = 0; m <= m_max; ++m) {
            res += std::norm(problem.target().coeff(m) - partial[m]);
            norm += std::norm(partial[m]);
        }
        // Target coefficients beyond M are zero by construction of the problem.
        trace.residuals.push_back(std::sqrt(res));
        trace.sup_norm = std::max(trace.sup_norm, std::sqrt(norm));
    }
    return trace;
}

constexpr double kExactAtomTolerance = 1e-13;

Decomposition finish(Decomposition out, const VectorXcd& fitted, const SynthesisProblem& problem,
                     double target_norm, double tol) {
    const std::size_t rings = problem.rings();
    out.x = to_mixed(fitted, rings);
    out.active_rings = active_set(fitted, rings);
    out.mixed_norm = norm_1_2(out.x);
    const PrefixTrace trace = prefix_trace(out.x, problem);
    out.prefix_residuals = trace.residuals;
    out.partial_sum_sup = trace.sup_norm;
    out.residual_rel = trace.residuals.back() / target_norm;
    out.status = out.residual_rel <= tol ? SolveStatus::Converged : SolveStatus::NonConvergence;
    return out;
}

}  // namespace

SynthesisProblem::SynthesisProblem(HardyFunction target, std::size_t rings, std::optional<std::size_t> truncation)
    : target_(std::move(target)),
      grid_(rings),
      truncation_(truncation.value_or(default_truncation(target_.degree()))) {
    if (truncation_ < target_.degree()) {
        throw DomainError("SynthesisProblem: truncation M=" + std::to_string(truncation_) +
                          " is below the target degree " + std::to_string(target_.degree()));
    }
}

Eigen::VectorXcd SynthesisProblem::rhs() const {
    VectorXcd c = VectorXcd::Zero(static_cast<Eigen::Index>(truncation_ + 1));
    const std::size_t n = std::min(target_.size(), truncation_ + 1);
    for (std::size_t m = 0; m < n; ++m) c[static_cast<Eigen::Index>(m)] = target_.coeff(m);
    return c;
}

std::size_t default_truncation(std::size_t degree) { return std::max<std::size_t>(2 * degree, 32); }

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Converged: return "converged";
        case SolveStatus::NonConvergence: return "non_convergence";
        case SolveStatus::DegenerateTarget: return "degenerate_target";
    }
    return "unknown";
}

Eigen::MatrixXcd build_synthesis_matrix(const Grid& grid, std::size_t truncation) {
    MatrixXcd a(static_cast<Eigen::Index>(truncation + 1), static_cast<Eigen::Index>(grid.size()));
    const auto nodes = grid.nodes();
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        const Complex ratio = std::conj(nodes[n].point.value());
        Complex entry = nodes[n].weight;
        for (std::size_t m = 0; m <= truncation; ++m) {
            a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) = entry;
            entry *= ratio;
        }
    }
    return a;
}

double estimate_lipschitz(const Eigen::MatrixXcd& a, double tol, std::size_t max_iter) {
    VectorXcd v = VectorXcd::Ones(a.cols());
    v.normalize();
    double estimate = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        const VectorXcd av = a * v;
        const double next = av.squaredNorm();
        VectorXcd w = a.adjoint() * av;
        const double wn = w.norm();
        if (!(wn > 0.0) || !std::isfinite(wn)) {
            throw IllConditionedError("estimate_lipschitz: power iteration collapsed");
        }
        v = w / wn;
        if (it > 0 && std::abs(next - estimate) <= tol * next) return next;
        estimate = next;
    }
    throw IllConditionedError("estimate_lipschitz: power iteration did not settle within " +
                              std::to_string(max_iter) + " steps");
}

void group_soft_threshold(Eigen::Ref<Eigen::VectorXcd> x, std::size_t rings, double threshold) {
    for (std::size_t k = 1; k <= rings; ++k) {
        auto block = x.segment(static_cast<Eigen::Index>(ring_offset(k)), static_cast<Eigen::Index>(k));
        const double norm = block.norm();
        if (norm <= threshold) {
            block.setZero();
        } else {
            block *= 1.0 - threshold / norm;
        }
    }
}

Decomposition solve(const SynthesisProblem& problem, const SolverConfig& config) {
    if (!(config.tol > 0.0)) throw DomainError("solve: tol must be positive");
    if (config.max_iter < 1) throw DomainError("solve: max_iter must be >= 1");

    const std::size_t rings = problem.rings();
    const double target_norm = h2_norm(problem.target());
    Decomposition out;
    out.x = MixedCoefficients(rings);

    if (target_norm == 0.0) {
        out.status = SolveStatus::DegenerateTarget;
        out.prefix_residuals.assign(rings, 0.0);
        return out;
    }

    const MatrixXcd a = build_synthesis_matrix(problem.grid(), problem.truncation());
    const VectorXcd c = problem.rhs();

    // A target that is itself a multiple of one kernel column is represented by
    // that column alone.
    for (Eigen::Index n = 0; n < a.cols(); ++n) {
        const auto col = a.col(n);
        const Complex coef = col.dot(c) / col.squaredNorm();
        if ((c - coef * col).norm() <= kExactAtomTolerance * c.norm()) {
            VectorXcd single = VectorXcd::Zero(a.cols());
            single[n] = coef;
            return finish(std::move(out), single, problem, target_norm, config.tol);
        }
    }
    const double lip = estimate_lipschitz(a, config.power_tol, config.power_max_iter);
    out.lipschitz = lip;

    auto objective = [&](const VectorXcd& x, const VectorXcd& ax, double mu) {
        return 0.5 * (ax - c).squaredNorm() + mu * group_penalty(x, rings);
    };

    double mu = 0.0;
    if (config.initial_mu) {
        mu = *config.initial_mu;
    } else {
        const VectorXcd corr = a.adjoint() * c;
        double block_max = 0.0;
        for (std::size_t k = 1; k <= rings; ++k) {
            block_max = std::max(block_max,
                                 corr.segment(static_cast<Eigen::Index>(ring_offset(k)), static_cast<Eigen::Index>(k)).norm());
        }
        mu = 0.1 * block_max;
    }
    if (!(mu >= 0.0)) throw DomainError("solve: mu must be nonnegative");

    // Monotone FISTA per stage, warm-started across a halving schedule for mu.
    VectorXcd x = VectorXcd::Zero(a.cols());
    VectorXcd ax = VectorXcd::Zero(a.rows());
    std::size_t iterations = 0;
    const std::size_t stages = std::max<std::size_t>(config.continuation_steps, 1);
    for (std::size_t stage = 0; stage < stages && iterations < config.max_iter; ++stage) {
        double best = objective(x, ax, mu);
        VectorXcd y = x;
        double t = 1.0;
        for (std::size_t it = 0; it < config.stage_max_iter && iterations < config.max_iter; ++it) {
            ++iterations;
            VectorXcd z = y - (a.adjoint() * (a * y - c)) / lip;
            group_soft_threshold(z, rings, mu / lip);
            const VectorXcd az = a * z;
            const double fz = objective(z, az, mu);
            const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
            const VectorXcd x_old = x;
            if (fz <= best) {
                x = z;
                ax = az;
                best = fz;
            }
            y = x + (t / t_next) * (z - x) + ((t - 1.0) / t_next) * (x - x_old);
            t = t_next;
            if ((z - x_old).norm() <= config.stage_tol * std::max(x.norm(), 1e-300)) break;
        }
        out.stage_objectives.push_back(best);
        out.stage_mu.push_back(mu);
        if ((ax - c).norm() <= config.tol * target_norm) break;
        mu *= 0.5;
    }
    out.iterations = iterations;

    // Debias on the active rings; grow the support by residual correlation
    // while the refit misses the target.
    std::vector<std::size_t> active = active_set(x, rings);
    if (active.empty()) {
        const VectorXcd corr = a.adjoint() * c;
        std::size_t arg = 1;
        double best_corr = -1.0;
        for (std::size_t k = 1; k <= rings; ++k) {
            const double v = corr.segment(static_cast<Eigen::Index>(ring_offset(k)), static_cast<Eigen::Index>(k)).norm();
            if (v > best_corr) {
                best_corr = v;
                arg = k;
            }
        }
        active.push_back(arg);
    }
    VectorXcd fitted = refit(a, c, active);
    while ((a * fitted - c).norm() > config.tol * target_norm && active.size() < rings) {
        const VectorXcd corr = a.adjoint() * (c - a * fitted);
        std::size_t arg = 0;
        double best_corr = -1.0;
        for (std::size_t k = 1; k <= rings; ++k) {
            if (std::find(active.begin(), active.end(), k) != active.end()) continue;
            const double v = corr.segment(static_cast<Eigen::Index>(ring_offset(k)), static_cast<Eigen::Index>(k)).norm();
            if (v > best_corr) {
                best_corr = v;
                arg = k;
            }
        }
        active.insert(std::upper_bound(active.begin(), active.end(), arg), arg);
        fitted = refit(a, c, active);
    }

    return finish(std::move(out), fitted, problem, target_norm, config.tol);
}

DecompositionReport verify_decomposition(const Decomposition& d, const SynthesisProblem& problem) {
    if (d.x.rings() > problem.rings()) {
        throw DomainError("verify_decomposition: coefficients exceed the problem's ring count");
    }
    DecompositionReport report;
    const PrefixTrace trace = prefix_trace(d.x, problem);
    report.prefix_residuals = trace.residuals;
    report.partial_sum_sup = trace.sup_norm;
    const double target_norm = h2_norm(problem.target());
    const double final_res = trace.residuals.empty() ? target_norm : trace.residuals.back();
    report.residual_rel = target_norm > 0.0 ? final_res / target_norm : final_res;

    const HardyFunction synth = synthesis_partial_sum(d.x, problem.grid(), problem.truncation());
    report.synthesis_norm = h2_norm(synth);
    report.truncation_tail = synthesis_truncation_tail(d.x, problem.truncation());
    report.synthesis_bound = kAnalysisUpper * norm_1_2(d.x) + report.truncation_tail;
    report.bound_holds = report.synthesis_norm <= report.synthesis_bound * (1.0 + kTolerance) + kTolerance;

    const auto norms = block_norms(d.x.flat(), d.x.rings());
    for (std::size_t k = norms.size(); k > 0; --k) {
        if (norms[k - 1] > 0.0) {
            report.last_active_ring = k;
            break;
        }
    }
    report.monotone_after_last_active = true;
    const std::size_t start = std::max<std::size_t>(report.last_active_ring, 1);
    for (std::size_t k = start; k < trace.residuals.size(); ++k) {
        if (trace.residuals[k] > trace.residuals[k - 1]) report.monotone_after_last_active = false;
    }
    return report;
}

}  // namespace szego
