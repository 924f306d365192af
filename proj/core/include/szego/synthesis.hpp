#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <vector>

#include "szego/frame_analysis.hpp"
#include "szego/grid.hpp"
#include "szego/hardy.hpp"

namespace szego {

/// Target f, ring grid, and Taylor truncation M >= deg f.
class SynthesisProblem {
public:
    SynthesisProblem(HardyFunction target, std::size_t rings, std::optional<std::size_t> truncation = {});

    [[nodiscard]] const HardyFunction& target() const noexcept { return target_; }
    [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
    [[nodiscard]] std::size_t rings() const noexcept { return grid_.rings(); }
    [[nodiscard]] std::size_t truncation() const noexcept { return truncation_; }

    /// Target coefficients zero-padded to M + 1 entries.
    [[nodiscard]] Eigen::VectorXcd rhs() const;

private:
    HardyFunction target_;
    Grid grid_;
    std::size_t truncation_;
};

/// max(2 deg, 32).
std::size_t default_truncation(std::size_t degree);

struct SolverConfig {
    /// First continuation weight; unset means 0.1 * max_k ||(A^H c)_k||.
    std::optional<double> initial_mu;
    double tol = 1e-3;                     // relative residual target
    std::size_t max_iter = 20000;          // across all stages
    std::size_t continuation_steps = 8;    // mu halves between stages
    std::size_t stage_max_iter = 500;
    double stage_tol = 1e-7;               // relative step size that ends a stage
    double power_tol = 1e-6;
    std::size_t power_max_iter = 2000;
};

enum class SolveStatus { Converged, NonConvergence, DegenerateTarget };

const char* to_string(SolveStatus status);

struct Decomposition {
    MixedCoefficients x{1};
    double residual_rel = 0.0;
    double mixed_norm = 0.0;
    std::size_t iterations = 0;
    double partial_sum_sup = 0.0;
    SolveStatus status = SolveStatus::Converged;

    /// ||f - sum_{k <= kappa} x_k K^_k||_{H^2} for kappa = 1..K.
    std::vector<double> prefix_residuals;
    /// Objective (1/2)||Ax - c||^2 + mu_s sum_k ||x_k|| at the end of each stage.
    std::vector<double> stage_objectives;
    std::vector<double> stage_mu;
    std::vector<std::size_t> active_rings;
    double lipschitz = 0.0;
};

/// Column (k, j) holds the coefficients of normalized_kernel_function(lambda_{k,j}, M);
/// columns follow the grid's flat order.
Eigen::MatrixXcd build_synthesis_matrix(const Grid& grid, std::size_t truncation);

/// Largest eigenvalue of A^H A by power iteration from the all-ones vector.
/// Throws IllConditionedError if the estimate does not settle.
double estimate_lipschitz(const Eigen::MatrixXcd& a, double tol, std::size_t max_iter);

/// Proximal map of t * sum_k ||x_k||_2 applied in place, ring by ring.
void group_soft_threshold(Eigen::Ref<Eigen::VectorXcd> x, std::size_t rings, double threshold);

/// Ring-blocked group lasso with continuation, then a least-squares refit on
/// the active rings.
Decomposition solve(const SynthesisProblem& problem, const SolverConfig& config = {});

struct DecompositionReport {
    std::vector<double> prefix_residuals;
    double partial_sum_sup = 0.0;
    double residual_rel = 0.0;
    double synthesis_norm = 0.0;
    double synthesis_bound = 0.0;  // kAnalysisUpper * ||x||_{1,2} + truncation tail
    double truncation_tail = 0.0;
    std::size_t last_active_ring = 0;  // 0 when x = 0
    bool bound_holds = false;
    bool monotone_after_last_active = false;
};

DecompositionReport verify_decomposition(const Decomposition& d, const SynthesisProblem& problem);

}  // namespace szego
