#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "szego/discrete_norms.hpp"
#include "szego/errors.hpp"
#include "szego/grid.hpp"
#include "szego/hardy.hpp"

namespace szego {

/// sqrt(2) (1 - e^{-2})^{-1/2}: bound on the analysis map into l^inf(l^2_k)
/// and, dually, on the synthesis map out of l^1(l^2_k).
inline const double kAnalysisUpper = std::sqrt(2.0) * kDilatedSupUpper;

/**
 * Ragged family indexed by the ring grid: block k (1-based) holds k entries.
 * Storage is flat in ring-major order, matching Grid::nodes().
 *
 * The tag separates the coefficient space l^1(l^2_k) from its dual
 * l^inf(l^2_k) at the type level.
 */
template <class Tag>
class RingBlocks {
public:
    explicit RingBlocks(std::size_t rings) : rings_(rings), values_(triangular(rings)) {
        if (rings < 1) throw DomainError("RingBlocks: ring count must be >= 1");
    }
    RingBlocks(std::size_t rings, std::vector<Complex> flat) : rings_(rings), values_(std::move(flat)) {
        if (rings < 1) throw DomainError("RingBlocks: ring count must be >= 1");
        if (values_.size() != triangular(rings)) throw DomainError("RingBlocks: flat size must be K(K+1)/2");
    }

    [[nodiscard]] std::size_t rings() const noexcept { return rings_; }
    [[nodiscard]] std::span<const Complex> flat() const noexcept { return values_; }
    [[nodiscard]] std::span<Complex> flat() noexcept { return values_; }

    [[nodiscard]] std::span<const Complex> block(std::size_t k) const {
        check(k);
        return std::span<const Complex>(values_).subspan(ring_offset(k), k);
    }
    [[nodiscard]] std::span<Complex> block(std::size_t k) {
        check(k);
        return std::span<Complex>(values_).subspan(ring_offset(k), k);
    }

    Complex& operator()(std::size_t k, std::size_t j) { return block(k)[j]; }
    Complex operator()(std::size_t k, std::size_t j) const { return block(k)[j]; }

private:
    void check(std::size_t k) const {
        if (k < 1 || k > rings_) throw DomainError("RingBlocks: ring out of range");
    }

    std::size_t rings_;
    std::vector<Complex> values_;
};

struct MixedTag;
struct AnalysisTag;
using MixedCoefficients = RingBlocks<MixedTag>;
using AnalysisSequence = RingBlocks<AnalysisTag>;

struct FrameBoundEstimate {
    double lower = 0.0;  // min observed ||analysis(g)||_{inf,2} / ||g||
    double upper = 0.0;  // max observed ratio
    std::size_t sample_count = 0;
    std::size_t rings = 0;
    std::vector<double> ratios;  // per sample, input order
};

/// Euclidean norm of each ring block, k = 1..K.
std::vector<double> block_norms(std::span<const Complex> flat, std::size_t rings);

double norm_1_2(const MixedCoefficients& x);
double norm_inf_2(const AnalysisSequence& y);

/// sum_k sum_j x_{k,j} y_{k,j}, ring-major.
Complex duality_pair(const MixedCoefficients& x, const AnalysisSequence& y);

/// y_{k,j} = <K^_{lambda_{k,j}}, g> = weight_k conj(g(lambda_{k,j})) for one ring.
std::vector<Complex> analysis_block(const HardyFunction& g, std::size_t k);

AnalysisSequence analysis_map(const HardyFunction& g, const Grid& grid);

/// ||analysis_map(g)||_{inf,2} / ||g||_{H^2}; g must be nonzero.
double frame_ratio(const HardyFunction& g, const Grid& grid);

/// sum over rings k <= through_ring of x_{k,j} K^_{lambda_{k,j}}, each kernel
/// truncated at degree M.
HardyFunction synthesis_prefix(const MixedCoefficients& x, const Grid& grid, std::size_t truncation,
                               std::size_t through_ring);

HardyFunction synthesis_partial_sum(const MixedCoefficients& x, const Grid& grid, std::size_t truncation);

/// Upper bound on the H^2 norm dropped by truncating every kernel at degree M:
/// sum_k sqrt(k) (1 - 1/k)^{M+1} ||x_k||_2.
double synthesis_truncation_tail(const MixedCoefficients& x, std::size_t truncation);

/// Requires nonzero samples, each of degree below the grid's ring count.
FrameBoundEstimate frame_bounds_empirical(std::span<const HardyFunction> samples, const Grid& grid);

/// S_1..S_K with S_K = sum_{k<=K} sum_j |<f, K^_{lambda_{k,j}}>|^2.
std::vector<double> ds_frame_divergence(const HardyFunction& f, std::size_t rings);

}  // namespace szego
