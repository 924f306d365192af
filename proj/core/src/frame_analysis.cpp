#include "szego/frame_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "szego/parallel.hpp"

namespace szego {

std::vector<double> block_norms(std::span<const Complex> flat, std::size_t rings) {
    if (flat.size() != triangular(rings)) throw DomainError("block_norms: size mismatch");
    std::vector<double> out(rings);
    for (std::size_t k = 1; k <= rings; ++k) {
        double acc = 0.0;
        for (Complex v : flat.subspan(ring_offset(k), k)) acc += std::norm(v);
        out[k - 1] = std::sqrt(acc);
    }
    return out;
}

double norm_1_2(const MixedCoefficients& x) {
    double total = 0.0;
    for (double b : block_norms(x.flat(), x.rings())) total += b;
    return total;
}

double norm_inf_2(const AnalysisSequence& y) {
    double best = 0.0;
    for (double b : block_norms(y.flat(), y.rings())) best = std::max(best, b);
    return best;
}

Complex duality_pair(const MixedCoefficients& x, const AnalysisSequence& y) {
    if (x.rings() != y.rings()) {
        throw DomainError("duality_pair: ring counts differ (" + std::to_string(x.rings()) + " vs " +
                          std::to_string(y.rings()) + ")");
    }
    Complex acc{};
    const auto xs = x.flat();
    const auto ys = y.flat();
    for (std::size_t n = 0; n < xs.size(); ++n) acc += xs[n] * ys[n];
    return acc;
}

std::vector<Complex> analysis_block(const HardyFunction& g, std::size_t k) {
    if (k < 1) throw DomainError("analysis_block: k must be >= 1");
    if (k == 1) return {std::conj(g.coeff(0))};
    std::vector<Complex> values = root_values(dilate(g, ring_radius(k)), k);
    const double weight = ring_weight(k);
    for (auto& v : values) v = weight * std::conj(v);
    return values;
}

AnalysisSequence analysis_map(const HardyFunction& g, const Grid& grid) {
    AnalysisSequence y(grid.rings());
    parallel_for(grid.rings(), [&](std::size_t i) {
        const std::size_t k = i + 1;
        const auto values = analysis_block(g, k);
        std::copy(values.begin(), values.end(), y.block(k).begin());
    });
    return y;
}

double frame_ratio(const HardyFunction& g, const Grid& grid) {
    const double norm = h2_norm(g);
    if (norm == 0.0) throw DomainError("frame_ratio: zero function");
    return norm_inf_2(analysis_map(g, grid)) / norm;
}

HardyFunction synthesis_prefix(const MixedCoefficients& x, const Grid& grid, std::size_t truncation,
                               std::size_t through_ring) {
    if (x.rings() > grid.rings()) throw DomainError("synthesis: grid does not cover every block of x");
    through_ring = std::min(through_ring, x.rings());
    std::vector<Complex> acc(truncation + 1);
    for (std::size_t k = 1; k <= through_ring; ++k) {
        const auto block = x.block(k);
        const auto nodes = grid.ring(k);
        for (std::size_t j = 0; j < k; ++j) {
            if (block[j] == Complex{}) continue;
            const Complex ratio = std::conj(nodes[j].point.value());
            Complex term = block[j] * nodes[j].weight;
            for (std::size_t m = 0; m <= truncation; ++m) {
                acc[m] += term;
                term *= ratio;
            }
        }
    }
    return HardyFunction(std::move(acc));
}

HardyFunction synthesis_partial_sum(const MixedCoefficients& x, const Grid& grid, std::size_t truncation) {
    return synthesis_prefix(x, grid, truncation, x.rings());
}

double synthesis_truncation_tail(const MixedCoefficients& x, std::size_t truncation) {
    const auto norms = block_norms(x.flat(), x.rings());
    double tail = 0.0;
    for (std::size_t k = 2; k <= x.rings(); ++k) {
        tail += std::sqrt(static_cast<double>(k)) *
                std::pow(ring_radius(k), static_cast<double>(truncation + 1)) * norms[k - 1];
    }
    return tail;
}

FrameBoundEstimate frame_bounds_empirical(std::span<const HardyFunction> samples, const Grid& grid) {
    if (samples.empty()) throw DomainError("frame_bounds_empirical: no samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].is_zero()) {
            throw DomainError("frame_bounds_empirical: sample " + std::to_string(i) + " is the zero function");
        }
        if (samples[i].degree() >= grid.rings()) {
            throw DomainError("frame_bounds_empirical: sample " + std::to_string(i) +
                              " has degree >= ring count");
        }
    }
    std::vector<double> ratios(samples.size());
    parallel_for(samples.size(), [&](std::size_t i) {
        const double norm = h2_norm(samples[i]);
        double sup = 0.0;
        for (std::size_t k = 1; k <= grid.rings(); ++k) {
            double acc = 0.0;
            for (Complex v : analysis_block(samples[i], k)) acc += std::norm(v);
            sup = std::max(sup, std::sqrt(acc));
        }
        ratios[i] = sup / norm;
    });
    FrameBoundEstimate est;
    est.lower = std::numeric_limits<double>::infinity();
    for (double r : ratios) {
        est.lower = std::min(est.lower, r);
        est.upper = std::max(est.upper, r);
    }
    est.sample_count = samples.size();
    est.rings = grid.rings();
    est.ratios = std::move(ratios);
    return est;
}

std::vector<double> ds_frame_divergence(const HardyFunction& f, std::size_t rings) {
    if (f.is_zero()) throw DomainError("ds_frame_divergence: f must be nonzero");
    if (rings < 1) throw DomainError("ds_frame_divergence: K must be >= 1");
    std::vector<double> increments(rings);
    parallel_for(rings, [&](std::size_t i) {
        double acc = 0.0;
        for (Complex v : analysis_block(f, i + 1)) acc += std::norm(v);
        increments[i] = acc;
    });
    std::vector<double> sums(rings);
    double running = 0.0;
    for (std::size_t i = 0; i < rings; ++i) {
        running += increments[i];
        sums[i] = running;
    }
    return sums;
}

}  // namespace szego
