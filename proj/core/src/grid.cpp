#include "szego/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "szego/errors.hpp"

namespace szego {

double ring_radius(std::size_t k) {
    if (k < 1) throw DomainError("ring_radius: k must be >= 1");
    return 1.0 - 1.0 / static_cast<double>(k);
}

double ring_weight(std::size_t k) {
    if (k < 1) throw DomainError("ring_weight: k must be >= 1");
    const double kd = static_cast<double>(k);
    return std::sqrt(2.0 * kd - 1.0) / kd;
}

GridNode node(std::size_t k, std::size_t j) {
    if (k < 1) throw DomainError("node: ring number k must be >= 1");
    if (j >= k) {
        throw DomainError("node: slot j=" + std::to_string(j) + " out of range for ring k=" +
                          std::to_string(k));
    }
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k);
    const double radius = ring_radius(k);
    return GridNode{RingIndex{k, j}, DiskPoint(std::polar(radius, angle)), ring_weight(k)};
}

std::size_t flat_index(std::size_t k, std::size_t j) {
    if (k < 1 || j >= k) throw DomainError("flat_index: invalid ring index");
    return ring_offset(k) + j + 1;
}

RingIndex ring_index(std::size_t n) {
    if (n < 1) throw DomainError("ring_index: flat index is 1-based");
    // Largest k with k(k-1)/2 < n, seeded from the closed-form root and corrected.
    auto k = static_cast<std::size_t>(
        std::floor((1.0 + std::sqrt(8.0 * static_cast<double>(n) - 7.0)) / 2.0));
    if (k < 1) k = 1;
    while (ring_offset(k) >= n) --k;
    while (ring_offset(k + 1) < n) ++k;
    return RingIndex{k, n - ring_offset(k) - 1};
}

Grid::Grid(std::size_t rings) : rings_(rings) {
    if (rings < 1) throw DomainError("build_grid: ring count K must be >= 1");
    nodes_.reserve(triangular(rings));
    for (std::size_t k = 1; k <= rings; ++k) {
        for (std::size_t j = 0; j < k; ++j) nodes_.push_back(node(k, j));
    }
}

std::span<const GridNode> Grid::ring(std::size_t k) const {
    if (k < 1 || k > rings_) throw DomainError("Grid::ring: ring out of range");
    return std::span<const GridNode>(nodes_).subspan(ring_offset(k), k);
}

const GridNode& Grid::at(std::size_t k, std::size_t j) const {
    if (k < 1 || k > rings_ || j >= k) throw DomainError("Grid::at: index out of range");
    return nodes_[ring_offset(k) + j];
}

Grid build_grid(std::size_t rings) { return Grid(rings); }

double blaschke_partial_sum(std::size_t rings) {
    if (rings < 1) throw DomainError("blaschke_partial_sum: K must be >= 1");
    double total = 0.0;
    for (std::size_t k = 1; k <= rings; ++k) {
        const double radius = ring_radius(k);
        double ring_sum = 0.0;
        for (std::size_t j = 0; j < k; ++j) ring_sum += 1.0 - radius;
        total += ring_sum;
    }
    return total;
}

}  // namespace szego
