#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "szego/hardy.hpp"

namespace szego {

/// Position (k, j) on the ring grid: ring k >= 1, slot 0 <= j < k.
struct RingIndex {
    std::size_t k = 1;
    std::size_t j = 0;

    friend bool operator==(const RingIndex&, const RingIndex&) = default;
};

/// lambda_{k,j} = (1 - 1/k) exp(2 pi i j / k) with weight (1 - |lambda|^2)^{1/2}.
struct GridNode {
    RingIndex index;
    DiskPoint point;
    double weight = 1.0;
};

/// Radius 1 - 1/k of ring k.
double ring_radius(std::size_t k);

/// (1 - (1 - 1/k)^2)^{1/2}, computed as sqrt((2k - 1) / k^2) to keep the
/// small-weight rings accurate.
double ring_weight(std::size_t k);

GridNode node(std::size_t k, std::size_t j);

/// 1-based ring-major enumeration: flat_index(k, j) = k(k-1)/2 + j + 1.
std::size_t flat_index(std::size_t k, std::size_t j);
RingIndex ring_index(std::size_t n);

/// Offset of ring k's first node in the 0-based flat storage order.
constexpr std::size_t ring_offset(std::size_t k) noexcept { return k * (k - 1) / 2; }
constexpr std::size_t triangular(std::size_t rings) noexcept { return rings * (rings + 1) / 2; }

/// Immutable truncation of the ring grid to rings 1..K.
class Grid {
public:
    explicit Grid(std::size_t rings);

    [[nodiscard]] std::size_t rings() const noexcept { return rings_; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] std::span<const GridNode> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::span<const GridNode> ring(std::size_t k) const;
    [[nodiscard]] const GridNode& at(std::size_t k, std::size_t j) const;

private:
    std::size_t rings_;
    std::vector<GridNode> nodes_;
};

Grid build_grid(std::size_t rings);

/// sum over nodes with k <= K of (1 - |lambda_{k,j}|). Each ring adds k * (1/k).
double blaschke_partial_sum(std::size_t rings);

}  // namespace szego
