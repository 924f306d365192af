#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "szego/frame_analysis.hpp"
#include "szego/hardy.hpp"

namespace szego {

/**
 * Reproducible source of random test inputs.
 *
 * State update is the 64-bit linear congruential map
 *
 *     s <- 6364136223846793005 * s + 1442695040888963407  (mod 2^64)
 *
 * seeded with s = seed. Each uniform draw advances the state once and returns
 * (s >> 11) * 2^-53 in [0, 1). All derived draws are written in terms of that
 * primitive so other implementations can replay a suite from the seed:
 *
 *   - complex coefficient: re = 2u - 1, then im = 2u - 1 (square [-1, 1)^2)
 *   - integer in [0, n): floor(u * n)
 *   - radius in (0, 1): u, redrawn while u == 0
 *   - polynomial of degree d: d + 1 coefficients in index order, redrawing the
 *     leading one while it is exactly zero
 */
class TestRandom {
public:
    using Engine = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                                   1442695040888963407ULL, 0ULL>;

    explicit TestRandom(std::uint64_t seed) : engine_(seed) {}

    double uniform01();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    std::size_t index(std::size_t n);
    double open_unit();
    Complex complex_in_square();

    /// Exact degree d.
    HardyFunction polynomial(std::size_t degree);
    /// Degree drawn uniformly from [0, max_degree], then polynomial(d).
    HardyFunction polynomial_up_to(std::size_t max_degree);
    /// Every entry drawn from the square.
    MixedCoefficients mixed_coefficients(std::size_t rings);

private:
    Engine engine_;
};

}  // namespace szego
