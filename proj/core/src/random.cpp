#include "szego/random.hpp"

#include <cmath>
#include <vector>

namespace szego {

double TestRandom::uniform01() {
    const std::uint64_t s = engine_();
    return static_cast<double>(s >> 11) * 0x1.0p-53;
}

std::size_t TestRandom::index(std::size_t n) {
    if (n == 0) return 0;
    const auto i = static_cast<std::size_t>(std::floor(uniform01() * static_cast<double>(n)));
    return i < n ? i : n - 1;
}

double TestRandom::open_unit() {
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    return u;
}

Complex TestRandom::complex_in_square() {
    const double re = 2.0 * uniform01() - 1.0;
    const double im = 2.0 * uniform01() - 1.0;
    return {re, im};
}

HardyFunction TestRandom::polynomial(std::size_t degree) {
    std::vector<Complex> c(degree + 1);
    for (auto& v : c) v = complex_in_square();
    while (c.back() == Complex{}) c.back() = complex_in_square();
    return HardyFunction(std::move(c));
}

HardyFunction TestRandom::polynomial_up_to(std::size_t max_degree) {
    return polynomial(index(max_degree + 1));
}

MixedCoefficients TestRandom::mixed_coefficients(std::size_t rings) {
    MixedCoefficients x(rings);
    for (auto& v : x.flat()) v = complex_in_square();
    return x;
}

}  // namespace szego
