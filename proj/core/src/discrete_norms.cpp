#include "szego/discrete_norms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "szego/errors.hpp"
#include "szego/grid.hpp"

namespace szego {
namespace {

void require_ring(std::size_t k, const char* where) {
    if (k < 1) throw DomainError(std::string(where) + ": k must be >= 1");
}

double l2(const std::vector<Complex>& v) {
    double acc = 0.0;
    for (Complex c : v) acc += std::norm(c);
    return std::sqrt(acc);
}

// In-place radix-2 transform with positive exponent; size is a power of two.
void fft_positive(std::vector<Complex>& a, const std::vector<Complex>& roots) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        const std::size_t half = len / 2;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t i = 0; i < half; ++i) {
                const Complex u = a[start + i];
                const Complex v = a[start + i + half] * roots[i * stride];
                a[start + i] = u + v;
                a[start + i + half] = u - v;
            }
        }
    }
}

}  // namespace

std::vector<Complex> roots_of_unity(std::size_t k) {
    require_ring(k, "roots_of_unity");
    std::vector<Complex> out(k);
    const double kd = static_cast<double>(k);
    for (std::size_t j = 0; j < k; ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / kd;
        out[j] = Complex(std::cos(angle), std::sin(angle));
    }
    return out;
}

std::vector<Complex> fold_coefficients(const HardyFunction& f, std::size_t k) {
    require_ring(k, "fold_coefficients");
    std::vector<Complex> folded(k);
    const auto c = f.coeffs();
    for (std::size_t m = 0; m < c.size(); ++m) folded[m % k] += c[m];
    return folded;
}

std::vector<Complex> root_values(const HardyFunction& f, std::size_t k) {
    std::vector<Complex> folded = fold_coefficients(f, k);
    const std::vector<Complex> roots = roots_of_unity(k);
    if (std::has_single_bit(k)) {
        fft_positive(folded, roots);
        return folded;
    }
    const std::size_t support = std::min(k, f.size());
    std::vector<Complex> values(k);
    for (std::size_t j = 0; j < k; ++j) {
        Complex acc{};
        for (std::size_t s = 0; s < support; ++s) acc += folded[s] * roots[(j * s) % k];
        values[j] = acc;
    }
    return values;
}

double discrete_norm(const HardyFunction& f, std::size_t k) {
    require_ring(k, "discrete_norm");
    // Only residues below the stored length can be nonzero.
    const auto c = f.coeffs();
    std::vector<Complex> folded(std::min(k, c.size()));
    for (std::size_t m = 0; m < c.size(); ++m) folded[m % k] += c[m];
    return l2(folded);
}

double discrete_norm_sampled(const HardyFunction& f, std::size_t k) {
    return l2(root_values(f, k)) / std::sqrt(static_cast<double>(k));
}

double dilated_ring_norm(const HardyFunction& f, std::size_t k) {
    require_ring(k, "dilated_ring_norm");
    if (k == 1) return std::abs(f.coeff(0));
    return discrete_norm(dilate(f, ring_radius(k)), k);
}

DiscreteNormReport verify_lemma3(const HardyFunction& p, std::size_t k) {
    require_ring(k, "verify_lemma3");
    if (p.degree() >= k) {
        throw PreconditionError("verify_lemma3: degree " + std::to_string(p.degree()) +
                                " is not less than k=" + std::to_string(k) +
                                "; the discrete norm differs from the H2 norm there");
    }
    DiscreteNormReport report;
    report.k = k;
    report.r = 1.0;
    report.value = discrete_norm_sampled(p, k);
    report.bound = h2_norm(p);
    report.margin = kTolerance * (1.0 + report.bound) - std::abs(report.value - report.bound);
    return report;
}

DiscreteNormReport verify_lemma4(const HardyFunction& f, std::size_t k, double r) {
    require_ring(k, "verify_lemma4");
    if (!(r > 0.0 && r < 1.0)) throw DomainError("verify_lemma4: r must lie in (0, 1)");
    DiscreteNormReport report;
    report.k = k;
    report.r = r;
    report.value = discrete_norm(dilate(f, r), k);
    report.bound = h2_norm(f) / std::sqrt(1.0 - std::pow(r, 2.0 * static_cast<double>(k)));
    report.margin = report.bound - report.value;
    return report;
}

std::pair<double, std::size_t> sup_dilated_norm_arg(const HardyFunction& f, std::size_t rings) {
    require_ring(rings, "sup_dilated_norm");
    double best = -1.0;
    std::size_t arg = 1;
    for (std::size_t k = 1; k <= rings; ++k) {
        const double v = dilated_ring_norm(f, k);
        if (v > best) {
            best = v;
            arg = k;
        }
    }
    return {best, arg};
}

double sup_dilated_norm(const HardyFunction& f, std::size_t rings) {
    return sup_dilated_norm_arg(f, rings).first;
}

SupBracket verify_eq5(const HardyFunction& f, std::size_t rings) {
    require_ring(rings, "verify_eq5");
    const std::size_t deg = f.degree();
    if (rings <= deg) {
        throw PreconditionError("verify_eq5: K=" + std::to_string(rings) +
                                " must exceed the degree " + std::to_string(deg) +
                                "; raise --rings above the degree");
    }
    const double norm = h2_norm(f);
    const auto [sup, arg] = sup_dilated_norm_arg(f, rings);

    SupBracket out;
    out.upper.k = arg;
    out.upper.r = arg == 1 ? 0.0 : ring_radius(arg);
    out.upper.value = sup;
    out.upper.bound = kDilatedSupUpper * norm;
    out.upper.margin = out.upper.bound - sup;

    out.lower.k = rings;
    out.lower.r = ring_radius(rings);
    out.lower.value = sup;
    out.lower.bound = std::pow(ring_radius(rings), static_cast<double>(deg)) * norm;
    out.lower.margin = sup - out.lower.bound;
    return out;
}

}  // namespace szego
