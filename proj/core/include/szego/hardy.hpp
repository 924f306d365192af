#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace szego {

using Complex = std::complex<double>;

/// A point of the open unit disk. Construction enforces |value| < 1.
class DiskPoint {
public:
    constexpr DiskPoint() = default;
    explicit DiskPoint(Complex value);

    [[nodiscard]] Complex value() const noexcept { return value_; }
    [[nodiscard]] double modulus() const noexcept { return std::abs(value_); }

private:
    Complex value_{0.0, 0.0};
};

/**
 * Element of H^2 stored as a finite Taylor truncation
 *
 *     f(z) = sum_{m=0}^{M} c_m z^m.
 *
 * Coefficients are finite; trailing zeros are allowed and do not change the
 * degree. The default-constructed function is the zero function with no
 * stored coefficients.
 */
class HardyFunction {
public:
    HardyFunction() = default;
    explicit HardyFunction(std::vector<Complex> coeffs);
    HardyFunction(std::initializer_list<Complex> coeffs);

    static HardyFunction monomial(std::size_t m, Complex scale = 1.0);

    [[nodiscard]] std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
    [[nodiscard]] Complex coeff(std::size_t m) const noexcept {
        return m < coeffs_.size() ? coeffs_[m] : Complex{};
    }

    /// Largest m with c_m != 0; 0 for the zero function.
    [[nodiscard]] std::size_t degree() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept;

    HardyFunction& operator+=(const HardyFunction& other);
    HardyFunction& operator-=(const HardyFunction& other);
    HardyFunction& operator*=(Complex scale);

    friend HardyFunction operator+(HardyFunction lhs, const HardyFunction& rhs) { return lhs += rhs; }
    friend HardyFunction operator-(HardyFunction lhs, const HardyFunction& rhs) { return lhs -= rhs; }
    friend HardyFunction operator*(Complex scale, HardyFunction f) { return f *= scale; }

private:
    std::vector<Complex> coeffs_;
};

/// Horner evaluation on the closed disk.
Complex evaluate(const HardyFunction& f, Complex z);

/// <f, g> = sum c_m(f) conj(c_m(g)); conjugate-linear in g, so that
/// h2_inner(f, kernel_function(l, M)) = f(l) once M >= deg f.
Complex h2_inner(const HardyFunction& f, const HardyFunction& g);

double h2_norm(const HardyFunction& f);

/// sigma_r f(z) = f(rz), 0 < r < 1.
HardyFunction dilate(const HardyFunction& f, double r);

/// K(z, lambda) = 1 / (1 - conj(lambda) z).
Complex szego_kernel_value(Complex z, DiskPoint lambda);

/// Degree-M Taylor truncation of K(., lambda): c_m = conj(lambda)^m.
HardyFunction kernel_function(DiskPoint lambda, std::size_t truncation);

/// (1 - |lambda|^2)^{1/2} K(., lambda), truncated at degree M.
HardyFunction normalized_kernel_function(DiskPoint lambda, std::size_t truncation);

/// |K(z, lambda) - kernel_function(lambda, M)(z)| <= |lambda|^{M+1} / (1 - |lambda|)
/// for |z| <= 1.
double kernel_tail_bound(DiskPoint lambda, std::size_t truncation);

/// H^2 norm of the part of the normalized kernel dropped by truncation at M,
/// which is exactly |lambda|^{M+1}.
double normalized_kernel_tail(DiskPoint lambda, std::size_t truncation);

}  // namespace szego
