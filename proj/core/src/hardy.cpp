#include "szego/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "szego/errors.hpp"

namespace szego {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(std::span<const Complex> values) {
    for (std::size_t m = 0; m < values.size(); ++m) {
        if (!finite(values[m])) {
            throw DomainError("HardyFunction: non-finite coefficient at index " + std::to_string(m));
        }
    }
}

}  // namespace

DiskPoint::DiskPoint(Complex value) : value_(value) {
    if (!finite(value)) throw DomainError("DiskPoint: non-finite value");
    if (!(std::abs(value) < 1.0)) throw DomainError("DiskPoint: |lambda| must be < 1");
}

HardyFunction::HardyFunction(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    require_finite(coeffs_);
}

HardyFunction::HardyFunction(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
    require_finite(coeffs_);
}

HardyFunction HardyFunction::monomial(std::size_t m, Complex scale) {
    std::vector<Complex> c(m + 1);
    c[m] = scale;
    return HardyFunction(std::move(c));
}

std::size_t HardyFunction::degree() const noexcept {
    for (std::size_t m = coeffs_.size(); m > 0; --m) {
        if (coeffs_[m - 1] != Complex{}) return m - 1;
    }
    return 0;
}

bool HardyFunction::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

HardyFunction& HardyFunction::operator+=(const HardyFunction& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t m = 0; m < other.coeffs_.size(); ++m) coeffs_[m] += other.coeffs_[m];
    return *this;
}

HardyFunction& HardyFunction::operator-=(const HardyFunction& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t m = 0; m < other.coeffs_.size(); ++m) coeffs_[m] -= other.coeffs_[m];
    return *this;
}

HardyFunction& HardyFunction::operator*=(Complex scale) {
    for (auto& c : coeffs_) c *= scale;
    return *this;
}

Complex evaluate(const HardyFunction& f, Complex z) {
    if (!finite(z)) throw DomainError("evaluate: non-finite argument");
    const auto c = f.coeffs();
    Complex acc{};
    for (std::size_t m = c.size(); m > 0; --m) acc = acc * z + c[m - 1];
    return acc;
}

Complex h2_inner(const HardyFunction& f, const HardyFunction& g) {
    const std::size_t n = std::min(f.size(), g.size());
    Complex acc{};
    for (std::size_t m = 0; m < n; ++m) acc += f.coeff(m) * std::conj(g.coeff(m));
    return acc;
}

double h2_norm(const HardyFunction& f) {
    double acc = 0.0;
    for (Complex c : f.coeffs()) acc += std::norm(c);
    return std::sqrt(acc);
}

HardyFunction dilate(const HardyFunction& f, double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("dilate: radius must lie in (0, 1)");
    std::vector<Complex> out(f.coeffs().begin(), f.coeffs().end());
    double power = 1.0;
    for (auto& c : out) {
        c *= power;
        power *= r;
    }
    return HardyFunction(std::move(out));
}

Complex szego_kernel_value(Complex z, DiskPoint lambda) {
    return 1.0 / (1.0 - std::conj(lambda.value()) * z);
}

HardyFunction kernel_function(DiskPoint lambda, std::size_t truncation) {
    const Complex ratio = std::conj(lambda.value());
    std::vector<Complex> c(truncation + 1);
    Complex power{1.0, 0.0};
    for (auto& entry : c) {
        entry = power;
        power *= ratio;
    }
    return HardyFunction(std::move(c));
}

HardyFunction normalized_kernel_function(DiskPoint lambda, std::size_t truncation) {
    const double weight = std::sqrt(1.0 - std::norm(lambda.value()));
    HardyFunction k = kernel_function(lambda, truncation);
    k *= weight;
    return k;
}

double kernel_tail_bound(DiskPoint lambda, std::size_t truncation) {
    const double rho = lambda.modulus();
    return std::pow(rho, static_cast<double>(truncation + 1)) / (1.0 - rho);
}

double normalized_kernel_tail(DiskPoint lambda, std::size_t truncation) {
    return std::pow(lambda.modulus(), static_cast<double>(truncation + 1));
}

}  // namespace szego
