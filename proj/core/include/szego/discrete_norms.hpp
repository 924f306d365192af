#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "szego/hardy.hpp"

namespace szego {

/// (1 - e^{-2})^{-1/2}: upper constant of the dilated discrete-norm sandwich.
inline const double kDilatedSupUpper = 1.0 / std::sqrt(1.0 - std::exp(-2.0));

/// Absolute tolerance unit; checks use kTolerance * (1 + magnitude).
inline constexpr double kTolerance = 1e-10;

/// One line of a verification sweep. `margin` is signed slack: positive when
/// the checked inequality holds.
struct DiscreteNormReport {
    std::size_t k = 1;
    double r = 1.0;  // dilation radius; 1 means none
    double value = 0.0;
    double bound = 0.0;
    double margin = 0.0;
};

/// e^{2 pi i j / k}, j = 0..k-1, each from its own angle.
std::vector<Complex> roots_of_unity(std::size_t k);

/// c~_s = sum_{m = s mod k} c_m, s = 0..k-1.
std::vector<Complex> fold_coefficients(const HardyFunction& f, std::size_t k);

/// Values f(omega_k^j), j = 0..k-1, by folding and a size-k transform
/// (radix-2 FFT for powers of two, direct DFT over the folded support otherwise).
std::vector<Complex> root_values(const HardyFunction& f, std::size_t k);

/// ((1/k) sum_j |f(omega_k^j)|^2)^{1/2}, computed as the l2 norm of the
/// folded coefficients. Exact for every degree.
double discrete_norm(const HardyFunction& f, std::size_t k);

/// Same quantity computed from the transformed root values.
double discrete_norm_sampled(const HardyFunction& f, std::size_t k);

/// ||sigma_{1-1/k} f||_k with the k = 1 term taken as |f(0)|.
double dilated_ring_norm(const HardyFunction& f, std::size_t k);

/// Lemma-3 identity ||P||_k = ||P||_{H^2} for deg P < k. `value` is the
/// transform-based norm, `bound` the H^2 norm, margin = tol - |value - bound|.
/// Throws PreconditionError when deg P >= k.
DiscreteNormReport verify_lemma3(const HardyFunction& p, std::size_t k);

/// ||sigma_r f||_k <= ||f|| / (1 - r^{2k})^{1/2}.
DiscreteNormReport verify_lemma4(const HardyFunction& f, std::size_t k, double r);

/// max_{1<=k<=K} dilated_ring_norm(f, k).
double sup_dilated_norm(const HardyFunction& f, std::size_t rings);

/// Same sup together with the maximizing ring.
std::pair<double, std::size_t> sup_dilated_norm_arg(const HardyFunction& f, std::size_t rings);

struct SupBracket {
    DiscreteNormReport upper;  // value <= C ||f||
    DiscreteNormReport lower;  // value >= (1 - 1/K)^{deg f} ||f||
};

/// Checks both sides of the dilated-sup sandwich on a polynomial. Requires
/// K > deg f; throws PreconditionError otherwise.
SupBracket verify_eq5(const HardyFunction& f, std::size_t rings);

}  // namespace szego
