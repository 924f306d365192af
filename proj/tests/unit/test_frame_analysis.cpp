#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "szego/errors.hpp"
#include "szego/frame_analysis.hpp"
#include "szego/random.hpp"

using namespace szego;

TEST_SUITE("frame_analysis") {

TEST_CASE("ring blocks shape") {
    MixedCoefficients x(4);
    CHECK(x.flat().size() == 10);
    CHECK(x.block(3).size() == 3);
    CHECK_THROWS_AS((void)x.block(5), DomainError);
    CHECK_THROWS_AS(MixedCoefficients(3, std::vector<Complex>(5)), DomainError);
}

TEST_CASE("mixed norms") {
    MixedCoefficients zero(5);
    CHECK(norm_1_2(zero) == 0.0);
    MixedCoefficients hot(4);
    hot(3, 1) = 1.0;
    CHECK(norm_1_2(hot) == 1.0);
    MixedCoefficients x(2);
    x(1, 0) = 12.0;
    x(2, 0) = 3.0;
    x(2, 1) = 4.0;
    CHECK(norm_1_2(x) == doctest::Approx(17.0));

    AnalysisSequence yz(3);
    CHECK(norm_inf_2(yz) == 0.0);
    AnalysisSequence y1(3);
    y1(2, 1) = Complex(0.0, 2.0);
    CHECK(norm_inf_2(y1) == 2.0);
    AnalysisSequence y(2);
    y(1, 0) = 3.0;
    y(2, 1) = 4.0;
    CHECK(norm_inf_2(y) == 4.0);
}

TEST_CASE("duality pairing and mixed Hoelder") {
    MixedCoefficients x(3);
    x(2, 0) = 1.0;
    AnalysisSequence y(3);
    y(2, 0) = 5.0;
    CHECK(duality_pair(x, y) == Complex(5.0));
    CHECK(duality_pair(MixedCoefficients(3), y) == Complex(0.0));
    CHECK_THROWS_AS(duality_pair(MixedCoefficients(2), y), DomainError);

    TestRandom rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        auto xr = rng.mixed_coefficients(6);
        AnalysisSequence yr(6);
        for (auto& v : yr.flat()) v = rng.complex_in_square();
        // sparsify some blocks so the bound is exercised away from equality
        if (trial % 2 == 0) {
            for (auto& v : xr.block(1 + rng.index(6))) v = 0.0;
        }
        // brute-force double sum, independent of duality_pair
        Complex brute{};
        for (std::size_t k = 1; k <= 6; ++k) {
            for (std::size_t j = 0; j < k; ++j) brute += xr(k, j) * yr(k, j);
        }
        const Complex pair = duality_pair(xr, yr);
        CHECK(std::abs(pair - brute) < 1e-13);
        CHECK(std::abs(pair) <= norm_1_2(xr) * norm_inf_2(yr) * (1.0 + 1e-14));
    }
}

TEST_CASE("analysis map examples") {
    const auto y1 = analysis_map(HardyFunction{1.0}, build_grid(1));
    CHECK(y1(1, 0) == Complex(1.0));
    CHECK(norm_inf_2(y1) == 1.0);

    const auto grid = build_grid(400);
    const auto yc = analysis_map(HardyFunction{1.0}, grid);
    const auto norms = block_norms(yc.flat(), yc.rings());
    for (std::size_t k = 1; k <= 400; ++k) {
        CHECK(norms[k - 1] == doctest::Approx(std::sqrt(2.0 - 1.0 / static_cast<double>(k))).epsilon(1e-13));
    }
    CHECK(std::sqrt(2.0) - norm_inf_2(yc) < 2e-3);

    const auto yz = analysis_map(HardyFunction{0.0, 1.0}, build_grid(2));
    CHECK(std::abs(yz(2, 0) - (std::sqrt(3.0) / 2.0) * 0.5) < 1e-15);
    CHECK(std::abs(yz(2, 1) - (std::sqrt(3.0) / 2.0) * -0.5) < 1e-15);
    CHECK(block_norms(yz.flat(), 2)[1] == doctest::Approx(std::sqrt(3.0 / 8.0)));
}

TEST_CASE("analysis entries equal pairing with the normalized kernel") {
    TestRandom rng(32);
    const auto grid = build_grid(12);
    const auto g = rng.polynomial(9);
    const auto y = analysis_map(g, grid);
    for (const auto& nd : grid.nodes()) {
        const Complex pairing = h2_inner(normalized_kernel_function(nd.point, 9), g);
        CHECK(std::abs(y(nd.index.k, nd.index.j) - pairing) < 1e-13);
    }
}

TEST_CASE("property: block-norm identity") {
    TestRandom rng(33);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = rng.polynomial_up_to(50);
        for (std::size_t k = 2; k <= 90; k += 11) {
            double acc = 0.0;
            for (Complex v : analysis_block(g, k)) acc += std::norm(v);
            const double block = std::sqrt(acc);
            const double viaNorm =
                std::sqrt(2.0 - 1.0 / static_cast<double>(k)) * discrete_norm(dilate(g, ring_radius(k)), k);
            CHECK(std::abs(block - viaNorm) <= 1e-10 * (1.0 + viaNorm));
            const double direct = oracle::analysis_block_norm_direct(g, k);
            CHECK(std::abs(block - direct) <= 1e-10 * (1.0 + direct));
        }
    }
}

TEST_CASE("synthesis partial sums") {
    const auto grid = build_grid(3);
    MixedCoefficients hot(3);
    hot(1, 0) = 1.0;
    const auto one = synthesis_partial_sum(hot, grid, 5);
    CHECK(one.coeff(0) == Complex(1.0));
    CHECK(one.degree() == 0);

    CHECK(synthesis_partial_sum(MixedCoefficients(3), grid, 5).is_zero());

    MixedCoefficients two(3);
    two(2, 0) = 2.0;
    const auto s = synthesis_partial_sum(two, grid, 2);
    const double w = std::sqrt(3.0) / 2.0;
    CHECK(std::abs(s.coeff(0) - 2.0 * w) < 1e-15);
    CHECK(std::abs(s.coeff(1) - 2.0 * w * 0.5) < 1e-15);
    CHECK(std::abs(s.coeff(2) - 2.0 * w * 0.25) < 1e-15);

    CHECK_THROWS_AS(synthesis_partial_sum(MixedCoefficients(4), grid, 2), DomainError);
}

TEST_CASE("property: analysis is the adjoint of synthesis") {
    // <x, T g> = <S x, g>; g has degree <= M so truncation is exact on the right.
    TestRandom rng(77);
    const auto grid = build_grid(10);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = rng.mixed_coefficients(10);
        const auto g = rng.polynomial_up_to(12);
        const Complex lhs = duality_pair(x, analysis_map(g, grid));
        const Complex rhs = h2_inner(synthesis_partial_sum(x, grid, 12), g);
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("property: synthesis bound and ring-wise Cauchy estimate") {
    TestRandom rng(34);
    const std::size_t rings = 24;
    const auto grid = build_grid(rings);
    for (int trial = 0; trial < 60; ++trial) {
        auto x = rng.mixed_coefficients(rings);
        const std::size_t m = 8 + rng.index(200);
        const auto full = synthesis_partial_sum(x, grid, m);
        CHECK(h2_norm(full) <= kAnalysisUpper * norm_1_2(x) + synthesis_truncation_tail(x, m));

        const auto norms = block_norms(x.flat(), rings);
        const std::size_t k1 = 1 + rng.index(rings - 1);
        const std::size_t k2 = k1 + 1 + rng.index(rings - k1);
        const auto d = synthesis_prefix(x, grid, m, k2) - synthesis_prefix(x, grid, m, k1);
        double budget = 0.0;
        for (std::size_t k = k1 + 1; k <= k2; ++k) budget += norms[k - 1];
        CHECK(h2_norm(d) <= 1.5208869 * budget);
    }
}

TEST_CASE("frame bounds") {
    const auto grid = build_grid(256);
    const HardyFunction one{1.0};
    const auto c = frame_bounds_empirical(std::span<const HardyFunction>(&one, 1), grid);
    CHECK(c.lower == doctest::Approx(std::sqrt(2.0 - 1.0 / 256.0)));
    CHECK(c.upper == c.lower);

    std::vector<HardyFunction> monomials;
    for (std::size_t m = 0; m <= 8; ++m) monomials.push_back(HardyFunction::monomial(m));
    const auto mono = frame_bounds_empirical(monomials, grid);
    CHECK(mono.lower >= std::pow(1.0 - 1.0 / 256.0, 8.0));
    CHECK(mono.upper <= 1.5208869 + 1e-9);
    // monomial closed form at ring k > m: sqrt(2 - 1/k) r_k^m
    for (std::size_t m = 0; m <= 8; ++m) {
        double best = (m == 0) ? 1.0 : 0.0;
        for (std::size_t k = 2; k <= 256; ++k) {
            const double kd = static_cast<double>(k);
            const double v = std::sqrt(2.0 - 1.0 / kd) * std::pow(1.0 - 1.0 / kd, static_cast<double>(m));
            best = std::max(best, v);
        }
        CHECK(frame_ratio(monomials[m], grid) == doctest::Approx(best).epsilon(1e-12));
    }

    TestRandom rng(35);
    std::vector<HardyFunction> samples;
    for (int i = 0; i < 100; ++i) samples.push_back(rng.polynomial(16));
    const auto est = frame_bounds_empirical(samples, grid);
    CHECK(est.sample_count == 100);
    CHECK(est.rings == 256);
    CHECK(est.lower >= 0.93);
    CHECK(est.lower <= est.upper);
    CHECK(est.upper <= 1.5208869 + 1e-9);

    const HardyFunction zero{0.0};
    CHECK_THROWS_AS(frame_bounds_empirical(std::span<const HardyFunction>(&zero, 1), grid), DomainError);
    const auto high = HardyFunction::monomial(300);
    CHECK_THROWS_AS(frame_bounds_empirical(std::span<const HardyFunction>(&high, 1), grid), DomainError);
}

TEST_CASE("frame sandwich for K >= 100 deg") {
    TestRandom rng(36);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t d = 1 + rng.index(3);
        const auto g = rng.polynomial(d);
        const double ratio = frame_ratio(g, build_grid(100 * d));
        CHECK(ratio >= 0.99);
        CHECK(ratio <= 1.5209);
    }
}

TEST_CASE("DS partial sums for the constant") {
    const auto s = ds_frame_divergence(HardyFunction{1.0}, 1000);
    for (std::size_t k = 1; k <= 1000; ++k) {
        REQUIRE(std::abs(s[k - 1] - (2.0 * static_cast<double>(k) - oracle::harmonic(k))) <= 1e-9);
    }
    CHECK(s[9] == doctest::Approx(17.071031746031746).epsilon(1e-12));
    CHECK_THROWS_AS(ds_frame_divergence(HardyFunction{0.0}, 10), DomainError);
}

TEST_CASE("DS partial sums grow linearly for monomials") {
    for (std::size_t m : {1u, 3u, 6u}) {
        const std::size_t k = 10 * m + 10;
        const auto s = ds_frame_divergence(HardyFunction::monomial(m), 2 * k);
        CHECK(s[2 * k - 1] - s[k - 1] >= 0.5 * static_cast<double>(k));
        // brute force: ring increment (2 - 1/k) r^{2m}
        double brute = 0.0;
        for (std::size_t ring = 1; ring <= 2 * k; ++ring) {
            const double kd = static_cast<double>(ring);
            brute += (ring == 1) ? 0.0 : (2.0 - 1.0 / kd) * std::pow(1.0 - 1.0 / kd, 2.0 * static_cast<double>(m));
        }
        CHECK(s.back() == doctest::Approx(brute).epsilon(1e-12));
    }
}

}  // TEST_SUITE
