/*
 * Copyright 2026 The plfrac Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "plfrac/errors.hpp"
#include "plfrac/green.hpp"
#include "plfrac/grid.hpp"

using plfrac::eval_G;
using plfrac::eval_Gt;
using plfrac::GreenKernel;
using plfrac::green_solve_linear;
using plfrac::Grid;
using plfrac::HypothesisError;
using plfrac::kernel_quadrature_matrix;
using plfrac::make_kernel;
using plfrac::SampledFunction;

namespace {

GreenKernel reference_kernel() {
    // alpha = 5/2, beta = 1/2, eta = [1/3, 1/3], xi = [1/3, 2/3]
    return make_kernel(2.5, 0.5, {1.0 / 3.0, 1.0 / 3.0}, {1.0 / 3.0, 2.0 / 3.0});
}

} // namespace

TEST_CASE("reference kernel constants") {
    const auto k = reference_kernel();
    // sum eta_i xi_i^{alpha+beta-2} = (1/3)(1/3) + (1/3)(2/3) = 1/3,
    // Delta = Gamma(2) - 1/3 = 2/3, L = Gamma(2)/(Gamma(5/2) Delta) = 2/sqrt(pi)
    CHECK(k.delta == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(k.L == doctest::Approx(1.1283791670955126).epsilon(1e-13));
    CHECK(k.gamma_ab == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(k.gamma_a == doctest::Approx(1.3293403881791370).epsilon(1e-13));
    CHECK(k.gamma_a1 == doctest::Approx(0.88622692545275801).epsilon(1e-13));
}

TEST_CASE("kernel point values against high-precision references") {
    const auto k = reference_kernel();
    // Values computed independently with 30-digit arithmetic.
    CHECK(eval_G(k, 1.0, 0.5) == doctest::Approx(0.79972991532258453).epsilon(1e-13));
    CHECK(eval_Gt(k, 1.0, 0.5) == doctest::Approx(0.80065259258244412).epsilon(1e-13));
    CHECK(eval_G(k, 2.0, 0.1) == doctest::Approx(0.37033447467732121).epsilon(1e-13));
    CHECK(eval_Gt(k, 2.0, 0.1) == doctest::Approx(0.19998268875755339).epsilon(1e-13));
    // s past every xi and past t: G(t,s) = L t^{alpha-1} / (1 + ...) branch
    CHECK(eval_G(k, 1.0, 1.5) == doctest::Approx(k.L).epsilon(1e-13));
    CHECK(eval_Gt(k, 1.0, 1.5) == doctest::Approx((k.alpha - 1.0) * k.L).epsilon(1e-13));
    // s > t branch with s below the xis
    CHECK(eval_G(k, 0.25, 0.5) == doctest::Approx(0.13321142944877579).epsilon(1e-13));
}

TEST_CASE("kernel vanishes on the boundary lines") {
    const auto k = reference_kernel();
    for (double s : {0.0, 0.2, 1.0, 7.0}) {
        CHECK(eval_G(k, 0.0, s) == 0.0);
        CHECK(eval_Gt(k, 0.0, s) == 0.0);
    }
}

TEST_CASE("kernel is continuous across s = t") {
    const auto k = reference_kernel();
    for (double t : {0.5, 1.0, 3.0}) {
        const double mid = eval_G(k, t, t);
        CHECK(eval_G(k, t, t - 1e-9) == doctest::Approx(mid).epsilon(1e-6));
        CHECK(eval_G(k, t, t + 1e-9) == doctest::Approx(mid).epsilon(1e-6));
    }
}

TEST_CASE("G_t is the t-derivative of G (finite-difference probe)") {
    const auto k = reference_kernel();
    const double h = 1e-5;
    for (double t : {0.7, 1.7, 4.0}) {
        for (double s : {0.1, 0.5, 2.5}) {
            const double fd = (eval_G(k, t + h, s) - eval_G(k, t - h, s)) / (2.0 * h);
            CAPTURE(t);
            CAPTURE(s);
            CHECK(eval_Gt(k, t, s) == doctest::Approx(fd).epsilon(1e-5));
        }
    }
}

TEST_CASE("kernel bounds 0 <= G <= L(1+t^{alpha-1}) on a random sweep") {
    const auto k = reference_kernel();
    std::mt19937_64 rng(20260814);
    std::uniform_real_distribution<double> td(0.0, 20.0), sd(0.0, 40.0);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        const double t = td(rng), s = sd(rng);
        const double w = 1.0 + std::pow(t, k.alpha - 1.0);
        const double g = eval_G(k, t, s) / w;
        const double gt = eval_Gt(k, t, s) / w;
        if (!(g >= 0.0 && g <= k.L * (1.0 + 1e-12))) ++violations;
        if (!(gt >= 0.0 && gt <= (k.alpha - 1.0) * k.L * (1.0 + 1e-12))) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("make_kernel validation") {
    SUBCASE("alpha range") {
        CHECK_THROWS_AS(make_kernel(2.0, 0.5, {0.1}, {1.0}), std::invalid_argument);
        CHECK_THROWS_AS(make_kernel(3.5, 0.5, {0.1}, {1.0}), std::invalid_argument);
    }
    SUBCASE("beta positive") {
        CHECK_THROWS_AS(make_kernel(2.5, 0.0, {0.1}, {1.0}), std::invalid_argument);
    }
    SUBCASE("eta/xi lengths equal and nonempty") {
        CHECK_THROWS_AS(make_kernel(2.5, 0.5, {0.1, 0.2}, {1.0}), std::invalid_argument);
        CHECK_THROWS_AS(make_kernel(2.5, 0.5, {}, {}), std::invalid_argument);
    }
    SUBCASE("xis strictly increasing and positive") {
        CHECK_THROWS_AS(make_kernel(2.5, 0.5, {0.1, 0.1}, {1.0, 1.0}), std::invalid_argument);
        CHECK_THROWS_AS(make_kernel(2.5, 0.5, {0.1}, {0.0}), std::invalid_argument);
    }
    SUBCASE("etas positive") {
        CHECK_THROWS_AS(make_kernel(2.5, 0.5, {-0.1}, {1.0}), std::invalid_argument);
    }
    SUBCASE("Delta <= 0 raises HypothesisError carrying the offending sum") {
        // alpha+beta-2 = 1: sum eta_i xi_i = 3 >= Gamma(2) = 1
        try {
            make_kernel(2.5, 0.5, {3.0}, {1.0});
            FAIL("expected HypothesisError");
        } catch (const HypothesisError& e) {
            CHECK(e.sum == doctest::Approx(3.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("quadrature matrix composes weights with kernel samples") {
    const auto k = reference_kernel();
    const auto grid = Grid::graded(4.0, 32, 2.0);
    const auto Gw = kernel_quadrature_matrix(k, *grid, false);
    REQUIRE(Gw.rows == grid->node_count());
    REQUIRE(Gw.cols == grid->node_count());
    // row 0 is t = 0, where the kernel vanishes identically
    for (std::size_t j = 0; j < Gw.cols; ++j) CHECK(Gw.at(0, j) == 0.0);
    // spot-check an interior entry
    const std::size_t i = 20, j = 7;
    CHECK(Gw.at(i, j) ==
          doctest::Approx(grid->weights()[j] * eval_G(k, grid->nodes()[i], grid->nodes()[j]))
              .epsilon(1e-14));
    const auto Gtw = kernel_quadrature_matrix(k, *grid, true);
    CHECK(Gtw.at(i, j) ==
          doctest::Approx(grid->weights()[j] * eval_Gt(k, grid->nodes()[i], grid->nodes()[j]))
              .epsilon(1e-14));
}

TEST_CASE("green_solve_linear on zero data returns zero") {
    const auto k = reference_kernel();
    const auto grid = Grid::graded(20.0, 64, 2.0);
    const auto h = SampledFunction::zeros(grid);
    const auto r = green_solve_linear(k, h);
    for (double v : r.u.values) CHECK(v == 0.0);
    for (double v : r.uprime.values) CHECK(v == 0.0);
    CHECK(r.tail_estimate == 0.0);
}

TEST_CASE("green_solve_linear is linear in the data") {
    const auto k = reference_kernel();
    const auto grid = Grid::graded(20.0, 64, 2.0);
    const auto h1 = SampledFunction::from(grid, [](double s) { return std::exp(-s); });
    const auto h2 = SampledFunction::from(grid, [](double s) { return std::exp(-2.0 * s) * (1.0 + s); });
    auto combo = SampledFunction::zeros(grid);
    for (std::size_t j = 0; j < combo.values.size(); ++j) {
        combo.values[j] = 2.0 * h1.values[j] + 0.5 * h2.values[j];
    }
    const auto r1 = green_solve_linear(k, h1);
    const auto r2 = green_solve_linear(k, h2);
    const auto rc = green_solve_linear(k, combo);
    for (std::size_t j = 0; j < combo.values.size(); ++j) {
        const double expect = 2.0 * r1.u.values[j] + 0.5 * r2.u.values[j];
        CHECK(rc.u.values[j] == doctest::Approx(expect).epsilon(1e-12));
        const double expect_p = 2.0 * r1.uprime.values[j] + 0.5 * r2.uprime.values[j];
        CHECK(rc.uprime.values[j] == doctest::Approx(expect_p).epsilon(1e-12));
    }
}

TEST_CASE("green solve output starts at zero and is nonnegative for h >= 0") {
    const auto k = reference_kernel();
    const auto grid = Grid::graded(20.0, 128, 2.0);
    const auto h = SampledFunction::from(grid, [](double s) { return std::exp(-s); });
    const auto r = green_solve_linear(k, h);
    CHECK(r.u.values[0] == 0.0);
    CHECK(r.uprime.values[0] == 0.0);
    for (double v : r.u.values) CHECK(v >= 0.0);
    for (double v : r.uprime.values) CHECK(v >= 0.0);
    CHECK(r.tail_estimate == doctest::Approx(20.0 * std::exp(-20.0)).epsilon(1e-12));
}

TEST_CASE("non-decaying data is rejected as a divergent tail") {
    const auto k = reference_kernel();
    const auto grid = Grid::graded(20.0, 64, 2.0);
    const auto h = SampledFunction::from(grid, [](double) { return 1.0; });
    CHECK_THROWS_AS(green_solve_linear(k, h), plfrac::DivergenceError);
}
