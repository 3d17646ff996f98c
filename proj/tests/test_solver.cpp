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

#include "helpers.hpp"
#include "plfrac/errors.hpp"
#include "plfrac/solver.hpp"

using namespace plfrac;
using plfrac_tests::corrected_spec;
using plfrac_tests::example41_spec;

namespace {

// Small affine instance with weighted coefficients, comfortably contractive.
ProblemSpec affine_spec() {
    ProblemSpec spec;
    spec.alpha = 2.5;
    spec.beta = 0.5;
    spec.gamma_ord = 0.5;
    spec.p = 2.0;
    spec.etas = {1.0 / 3.0, 1.0 / 3.0};
    spec.xis = {1.0 / 3.0, 2.0 / 3.0};
    spec.a = ScalarDesc::exponential(1.0, 1.2);
    spec.f = NonlinearityDesc::affine(ScalarDesc::constant(0.3),
                                      ScalarDesc::weighted(0.06),
                                      ScalarDesc::weighted(0.04));
    return spec;
}

SolverConfig config_on(const GridPtr& grid) {
    SolverConfig cfg;
    cfg.grid = grid;
    return cfg;
}

} // namespace

TEST_CASE("WeightedFunction norm and validation") {
    const auto grid = Grid::graded(4.0, 16, 1.0);
    auto w = WeightedFunction::zeros(grid);
    CHECK(w.norm(2.5) == 0.0);
    w.u[4] = 3.0;      // t = 1, weight 2 -> 1.5
    w.uprime[4] = 5.0; // t = 1, weight 2 -> 2.5 (the max)
    CHECK(w.norm(2.5) == doctest::Approx(2.5).epsilon(1e-15));

    w.uprime[4] = std::nan("");
    CHECK_THROWS_AS(w.validate(), std::invalid_argument);
    w.uprime[4] = 0.0;
    w.u.pop_back();
    CHECK_THROWS_AS(w.validate(), std::invalid_argument);
}

TEST_CASE("SolverConfig validation") {
    const auto grid = Grid::graded(20.0, 64, 2.0);
    auto cfg = config_on(grid);
    CHECK_NOTHROW(cfg.validate());
    cfg.omega = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.omega = 1.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = config_on(grid);
    cfg.tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = config_on(grid);
    cfg.max_iter = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = config_on(nullptr);
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("zero forcing yields the zero solution in one step") {
    auto spec = corrected_spec();
    spec.f = NonlinearityDesc::constant(0.0);
    const auto kernel = kernel_for(spec);
    const auto sol = picard_solve(spec, kernel, config_on(Grid::graded(20.0, 64, 2.0)));
    CHECK(sol.converged);
    CHECK(sol.iterations == 1);
    CHECK(sol.residual == 0.0);
    for (double v : sol.w.u) CHECK(v == 0.0);
    for (double v : sol.w.uprime) CHECK(v == 0.0);
}

TEST_CASE("identically zero a yields the zero solution") {
    auto spec = corrected_spec();
    spec.a = ScalarDesc::constant(0.0);
    const auto kernel = kernel_for(spec);
    const auto sol = picard_solve(spec, kernel, config_on(Grid::graded(20.0, 64, 2.0)));
    CHECK(sol.converged);
    for (double v : sol.w.u) CHECK(v == 0.0);
}

TEST_CASE("apply_T output satisfies the left boundary exactly") {
    const auto spec = corrected_spec();
    const auto kernel = kernel_for(spec);
    const auto grid = Grid::graded(20.0, 64, 2.0);
    const auto tw = apply_T(spec, kernel, WeightedFunction::zeros(grid));
    CHECK(tw.u[0] == 0.0);
    CHECK(tw.uprime[0] == 0.0);
    // f(., 0, 0) = 1/9 > 0 on the support of a, so T(0) is nonnegative and
    // nonzero somewhere
    double peak = 0.0;
    for (std::size_t k = 0; k < tw.u.size(); ++k) {
        CHECK(tw.u[k] >= 0.0);
        CHECK(tw.uprime[k] >= 0.0);
        peak = std::max(peak, tw.u[k]);
    }
    CHECK(peak > 0.0);
}

TEST_CASE("operator rejects a mismatched grid") {
    const auto spec = corrected_spec();
    const auto kernel = kernel_for(spec);
    const OperatorT op(spec, kernel, Grid::graded(20.0, 64, 2.0));
    const auto other = WeightedFunction::zeros(Grid::graded(20.0, 32, 2.0));
    CHECK_THROWS_AS(op.apply(other), std::invalid_argument);
}

TEST_CASE("apply_T agrees with a 10x-resolution reference") {
    // Smooth, integrable forcing-only instance: f = 1, a = e^{-2t},
    // gamma = 1/5, p = 3/2 (so the inner function decays like s^{-1.6}).
    // Smooth data isolates quadrature consistency; a jump in a would add a
    // node-placement artifact that moves with N, and a non-integrable inner
    // function (e.g. gamma = 1/2 with p = 2) converges only at the 1e-2
    // level no matter the grid.
    ProblemSpec spec;
    spec.etas = {1.0 / 3.0, 1.0 / 3.0};
    spec.xis = {1.0 / 3.0, 2.0 / 3.0};
    spec.gamma_ord = 0.2;
    spec.p = 1.5;
    spec.a = ScalarDesc::exponential(1.0, 2.0);
    spec.f = NonlinearityDesc::constant(1.0);
    const auto kernel = kernel_for(spec);

    const auto coarse_grid = Grid::graded(20.0, 256, 2.0);
    const auto fine_grid = Grid::graded(20.0, 2560, 2.0);
    const auto coarse = apply_T(spec, kernel, WeightedFunction::zeros(coarse_grid));
    const auto fine = apply_T(spec, kernel, WeightedFunction::zeros(fine_grid));

    // graded nodes satisfy t_k(N) = t_{10k}(10N), so compare at shared nodes;
    // measured diff at this resolution is 1.8e-4 (rate ~ N^{-1.5})
    double worst = 0.0;
    for (std::size_t k = 0; k < coarse_grid->node_count(); ++k) {
        const double t = coarse_grid->nodes()[k];
        const double wt = 1.0 + std::pow(t, spec.alpha - 1.0);
        worst = std::max(worst, std::abs(coarse.u[k] - fine.u[10 * k]) / wt);
        worst = std::max(worst, std::abs(coarse.uprime[k] - fine.uprime[10 * k]) / wt);
    }
    CHECK(worst <= 5e-4);
}

TEST_CASE("Picard iteration converges on the integrable instance") {
    const auto spec = corrected_spec();
    const auto kernel = kernel_for(spec);
    const auto grid = Grid::graded(20.0, 128, 2.0);
    const auto sol = picard_solve(spec, kernel, config_on(grid));

    CHECK(sol.converged);
    CHECK(sol.iterations <= 30);
    CHECK(sol.final_step_norm <= 1e-10);
    CHECK(sol.residual <= 1e-10);

    // certificate guarantee: the certified ball delta = 0.5 contains the
    // solution in the weighted metric, componentwise nonnegative
    const auto cert = existence_certificate(spec, 0.5, grid);
    REQUIRE(cert.satisfied);
    const auto& t = grid->nodes();
    for (std::size_t k = 0; k < t.size(); ++k) {
        const double wt = 1.0 + std::pow(t[k], spec.alpha - 1.0);
        CHECK(sol.w.u[k] >= 0.0);
        CHECK(sol.w.uprime[k] >= 0.0);
        CHECK(sol.w.u[k] / wt <= 0.5 + 1e-12);
        CHECK(sol.w.uprime[k] / wt <= 0.5 + 1e-12);
    }
}

TEST_CASE("T maps the certified ball into the M-ball") {
    const auto spec = corrected_spec();
    const auto kernel = kernel_for(spec);
    const auto grid = Grid::graded(20.0, 128, 2.0);
    const auto cert = existence_certificate(spec, 0.5, grid);
    REQUIRE(cert.satisfied);

    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto& t = grid->nodes();
    for (int trial = 0; trial < 5; ++trial) {
        auto w = WeightedFunction::zeros(grid);
        for (std::size_t k = 0; k < t.size(); ++k) {
            const double wt = 1.0 + std::pow(t[k], spec.alpha - 1.0);
            w.u[k] = cert.delta * unif(rng) * wt;
            w.uprime[k] = cert.delta * unif(rng) * wt;
        }
        const auto tw = apply_T(spec, kernel, w);
        CHECK(tw.norm(spec.alpha) <= cert.M * (1.0 + 1e-9));
    }
}

TEST_CASE("Picard and the dense linear oracle agree on an affine instance") {
    const auto spec = affine_spec();
    const auto kernel = kernel_for(spec);
    const auto grid = Grid::graded(10.0, 128, 2.0);

    auto cfg = config_on(grid);
    const auto picard = picard_solve(spec, kernel, cfg);
    REQUIRE(picard.converged);

    const auto oracle = linear_oracle_solve(spec, kernel, grid);
    CHECK(oracle.converged);
    CHECK(oracle.iterations == 0);
    CHECK(oracle.residual <= 1e-8);

    const double d =
        std::max(plfrac_tests::weighted_diff(grid->nodes(), picard.w.u, oracle.w.u, spec.alpha),
                 plfrac_tests::weighted_diff(grid->nodes(), picard.w.uprime, oracle.w.uprime,
                                             spec.alpha));
    CHECK(d <= 1e-8);
}

TEST_CASE("oracle rejects p != 2") {
    const auto spec = corrected_spec(); // p = 3/2
    const auto kernel = kernel_for(spec);
    CHECK_THROWS_AS(linear_oracle_solve(spec, kernel, Grid::graded(20.0, 64, 2.0)),
                    UnsupportedError);
}

TEST_CASE("damping changes the path but not the fixed point") {
    const auto spec = affine_spec();
    const auto kernel = kernel_for(spec);
    const auto grid = Grid::graded(10.0, 64, 2.0);

    auto cfg1 = config_on(grid);
    auto cfg2 = config_on(grid);
    cfg2.omega = 0.6;
    const auto s1 = picard_solve(spec, kernel, cfg1);
    const auto s2 = picard_solve(spec, kernel, cfg2);
    REQUIRE(s1.converged);
    REQUIRE(s2.converged);
    CHECK(s2.iterations >= s1.iterations); // damping slows a contraction
    const double d = plfrac_tests::weighted_diff(grid->nodes(), s1.w.u, s2.w.u, spec.alpha);
    CHECK(d <= 1e-8);
}

TEST_CASE("an expansive instance raises DivergenceError") {
    ProblemSpec spec;
    spec.etas = {1.0 / 3.0, 1.0 / 3.0};
    spec.xis = {1.0 / 3.0, 2.0 / 3.0};
    spec.gamma_ord = 0.5;
    spec.p = 2.0;
    spec.a = ScalarDesc::constant(1.0);
    spec.f = NonlinearityDesc::affine(ScalarDesc::constant(1.0),
                                      ScalarDesc::constant(1.0),
                                      ScalarDesc::constant(1.0));
    const auto kernel = kernel_for(spec);
    CHECK_THROWS_AS(picard_solve(spec, kernel, config_on(Grid::graded(20.0, 64, 2.0))),
                    DivergenceError);
}

TEST_CASE("exhausting max_iter reports converged = false without throwing") {
    ProblemSpec spec;
    spec.etas = {1.0 / 3.0, 1.0 / 3.0};
    spec.xis = {1.0 / 3.0, 2.0 / 3.0};
    spec.gamma_ord = 0.5;
    spec.p = 2.0;
    spec.a = ScalarDesc::constant(1.0);
    spec.f = NonlinearityDesc::affine(ScalarDesc::constant(1.0),
                                      ScalarDesc::constant(1.0),
                                      ScalarDesc::constant(1.0));
    const auto kernel = kernel_for(spec);
    auto cfg = config_on(Grid::graded(20.0, 64, 2.0));
    cfg.max_iter = 4; // stops before the divergence detector can trip
    const auto sol = picard_solve(spec, kernel, cfg);
    CHECK_FALSE(sol.converged);
    CHECK(sol.iterations == 4);
    CHECK(sol.final_step_norm > 0.0);
}

TEST_CASE("picard_solve surfaces an (H1) violation") {
    auto spec = affine_spec();
    spec.etas = {3.0};
    spec.xis = {1.0};
    // bypass kernel_for (which would throw first) by building a valid kernel,
    // then corrupting the spec the solver sees
    const auto kernel = kernel_for(affine_spec());
    CHECK_THROWS_AS(picard_solve(spec, kernel, config_on(Grid::graded(20.0, 64, 2.0))),
                    HypothesisError);
}

TEST_CASE("residual report on a converged solution") {
    const auto spec = corrected_spec();
    const auto kernel = kernel_for(spec);
    const auto grid = Grid::graded(20.0, 256, 2.0);
    const auto sol = picard_solve(spec, kernel, config_on(grid));
    REQUIRE(sol.converged);

    const auto rep = residual_report(spec, kernel, sol.w);
    CHECK(rep.fixed_point_residual <= 1e-10);
    CHECK(rep.bc_u0 == 0.0);
    CHECK(rep.bc_up0 == 0.0);
    CHECK(rep.multipoint_gap <= 1e-3);
    CHECK(std::isfinite(rep.dalpha0_gap)); // report-only diagnostic
}
