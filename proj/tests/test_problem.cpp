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
#include <stdexcept>
#include <string>

#include "helpers.hpp"
#include "plfrac/errors.hpp"
#include "plfrac/problem.hpp"
#include "plfrac/special.hpp"

using namespace plfrac;
using plfrac_tests::corrected_spec;
using plfrac_tests::example41_spec;

TEST_CASE("ProblemSpec validation rejects out-of-range parameters") {
    auto base = example41_spec();
    CHECK_NOTHROW(base.validate());

    auto bad = base;
    bad.alpha = 2.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = base;
    bad.alpha = 3.2;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = base;
    bad.beta = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = base;
    bad.gamma_ord = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = base;
    bad.gamma_ord = 1.5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = base;
    bad.p = 1.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = base;
    bad.etas = {0.5};
    CHECK_THROWS_AS(bad.validate(), ConfigError); // length mismatch with xis
    bad = base;
    bad.etas.clear();
    bad.xis.clear();
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = base;
    bad.xis = {2.0 / 3.0, 1.0 / 3.0};
    CHECK_THROWS_AS(bad.validate(), ConfigError); // not increasing
    bad = base;
    bad.etas[0] = -0.1;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("eval_a and eval_f evaluate the configured families") {
    const auto spec = example41_spec(); // a = e^{-t}, f = reference nonlinearity
    CHECK(spec.eval_a(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(spec.eval_a(2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    // f(t,u,v) = (2u/w + v/w + 1)/9 with w = 1 + t^{3/2}
    const double w = 1.0 + std::pow(2.0, 1.5);
    CHECK(spec.eval_f(2.0, 3.0, 1.5) ==
          doctest::Approx((2.0 * 3.0 / w + 1.5 / w + 1.0) / 9.0).epsilon(1e-14));
}

TEST_CASE("eval_f rejects negative values and names the arguments") {
    auto spec = example41_spec();
    spec.f = NonlinearityDesc::affine(ScalarDesc::constant(0.0),
                                      ScalarDesc::weighted(1.0),
                                      ScalarDesc::weighted(0.0));
    try {
        spec.eval_f(1.0, -5.0, 0.0);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("f(") != std::string::npos);
    }
}

TEST_CASE("check_H1 on the reference multipoint data") {
    const auto r = check_H1(example41_spec());
    CHECK(r.sum == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(r.threshold == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.ok);
}

TEST_CASE("check_H1 detects violation") {
    auto spec = example41_spec();
    spec.etas = {2.0};
    spec.xis = {1.0};
    const auto r = check_H1(spec);
    CHECK(r.sum == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_FALSE(r.ok);
}

TEST_CASE("check_H1 boundary case sum == threshold is a violation") {
    auto spec = example41_spec();
    // alpha + beta - 2 = 1, so the sum reduces to eta * xi. Taking eta equal
    // to the library's own Gamma(2) puts the sum exactly on the threshold
    // (Gamma(2) evaluates one ulp above 1, so a literal 1.0 would sit below).
    spec.etas = {gamma_fn(2.0)};
    spec.xis = {1.0};
    const auto r = check_H1(spec);
    CHECK(r.sum == r.threshold);
    CHECK_FALSE(r.ok);
}

TEST_CASE("check_H3 on the integrable instance") {
    const auto spec = corrected_spec(); // gamma=1/5, q=3, a = 1{t<=1}
    const auto grid = Grid::graded(20.0, 256, 2.0);
    const auto r = check_H3(spec, grid);
    // frozen reference for this exact grid
    CHECK(r.J == doctest::Approx(0.99386047714256076).epsilon(1e-9));
    CHECK_FALSE(r.tail_flag);
    CHECK_FALSE(r.a_identically_zero);
}

TEST_CASE("check_H3 is stable under refinement for smooth data") {
    auto spec = corrected_spec();
    spec.a = ScalarDesc::exponential(1.0, 2.0); // e^{-2t}
    const auto coarse = check_H3(spec, Grid::graded(20.0, 256, 2.0));
    const auto fine = check_H3(spec, Grid::graded(20.0, 1024, 2.0));
    CHECK(coarse.J == doctest::Approx(0.23091124337062172).epsilon(1e-9));
    CHECK(std::abs(coarse.J - fine.J) / fine.J <= 1e-3);
    CHECK_FALSE(coarse.tail_flag);
}

TEST_CASE("check_H3 flags a divergent truncation") {
    auto spec = example41_spec(); // gamma = 1, a = e^{-t}: integrand -> 1
    spec.attested_J.reset();
    const auto grid = Grid::graded(20.0, 256, 2.0);
    const auto r = check_H3(spec, grid);
    CHECK(r.J == doctest::Approx(19.001729291137941).epsilon(1e-9));
    CHECK(r.tail_flag);
}

TEST_CASE("check_H3 reports an identically zero a") {
    auto spec = corrected_spec();
    spec.a = ScalarDesc::constant(0.0);
    const auto r = check_H3(spec, Grid::graded(20.0, 256, 2.0));
    CHECK(r.J == 0.0);
    CHECK(r.a_identically_zero);
    CHECK_FALSE(r.tail_flag);
}

TEST_CASE("estimate_B_delta uses the attested closed form when present") {
    const auto spec = example41_spec();
    CHECK(estimate_B_delta(spec, 0.45) ==
          doctest::Approx((3.0 * 0.45 + 1.0) / 9.0).epsilon(1e-15));
}

TEST_CASE("lattice estimate attains the corner sup of the reference f") {
    auto spec = example41_spec();
    spec.f_weighted_bound = BDeltaDesc{}; // drop the attestation
    // For f = (2u/w + v/w + 1)/9 with weighted arguments the w factors cancel,
    // so the sup over the box is (3 delta + 1)/9, attained at u = v = delta.
    const double est = estimate_B_delta(spec, 0.45);
    CHECK(est == doctest::Approx((3.0 * 0.45 + 1.0) / 9.0).epsilon(1e-12));
}

TEST_CASE("lattice estimate of a constant f is that constant") {
    auto spec = example41_spec();
    spec.f = NonlinearityDesc::constant(0.7);
    spec.f_weighted_bound = BDeltaDesc{};
    CHECK(estimate_B_delta(spec, 0.3) == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("estimate_B_delta is monotone in delta and validates inputs") {
    auto spec = example41_spec();
    spec.f_weighted_bound = BDeltaDesc{};
    CHECK(estimate_B_delta(spec, 0.3) <= estimate_B_delta(spec, 0.45));
    CHECK_THROWS_AS(estimate_B_delta(spec, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(estimate_B_delta(spec, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(estimate_B_delta(spec, 0.3, 50.0, 50), std::invalid_argument);
    CHECK_THROWS_AS(estimate_B_delta(spec, 0.3, -1.0), std::invalid_argument);
}

TEST_CASE("compute_M applies L (alpha-1) phi_q(B) J") {
    const auto spec = example41_spec();
    const auto kernel = kernel_for(spec);

    SUBCASE("frozen value, p = 2") {
        CHECK(compute_M(kernel, spec, 0.25495, 1.0) ==
              doctest::Approx(0.4315204029765014).epsilon(1e-13));
    }
    SUBCASE("threshold delta is the fixed point of delta -> M(B(delta))") {
        // delta* = 1/(3(sqrt(pi)-1)) satisfies M(B(delta*)) = delta* for the
        // attested bound B(delta) = (3 delta + 1)/9.
        const double delta_star = 0.43152523991249485;
        const double b_star = estimate_B_delta(spec, delta_star);
        CHECK(b_star == doctest::Approx(0.2549528577486094).epsilon(1e-13));
        CHECK(compute_M(kernel, spec, b_star, 1.0) ==
              doctest::Approx(delta_star).epsilon(1e-13));
    }
    SUBCASE("zero bound gives zero M") {
        CHECK(compute_M(kernel, spec, 0.0, 1.0) == 0.0);
    }
    SUBCASE("monotone in B and J") {
        CHECK(compute_M(kernel, spec, 0.2, 1.0) < compute_M(kernel, spec, 0.3, 1.0));
        CHECK(compute_M(kernel, spec, 0.2, 1.0) < compute_M(kernel, spec, 0.2, 2.0));
    }
    SUBCASE("p = 3/2 uses phi_q(B) = B^2") {
        auto s2 = spec;
        s2.p = 1.5;
        CHECK(compute_M(kernel, s2, 0.5, 2.0) ==
              doctest::Approx(kernel.L * 1.5 * 0.25 * 2.0).epsilon(1e-13));
    }
}

TEST_CASE("existence certificate for the attested reference instance") {
    const auto spec = example41_spec(); // attested J = 1, attested B
    const auto grid = Grid::graded(20.0, 256, 2.0);

    SUBCASE("delta = 0.44 is certified") {
        const auto c = existence_certificate(spec, 0.44, grid);
        CHECK(c.J == 1.0);
        CHECK(c.j_attested);
        CHECK(c.b_delta_attested);
        CHECK(c.B_delta == doctest::Approx((3.0 * 0.44 + 1.0) / 9.0).epsilon(1e-14));
        CHECK(c.M == doctest::Approx(0.43630661127693153).epsilon(1e-13));
        CHECK(c.delta == 0.44);
        CHECK(c.satisfied);
        // attestation clears the (otherwise raised) truncation flag
        CHECK_FALSE(c.tail_flag);
    }
    SUBCASE("delta = 0.1 fails the inequality") {
        const auto c = existence_certificate(spec, 0.1, grid);
        CHECK(c.M == doctest::Approx(0.24448215287069439).epsilon(1e-13));
        CHECK_FALSE(c.satisfied);
    }
    SUBCASE("delta exactly at threshold certifies (non-strict inequality)") {
        // delta* = M(delta*) up to rounding; nudge up by 1e-12 to be safe
        const auto c = existence_certificate(spec, 0.43152523991249485 + 1e-12, grid);
        CHECK(c.satisfied);
    }
}

TEST_CASE("existence certificate computes J when not attested") {
    const auto spec = corrected_spec();
    const auto grid = Grid::graded(20.0, 256, 2.0);
    const auto c = existence_certificate(spec, 0.5, grid);
    CHECK(c.J == doctest::Approx(0.99386047714256076).epsilon(1e-9));
    CHECK_FALSE(c.j_attested);
    CHECK(c.b_delta_attested);
    CHECK(c.B_delta == doctest::Approx((3.0 * 0.5 + 1.0) / 9.0).epsilon(1e-14));
    CHECK(c.M == doctest::Approx(0.12979762238510087).epsilon(1e-8));
    CHECK(c.satisfied);
    CHECK_FALSE(c.tail_flag);
}

TEST_CASE("certificate carries the divergence flag through") {
    auto spec = example41_spec();
    spec.attested_J.reset(); // now the gamma = 1 truncation is visibly divergent
    const auto grid = Grid::graded(20.0, 256, 2.0);
    const auto c = existence_certificate(spec, 0.44, grid);
    CHECK(c.tail_flag);
    CHECK_FALSE(c.satisfied); // J ~ 19 makes M huge
}

TEST_CASE("certificate rejects bad delta and failed (H1)") {
    const auto grid = Grid::graded(20.0, 256, 2.0);
    CHECK_THROWS_AS(existence_certificate(example41_spec(), 0.0, grid),
                    std::invalid_argument);
    auto spec = example41_spec();
    spec.etas = {3.0};
    spec.xis = {1.0};
    try {
        existence_certificate(spec, 0.44, grid);
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.sum == doctest::Approx(3.0).epsilon(1e-14));
    }
}

TEST_CASE("kernel_for matches make_kernel on the spec data") {
    const auto k = kernel_for(example41_spec());
    CHECK(k.delta == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(k.L == doctest::Approx(1.1283791670955126).epsilon(1e-13));
}
