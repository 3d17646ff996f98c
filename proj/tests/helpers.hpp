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
#ifndef PLFRAC_TESTS_HELPERS_HPP
#define PLFRAC_TESTS_HELPERS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "plfrac/problem.hpp"

namespace plfrac_tests {

// The library's built-in reference instance: alpha = 5/2, beta = 1/2,
// eta = [1/3, 1/3], xi = [1/3, 2/3], p = 2, f = (2u/w + v/w + 1)/9 with
// w = 1 + t^{3/2}, attested B_delta = (3 delta + 1)/9 and attested J = 1
// (its gamma = 1 integral diverges, so J is pinned).
inline plfrac::ProblemSpec example41_spec() {
    plfrac::ProblemSpec spec;
    spec.alpha = 2.5;
    spec.beta = 0.5;
    spec.gamma_ord = 1.0;
    spec.p = 2.0;
    spec.etas = {1.0 / 3.0, 1.0 / 3.0};
    spec.xis = {1.0 / 3.0, 2.0 / 3.0};
    spec.a = plfrac::ScalarDesc::exponential(1.0, 1.0);
    spec.f = plfrac::NonlinearityDesc::example41();
    spec.f_weighted_bound.kind = plfrac::BDeltaDesc::Kind::Example41;
    spec.attested_J = 1.0;
    return spec;
}

// Same instance with the divergent gamma = 1 data replaced by parameters
// under which the hypothesis integral J is genuinely finite:
// gamma = 1/5, p = 3/2 (q = 3), a = 1{t <= 1}. J is computed, not attested.
inline plfrac::ProblemSpec corrected_spec() {
    plfrac::ProblemSpec spec = example41_spec();
    spec.gamma_ord = 0.2;
    spec.p = 1.5;
    spec.a = plfrac::ScalarDesc::indicator(1.0, 1.0);
    spec.attested_J.reset();
    return spec;
}

// Weighted sup distance between two sampled pairs on the same grid.
inline double weighted_diff(const std::vector<double>& t,
                            const std::vector<double>& a,
                            const std::vector<double>& b, double alpha) {
    double best = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        const double w = 1.0 + std::pow(t[k], alpha - 1.0);
        best = std::max(best, std::abs(a[k] - b[k]) / w);
    }
    return best;
}

// Least-squares fit of v against span{t^{alpha-1}} in the weighted metric;
// returns the coefficient and writes the weighted sup residual.
inline double fit_power_span(const std::vector<double>& t,
                             const std::vector<double>& v, double alpha,
                             double* residual_out) {
    double num = 0.0, den = 0.0;
    std::vector<double> phi(t.size()), w(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
        phi[k] = std::pow(t[k], alpha - 1.0);
        w[k] = 1.0 + phi[k];
        num += v[k] * phi[k] / (w[k] * w[k]);
        den += phi[k] * phi[k] / (w[k] * w[k]);
    }
    const double c = num / den;
    double res = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        res = std::max(res, std::abs(v[k] - c * phi[k]) / w[k]);
    }
    if (residual_out != nullptr) {
        *residual_out = res;
    }
    return c;
}

} // namespace plfrac_tests

#endif
