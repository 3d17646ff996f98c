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
#include "plfrac/green.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "plfrac/errors.hpp"
#include "plfrac/special.hpp"

namespace plfrac {

namespace {

void require_point(double t, double s) {
    if (!std::isfinite(t) || !std::isfinite(s) || t < 0.0 || s < 0.0) {
        throw std::invalid_argument("Green kernel: (t, s) must be finite and nonnegative");
    }
}

// Bracket common to both kernels:
//   Gamma(a+b-1) - sum_{i: xi_i > s} eta_i (xi_i - s)^{a+b-2}
// Lies in [Delta, Gamma(a+b-1)] for all s >= 0 (terms shrink as s grows).
double multipoint_bracket(const GreenKernel& k, double s) {
    double num = k.gamma_ab;
    const double expo = k.alpha + k.beta - 2.0;
    for (std::size_t i = 0; i < k.xis.size(); ++i) {
        if (k.xis[i] > s) num -= k.etas[i] * std::pow(k.xis[i] - s, expo);
    }
    return num;
}

} // namespace

GreenKernel make_kernel(double alpha, double beta, std::vector<double> etas,
                        std::vector<double> xis) {
    if (!std::isfinite(alpha) || alpha <= 2.0 || alpha > 3.0) {
        throw std::invalid_argument("make_kernel: alpha must lie in (2, 3], got " +
                                    std::to_string(alpha));
    }
    if (!std::isfinite(beta) || beta <= 0.0) {
        throw std::invalid_argument("make_kernel: beta must be > 0");
    }
    if (etas.empty() || etas.size() != xis.size()) {
        throw std::invalid_argument("make_kernel: need matching nonempty eta/xi sequences");
    }
    for (double e : etas) {
        if (!std::isfinite(e) || e <= 0.0) {
            throw std::invalid_argument("make_kernel: every eta_i must be > 0");
        }
    }
    double prev = 0.0;
    for (double x : xis) {
        if (!std::isfinite(x) || x <= prev) {
            throw std::invalid_argument(
                "make_kernel: xi must be strictly increasing and positive");
        }
        prev = x;
    }

    GreenKernel k;
    k.alpha = alpha;
    k.beta = beta;
    k.etas = std::move(etas);
    k.xis = std::move(xis);
    k.gamma_ab = gamma_fn(alpha + beta - 1.0);
    k.gamma_a = gamma_fn(alpha);
    k.gamma_a1 = gamma_fn(alpha - 1.0);

    double sum = 0.0;
    const double expo = alpha + beta - 2.0;
    for (std::size_t i = 0; i < k.etas.size(); ++i) {
        sum += k.etas[i] * std::pow(k.xis[i], expo);
    }
    k.delta = k.gamma_ab - sum;
    if (!(k.delta > 0.0)) {
        throw HypothesisError(
            "hypothesis (H1) violated: sum eta_i xi_i^{alpha+beta-2} = " + std::to_string(sum) +
                " >= Gamma(alpha+beta-1) = " + std::to_string(k.gamma_ab),
            sum);
    }
    k.L = k.gamma_ab / (k.gamma_a * k.delta);
    return k;
}

double eval_G(const GreenKernel& k, double t, double s) {
    require_point(t, s);
    double v = multipoint_bracket(k, s) * std::pow(t, k.alpha - 1.0) / (k.gamma_a * k.delta);
    if (s <= t) v -= std::pow(t - s, k.alpha - 1.0) / k.gamma_a;
    return v;
}

double eval_Gt(const GreenKernel& k, double t, double s) {
    require_point(t, s);
    // pow(0, alpha-2) = 0 for alpha > 2, so t = 0 (and s = t) need no branch.
    double v = multipoint_bracket(k, s) * std::pow(t, k.alpha - 2.0) / (k.gamma_a1 * k.delta);
    if (s <= t) v -= std::pow(t - s, k.alpha - 2.0) / k.gamma_a1;
    return v;
}

Matrix kernel_quadrature_matrix(const GreenKernel& k, const Grid& grid, bool derivative) {
    const std::vector<double>& t = grid.nodes();
    const std::vector<double>& w = grid.weights();
    const std::size_t count = t.size();
    Matrix m(count, count);
    for (std::size_t i = 0; i < count; ++i) {
        double* row = m.row(i);
        for (std::size_t j = 0; j < count; ++j) {
            row[j] = w[j] * (derivative ? eval_Gt(k, t[i], t[j]) : eval_G(k, t[i], t[j]));
        }
    }
    return m;
}

GreenSolveResult green_solve_linear(const GreenKernel& k, const SampledFunction& h) {
    h.validate();
    const std::vector<double>& t = h.grid->nodes();
    const std::vector<double>& w = h.grid->weights();
    const std::size_t count = t.size();

    double integral = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        if (h.values[j] < 0.0) {
            throw std::invalid_argument("green_solve_linear: h must be nonnegative");
        }
        integral += w[j] * h.values[j];
    }
    const double tail = h.values.back() * h.grid->s_max();
    if (integral > 0.0 && tail > 0.1 * integral) {
        throw DivergenceError(
            "green_solve_linear: non-decaying tail detected (h(S_max)*S_max = " +
            std::to_string(tail) + " vs integral " + std::to_string(integral) +
            "); the half-line integral looks divergent at this truncation");
    }

    GreenSolveResult r{SampledFunction::zeros(h.grid), SampledFunction::zeros(h.grid), tail};
    for (std::size_t i = 0; i < count; ++i) {
        double acc_u = 0.0, acc_up = 0.0;
        for (std::size_t j = 0; j < count; ++j) {
            const double hw = w[j] * h.values[j];
            if (hw == 0.0) continue;
            acc_u += hw * eval_G(k, t[i], t[j]);
            acc_up += hw * eval_Gt(k, t[i], t[j]);
        }
        r.u.values[i] = acc_u;
        r.uprime.values[i] = acc_up;
    }
    return r;
}

} // namespace plfrac
