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
#include "plfrac/problem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "plfrac/errors.hpp"
#include "plfrac/frac_core.hpp"
#include "plfrac/special.hpp"

namespace plfrac {

double ProblemSpec::eval_a(double t) const {
    const double v = a.eval(t, alpha);
    if (!std::isfinite(v) || v < 0.0) {
        std::ostringstream os;
        os << "coefficient a(t) must be finite and nonnegative; a(" << t
           << ") = " << v;
        throw std::invalid_argument(os.str());
    }
    return v;
}

double ProblemSpec::eval_f(double tau, double u, double v) const {
    const double val = f.eval(tau, u, v, alpha);
    if (!std::isfinite(val) || val < 0.0) {
        std::ostringstream os;
        os << "nonlinearity must be finite and nonnegative; f(" << tau << ", "
           << u << ", " << v << ") = " << val;
        throw std::invalid_argument(os.str());
    }
    return val;
}

void ProblemSpec::validate() const {
    if (!(alpha > 2.0) || !(alpha <= 3.0)) {
        throw ConfigError("alpha must lie in (2, 3]");
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw ConfigError("beta must be positive");
    }
    if (!(gamma_ord > 0.0) || !(gamma_ord <= 1.0)) {
        throw ConfigError("gamma must lie in (0, 1]");
    }
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw ConfigError("p must exceed 1");
    }
    if (etas.empty() || etas.size() != xis.size()) {
        throw ConfigError("etas and xis must be nonempty and equal length");
    }
    double prev = 0.0;
    for (std::size_t i = 0; i < etas.size(); ++i) {
        if (!(etas[i] > 0.0) || !std::isfinite(etas[i])) {
            throw ConfigError("each eta must be positive");
        }
        if (!(xis[i] > prev) || !std::isfinite(xis[i])) {
            throw ConfigError("xis must be strictly increasing and positive");
        }
        prev = xis[i];
    }
    a.validate("a");
    f.validate();
    f_weighted_bound.validate();
    if (attested_J && (!std::isfinite(*attested_J) || *attested_J < 0.0)) {
        throw ConfigError("attested_J must be finite and nonnegative");
    }
}

GreenKernel kernel_for(const ProblemSpec& spec) {
    return make_kernel(spec.alpha, spec.beta, spec.etas, spec.xis);
}

H1Result check_H1(const ProblemSpec& spec) {
    H1Result r;
    const double power = spec.alpha + spec.beta - 2.0;
    for (std::size_t i = 0; i < spec.etas.size(); ++i) {
        r.sum += spec.etas[i] * std::pow(spec.xis[i], power);
    }
    r.threshold = gamma_fn(spec.alpha + spec.beta - 1.0);
    r.ok = r.sum > 0.0 && r.sum < r.threshold;
    return r;
}

H3Result check_H3(const ProblemSpec& spec, const GridPtr& grid) {
    H3Result r;
    const auto& t = grid->nodes();
    const auto& w = grid->weights();

    SampledFunction a_samples;
    a_samples.grid = grid;
    a_samples.values.resize(t.size());
    bool all_zero = true;
    for (std::size_t k = 0; k < t.size(); ++k) {
        const double v = spec.eval_a(t[k]);
        a_samples.values[k] = v;
        if (v != 0.0) {
            all_zero = false;
        }
    }
    r.a_identically_zero = all_zero;

    SampledFunction ia = rl_integral(a_samples, spec.gamma_ord);
    double J = 0.0;
    double g_last = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        const double g = phi_q(ia.values[k], spec.p);
        J += w[k] * g;
        g_last = g;
    }
    r.J = J;
    r.tail_flag = J > 0.0 && g_last * grid->s_max() > 0.1 * J;
    return r;
}

double estimate_B_delta(const ProblemSpec& spec, double delta,
                        double t_horizon, std::int64_t samples) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw std::invalid_argument("estimate_B_delta: delta must be positive");
    }
    if (spec.f_weighted_bound.attested()) {
        return spec.f_weighted_bound.eval(delta);
    }
    if (!(t_horizon > 0.0) || !std::isfinite(t_horizon)) {
        throw std::invalid_argument(
            "estimate_B_delta: t_horizon must be positive");
    }
    if (samples < 100) {
        throw std::invalid_argument(
            "estimate_B_delta: at least 100 samples required");
    }
    // samples is the total lattice budget; distribute it evenly per axis.
    const auto per_axis = std::max<std::int64_t>(
        2, std::llround(std::cbrt(static_cast<double>(samples))));
    double best = 0.0;
    for (std::int64_t it = 0; it < per_axis; ++it) {
        const double t =
            t_horizon * static_cast<double>(it) / static_cast<double>(per_axis - 1);
        const double weight = 1.0 + std::pow(t, spec.alpha - 1.0);
        for (std::int64_t iu = 0; iu < per_axis; ++iu) {
            const double u =
                delta * static_cast<double>(iu) / static_cast<double>(per_axis - 1);
            for (std::int64_t iv = 0; iv < per_axis; ++iv) {
                const double v = delta * static_cast<double>(iv) /
                                 static_cast<double>(per_axis - 1);
                best = std::max(best, spec.eval_f(t, weight * u, weight * v));
            }
        }
    }
    return best;
}

double compute_M(const GreenKernel& kernel, const ProblemSpec& spec,
                 double B_delta, double J) {
    if (B_delta < 0.0 || J < 0.0) {
        throw std::invalid_argument("compute_M: B_delta and J must be >= 0");
    }
    return kernel.L * (kernel.alpha - 1.0) * phi_q(B_delta, spec.p) * J;
}

ExistenceCertificate existence_certificate(const ProblemSpec& spec,
                                           double delta, const GridPtr& grid) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw std::invalid_argument(
            "existence_certificate: delta must be positive");
    }
    const H1Result h1 = check_H1(spec);
    if (!h1.ok) {
        std::ostringstream os;
        os << "multi-point condition violated: sum = " << h1.sum
           << " must lie strictly between 0 and " << h1.threshold;
        throw HypothesisError(os.str(), h1.sum);
    }
    const GreenKernel kernel = kernel_for(spec);

    ExistenceCertificate cert;
    cert.delta = delta;

    const H3Result h3 = check_H3(spec, grid);
    cert.a_identically_zero = h3.a_identically_zero;
    if (spec.attested_J) {
        cert.J = *spec.attested_J;
        cert.j_attested = true;
        cert.tail_flag = false;
    } else {
        cert.J = h3.J;
        cert.tail_flag = h3.tail_flag;
    }

    cert.B_delta = estimate_B_delta(spec, delta);
    cert.b_delta_attested = spec.f_weighted_bound.attested();
    cert.M = compute_M(kernel, spec, cert.B_delta, cert.J);
    cert.satisfied = delta >= cert.M;
    return cert;
}

} // namespace plfrac
