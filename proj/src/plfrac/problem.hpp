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
#ifndef PLFRAC_PROBLEM_HPP
#define PLFRAC_PROBLEM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "plfrac/functions.hpp"
#include "plfrac/green.hpp"
#include "plfrac/grid.hpp"

namespace plfrac {

// Boundary value problem
//   D^alpha u + a(t) f(t, u, u') = 0,  t in (0, inf),
//   u(0) = u'(0) = 0,  D^{alpha-1} u(inf) = sum_i eta_i I^beta u'(xi_i),
// where D^alpha sits inside the p-Laplacian phi_p(D^gamma phi_p(...)) chain;
// equivalently the fixed-point form u = T u with
//   (T u)(t) = int_0^inf G(t,s) phi_q(I^gamma [a f(., u, u')](s)) ds.
struct ProblemSpec {
    double alpha = 2.5;     // in (2, 3]
    double beta = 0.5;      // > 0
    double gamma_ord = 1.0; // in (0, 1]
    double p = 2.0;         // > 1; q = p/(p-1)
    std::vector<double> etas;
    std::vector<double> xis;
    ScalarDesc a = ScalarDesc::constant(1.0);
    NonlinearityDesc f = NonlinearityDesc::constant(0.0);
    // Optional closed-form attestation of the (H2) bound delta -> B_delta.
    BDeltaDesc f_weighted_bound;
    // Optional attested value of the (H3) integral J. When present the
    // certificate uses it verbatim (and clears the tail flag): some reference
    // problems assert J analytically while their stated a(t) would make the
    // truncated quadrature diverge.
    std::optional<double> attested_J;

    bool operator==(const ProblemSpec&) const = default;

    double q() const { return p / (p - 1.0); }
    double eval_a(double t) const;
    // Throws std::invalid_argument identifying (tau, u, v) if f returns a
    // negative or non-finite value.
    double eval_f(double tau, double u, double v) const;
    // Throws ConfigError on any parameter-range violation.
    void validate() const;
};

// Builds the Green kernel for the spec's (alpha, beta, etas, xis).
// Throws HypothesisError if (H1) fails.
GreenKernel kernel_for(const ProblemSpec& spec);

struct H1Result {
    double sum = 0.0;       // sum_i eta_i xi_i^{alpha+beta-2}
    double threshold = 0.0; // Gamma(alpha+beta-1)
    bool ok = false;        // 0 < sum < threshold
};

// (H1): 0 < sum_i eta_i xi_i^{alpha+beta-2} < Gamma(alpha+beta-1).
H1Result check_H1(const ProblemSpec& spec);

struct H3Result {
    double J = 0.0;      // int_0^{S_max} phi_q(I^gamma a)(s) ds
    bool tail_flag = false;
    bool a_identically_zero = false; // a vanishes at every node: violates (H3)
};

// (H3): J = int_0^inf phi_q(I^gamma a)(s) ds finite. Computed on [0, S_max];
// tail_flag is set when g(S_max) * S_max > 0.1 * J, a heuristic signal that
// the truncated integral has not converged.
H3Result check_H3(const ProblemSpec& spec, const GridPtr& grid);

// (H2) bound B_delta = sup f(t, (1+t^{alpha-1})u, (1+t^{alpha-1})v) over
// t >= 0, 0 <= u, v <= delta. Returns the attested closed form when present;
// otherwise maximizes over a lattice on [0,t_horizon] x [0,delta]^2 (a lower
// estimate of the true sup). `samples` is the total lattice budget; each axis
// gets round(cbrt(samples)) points. Requires delta > 0 and samples >= 100.
double estimate_B_delta(const ProblemSpec& spec, double delta,
                        double t_horizon = 50.0,
                        std::int64_t samples = 64LL * 64 * 64);

// M = L * (alpha-1) * phi_q(B_delta) * J.
double compute_M(const GreenKernel& kernel, const ProblemSpec& spec,
                 double B_delta, double J);

struct ExistenceCertificate {
    double J = 0.0;
    double B_delta = 0.0;
    double M = 0.0;
    double delta = 0.0;
    bool satisfied = false; // delta >= M; certifies a positive solution with
                            // 0 <= u/(1+t^{alpha-1}) <= delta and
                            // 0 <= u'/(1+t^{alpha-1}) <= delta
    bool tail_flag = false; // J truncation looked non-convergent: the
                            // certificate is unreliable (not an error)
    bool b_delta_attested = false;
    bool j_attested = false;
    bool a_identically_zero = false;
};

// Assembles the existence certificate: J from check_H3 (or the attestation),
// B_delta from estimate_B_delta, M from compute_M, verdict delta >= M.
// Throws HypothesisError if (H1) fails; delta must be > 0.
ExistenceCertificate existence_certificate(const ProblemSpec& spec,
                                           double delta, const GridPtr& grid);

} // namespace plfrac

#endif
