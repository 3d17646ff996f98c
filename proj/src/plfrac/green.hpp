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
#ifndef PLFRAC_GREEN_HPP
#define PLFRAC_GREEN_HPP

#include <vector>

#include "plfrac/grid.hpp"
#include "plfrac/matrix.hpp"

namespace plfrac {

// Green's function data for the linear m-point fractional boundary value
// problem on the half line:
//
//   D^alpha u(t) + h(t) = 0,   u(0) = u'(0) = 0,
//   D^{alpha-1} u(+inf) = sum_i eta_i (I^beta u')(xi_i),
//
// with 2 < alpha <= 3, beta > 0. All derived constants are cached:
//
//   Delta = Gamma(alpha+beta-1) - sum_i eta_i xi_i^{alpha+beta-2}   (must be > 0)
//   L     = Gamma(alpha+beta-1) / (Gamma(alpha) * Delta)
//
// and the kernel bounds 0 <= G(t,s) <= L (1 + t^{alpha-1}),
// 0 <= G_t(t,s) <= (alpha-1) L (1 + t^{alpha-1}) hold for all t, s >= 0.
struct GreenKernel {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> etas;
    std::vector<double> xis;
    double delta = 0.0;    // Delta above; positivity is hypothesis (H1)
    double L = 0.0;
    double gamma_ab = 0.0; // Gamma(alpha+beta-1)
    double gamma_a = 0.0;  // Gamma(alpha)
    double gamma_a1 = 0.0; // Gamma(alpha-1), prefactor of the derivative kernel
};

// Validates parameter ranges and (H1); throws HypothesisError (carrying the
// offending sum) when Delta <= 0, std::invalid_argument on range violations.
GreenKernel make_kernel(double alpha, double beta, std::vector<double> etas,
                        std::vector<double> xis);

// Unified closed form covering every branch of the piecewise definition:
//
//   G(t,s) = [Gamma(a+b-1) - sum_{i: xi_i > s} eta_i (xi_i - s)^{a+b-2}] t^{a-1}
//            ------------------------------------------------------------------
//                                  Gamma(a) Delta
//          - 1{s <= t} (t-s)^{a-1} / Gamma(a)
//
// The per-i indicator reproduces each of the four branch formulas in its
// validity region and stays well defined when s is ordered differently
// against different xi_i (m > 3). At s = t the subtracted term is exactly 0,
// so the <= convention is immaterial (documented for bit-reproducibility).
double eval_G(const GreenKernel& k, double t, double s);

// Derivative kernel G_t = dG/dt: same structure with exponents alpha-2 and
// prefactor 1/(Gamma(alpha-1) Delta). Returns 0 at t = 0 by continuity
// (t^{alpha-2} -> 0 for alpha > 2).
double eval_Gt(const GreenKernel& k, double t, double s);

// Quadrature matrix for the outer kernel integral: entry (k, j) is
// w_j * G(t_k, s_j)  (or w_j * G_t(t_k, s_j) when derivative = true), so that
// u(t_k) = sum_j w_j G(t_k, s_j) h(s_j) is a matrix-vector product.
Matrix kernel_quadrature_matrix(const GreenKernel& k, const Grid& grid, bool derivative);

struct GreenSolveResult {
    SampledFunction u;
    SampledFunction uprime;
    // Crude upper proxy for the neglected tail integral of h beyond S_max
    // (h(S_max) * S_max); the weighted solution error it induces is bounded by
    // L * tail_estimate (derivative part by (alpha-1) L * tail_estimate).
    double tail_estimate = 0.0;
};

// Linear Green solve of u(t) = integral of G(t,s) h(s) ds over [0, S_max]
// (trapezoid weights against sampled h >= 0); uprime through the G_t kernel.
// u(0) = u'(0) = 0 holds exactly by kernel structure. Throws DivergenceError
// when h shows a non-decaying tail (h(S_max)*S_max > 0.1 * integral of h).
GreenSolveResult green_solve_linear(const GreenKernel& k, const SampledFunction& h);

} // namespace plfrac

#endif
