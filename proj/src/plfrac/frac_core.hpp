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
#ifndef PLFRAC_FRAC_CORE_HPP
#define PLFRAC_FRAC_CORE_HPP

#include <cstddef>

#include "plfrac/grid.hpp"
#include "plfrac/matrix.hpp"

namespace plfrac {

// ---------------------------------------------------------------------------
// Riemann-Liouville fractional integral
//
//                       1     / t
//   (I^order f)(t) = ------- |   (t-s)^{order-1} f(s) ds ,   order > 0
//                    G(order)/ 0
//
// discretized by product-trapezoidal quadrature: the weakly singular kernel
// (t-s)^{order-1} is integrated exactly against the piecewise-linear
// interpolant of f. order = 1 degenerates to the plain trapezoid rule through
// the same moment formulas (no special branch). Weights are nonnegative, so
// the discrete operator preserves monotonicity and nonnegativity.
// ---------------------------------------------------------------------------

// Samples of I^order f at every grid node; node 0 maps to 0.
SampledFunction rl_integral(const SampledFunction& f, double order);

// I^order f evaluated at an arbitrary point x in [0, S_max] (the subinterval
// containing x is integrated partially against the same linear interpolant).
double rl_integral_at(const SampledFunction& f, double order, double x);

// Full lower-triangular weight table W with (I^order f)(t_k) = sum_j W[k][j] f_j.
// Exposed so the dense linear oracle can assemble exactly the operator that
// rl_integral applies.
Matrix frac_integral_weights(const Grid& grid, double order);

// ---------------------------------------------------------------------------
// Riemann-Liouville fractional derivative (supported range 0 < order <= 3)
//
//   (D^order f)(t) = d^n/dt^n (I^{n-order} f)(t),   n = floor(order) + 1,
//
// computed as the product-quadrature fractional integral followed by central
// finite differences on the grid (one-sided at the endpoints; Fornberg weights
// on the nonuniform nodes). Integer orders reduce to classical derivatives.
//
// Accuracy caveat (documented): RL derivatives are typically singular at
// t = 0; the value at node 0 is reported but unreliable, and the first
// interior node sits in the quadrature's boundary layer for integrands with
// algebraic singularities at 0 (identity suites therefore check from the
// second interior node on).
// ---------------------------------------------------------------------------
SampledFunction rl_derivative(const SampledFunction& f, double order);

// Weighted sup norm of space E:  max_k |u(t_k)| / (1 + t_k^{alpha-1}),
// 2 < alpha <= 3.
double weighted_sup_norm(const SampledFunction& u, double alpha);
double weighted_sup_norm(const Grid& grid, const double* values, std::size_t count,
                         double alpha);

// Finite-difference weights on arbitrary nodes x[0..m-1] for the der-th
// derivative evaluated at z (Fornberg's recursion). der < m required.
void fd_weights(double z, const double* x, std::size_t m, int der, double* w_out);

} // namespace plfrac

#endif
