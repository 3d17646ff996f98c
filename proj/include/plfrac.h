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

/*
 * plfrac — numerical toolkit for m-point p-Laplacian fractional boundary
 * value problems on the half line [0, inf):
 *
 *   D^gamma( phi_p( D^alpha u ) )(t) + a(t) f(t, u(t), u'(t)) = 0,
 *   u(0) = u'(0) = 0,  phi_p(D^alpha u)(0) = 0,
 *   lim_{t->inf} D^{alpha-1} u(t) = sum_i eta_i I^beta u'(xi_i),
 *
 * with Riemann-Liouville fractional operators, 2 < alpha <= 3,
 * 0 < gamma <= 1, beta > 0, p > 1. The library evaluates the problem's
 * Green kernel, verifies the existence hypotheses, computes the constants
 * (L, B_delta, M) of the existence certificate delta >= M, and solves the
 * equivalent fixed-point integral equation by damped Picard iteration on a
 * graded mesh.
 *
 * Conventions:
 *  - Fallible operations return plfrac_status and write results through out
 *    pointers; on failure the out values are unspecified and
 *    plfrac_last_error() returns a thread-local diagnostic message.
 *  - Handles are opaque; every *_create has a matching *_destroy, and
 *    destroy functions accept NULL.
 *  - Array arguments are plain double buffers whose length is the grid's
 *    node count unless stated otherwise.
 */
#ifndef PLFRAC_H
#define PLFRAC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plfrac_status {
    PLFRAC_OK = 0,
    PLFRAC_ERR_INVALID_ARGUMENT = 1, /* domain violation in a direct argument */
    PLFRAC_ERR_BAD_CONFIG = 2,       /* malformed or out-of-range configuration */
    PLFRAC_ERR_HYPOTHESIS = 3,       /* existence hypothesis (H1) violated */
    PLFRAC_ERR_UNSUPPORTED = 4,      /* operation outside the supported family */
    PLFRAC_ERR_DIVERGENCE = 5,       /* iteration or quadrature diverging */
    PLFRAC_ERR_NUMERIC = 6,          /* singular system or numeric breakdown */
    PLFRAC_ERR_IO = 7                /* file could not be read or written */
} plfrac_status;

/* Message describing the most recent failure on this thread. Never NULL;
 * empty string when no failure has occurred. Valid until the next failing
 * plfrac call on the same thread. */
const char* plfrac_last_error(void);

/* Semantic version of the library, e.g. "0.1.0". */
const char* plfrac_version(void);

/* Frees strings returned by plfrac functions documented as caller-owned. */
void plfrac_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Special functions                                                   */
/* ------------------------------------------------------------------ */

/* Gamma function for real x not a non-positive integer (x > 0 or via
 * reflection); PLFRAC_ERR_INVALID_ARGUMENT at poles / non-finite x. */
plfrac_status plfrac_gamma(double x, double* out);

/* p-Laplacian phi_p(s) = |s|^{p-2} s and its inverse phi_q (1/p + 1/q = 1);
 * requires p > 1. */
plfrac_status plfrac_phi_p(double s, double p, double* out);
plfrac_status plfrac_phi_q(double s, double p, double* out);

/* ------------------------------------------------------------------ */
/* Grids                                                               */
/* ------------------------------------------------------------------ */

typedef struct plfrac_grid plfrac_grid;

/* Graded mesh t_k = s_max (k/intervals)^grading, k = 0..intervals.
 * Requires s_max > 0, intervals >= 16, grading >= 1. */
plfrac_status plfrac_grid_create_graded(double s_max, size_t intervals,
                                        double grading, plfrac_grid** out);

/* Custom strictly increasing nodes with nodes[0] == 0. */
plfrac_status plfrac_grid_create_from_nodes(const double* nodes, size_t count,
                                            double grading, plfrac_grid** out);

void plfrac_grid_destroy(plfrac_grid* grid);

/* Number of nodes (intervals + 1); 0 if grid is NULL. */
size_t plfrac_grid_node_count(const plfrac_grid* grid);
double plfrac_grid_s_max(const plfrac_grid* grid);
double plfrac_grid_grading(const plfrac_grid* grid);

/* Copy node coordinates / trapezoid quadrature weights into out
 * (capacity >= node count). */
plfrac_status plfrac_grid_copy_nodes(const plfrac_grid* grid, double* out,
                                     size_t capacity);
plfrac_status plfrac_grid_copy_weights(const plfrac_grid* grid, double* out,
                                       size_t capacity);

/* ------------------------------------------------------------------ */
/* Riemann-Liouville fractional calculus on sampled functions          */
/* ------------------------------------------------------------------ */

/* I^order f at every node (product-trapezoid quadrature; order > 0). */
plfrac_status plfrac_rl_integral(const plfrac_grid* grid, const double* f,
                                 double order, double* out);

/* I^order f at one point x in [0, s_max]. */
plfrac_status plfrac_rl_integral_at(const plfrac_grid* grid, const double* f,
                                    double order, double x, double* out);

/* D^order f at every node, 0 < order <= 3 (classical derivative at integer
 * order). Boundary nodes use one-sided stencils; values at the first
 * interior node carry the largest discretization error. */
plfrac_status plfrac_rl_derivative(const plfrac_grid* grid, const double* f,
                                   double order, double* out);

/* max_k |f_k| / (1 + t_k^{alpha-1}), 2 < alpha <= 3. */
plfrac_status plfrac_weighted_sup_norm(const plfrac_grid* grid, const double* f,
                                       double alpha, double* out);

/* ------------------------------------------------------------------ */
/* Green kernel of the linear multi-point problem                      */
/* ------------------------------------------------------------------ */

typedef struct plfrac_kernel plfrac_kernel;

/* Validates 2 < alpha <= 3, beta > 0, etas > 0, xis strictly increasing
 * positive (m entries each), and the multi-point hypothesis
 * 0 < sum eta_i xi_i^{alpha+beta-2} < Gamma(alpha+beta-1)
 * (PLFRAC_ERR_HYPOTHESIS otherwise). */
plfrac_status plfrac_kernel_create(double alpha, double beta,
                                   const double* etas, const double* xis,
                                   size_t m, plfrac_kernel** out);

void plfrac_kernel_destroy(plfrac_kernel* kernel);

/* Delta = Gamma(alpha+beta-1) - sum eta_i xi_i^{alpha+beta-2} (> 0). */
plfrac_status plfrac_kernel_delta(const plfrac_kernel* kernel, double* out);

/* L = Gamma(alpha+beta-1) / (Gamma(alpha) Delta): the uniform bound
 * 0 <= G(t,s)/(1+t^{alpha-1}) <= L. */
plfrac_status plfrac_kernel_bound_L(const plfrac_kernel* kernel, double* out);

/* Green kernel G(t,s) and its t-derivative G_t(t,s); t, s >= 0. */
plfrac_status plfrac_kernel_eval_g(const plfrac_kernel* kernel, double t,
                                   double s, double* out);
plfrac_status plfrac_kernel_eval_gt(const plfrac_kernel* kernel, double t,
                                    double s, double* out);

/* Solves the linear problem D^alpha u + h = 0 under the multi-point boundary
 * conditions: u(t_k) = integral of G(t_k, .) h over the grid, u' through
 * G_t. h must be sampled, nonnegative. tail_out (optional) receives the
 * h(s_max) * s_max tail proxy; PLFRAC_ERR_DIVERGENCE when that proxy exceeds
 * 10% of the integral of h (non-decaying tail). */
plfrac_status plfrac_green_solve(const plfrac_kernel* kernel,
                                 const plfrac_grid* grid, const double* h,
                                 double* u_out, double* uprime_out,
                                 double* tail_out);

/* ------------------------------------------------------------------ */
/* Configured runs                                                     */
/* ------------------------------------------------------------------ */

typedef struct plfrac_run plfrac_run;

/* Parses and validates a JSON run configuration (schema documented in the
 * project README). PLFRAC_ERR_BAD_CONFIG on malformed input, unknown keys,
 * or range violations. */
plfrac_status plfrac_run_create_from_json(const char* json_text,
                                          plfrac_run** out);

/* Same, reading the document from a file (PLFRAC_ERR_IO if unreadable). */
plfrac_status plfrac_run_create_from_file(const char* path, plfrac_run** out);

void plfrac_run_destroy(plfrac_run* run);

/* Canonical JSON serialization; *out is a NUL-terminated caller-owned string
 * (release with plfrac_string_free). Round-trips through
 * plfrac_run_create_from_json. */
plfrac_status plfrac_run_to_json(const plfrac_run* run, char** out);

/* Scalar problem parameters. */
double plfrac_run_alpha(const plfrac_run* run);
double plfrac_run_beta(const plfrac_run* run);
double plfrac_run_gamma(const plfrac_run* run);
double plfrac_run_p(const plfrac_run* run);

/* Certificate radius delta; has_delta reports whether the config set one. */
int plfrac_run_has_delta(const plfrac_run* run);
double plfrac_run_delta(const plfrac_run* run);

/* Solver settings. */
double plfrac_run_omega(const plfrac_run* run);
double plfrac_run_tol(const plfrac_run* run);
int plfrac_run_max_iter(const plfrac_run* run);

/* Grid settings. */
double plfrac_run_grid_s_max(const plfrac_run* run);
size_t plfrac_run_grid_intervals(const plfrac_run* run);
double plfrac_run_grid_grading(const plfrac_run* run);

/* Configured output paths; borrowed pointers valid until the run is
 * destroyed; empty string when unset. */
const char* plfrac_run_csv_path(const plfrac_run* run);
const char* plfrac_run_report_path(const plfrac_run* run);

/* Multi-point data: *count receives m; etas/xis (optional, capacity >= m)
 * receive the coefficients and anchor points. */
plfrac_status plfrac_run_multipoint(const plfrac_run* run, double* etas,
                                    double* xis, size_t capacity,
                                    size_t* count);

/* Fresh handles derived from the run's configuration. */
plfrac_status plfrac_run_make_grid(const plfrac_run* run, plfrac_grid** out);
plfrac_status plfrac_run_make_kernel(const plfrac_run* run,
                                     plfrac_kernel** out);

/* Coefficient a(t) and nonlinearity f(t, u, v) of the configured problem. */
plfrac_status plfrac_run_eval_a(const plfrac_run* run, double t, double* out);
plfrac_status plfrac_run_eval_f(const plfrac_run* run, double t, double u,
                                double v, double* out);

/* ------------------------------------------------------------------ */
/* Hypotheses and the existence certificate                            */
/* ------------------------------------------------------------------ */

/* (H1): sum = sum eta_i xi_i^{alpha+beta-2}, threshold =
 * Gamma(alpha+beta-1), ok = (0 < sum < threshold). Always returns
 * PLFRAC_OK for a valid run; the verdict is in *ok. */
plfrac_status plfrac_run_check_h1(const plfrac_run* run, double* sum,
                                  double* threshold, int* ok);

/* (H3): j = integral over [0, s_max] of phi_q(I^gamma a); tail_flag is set
 * when the integrand at s_max suggests the truncated integral has not
 * converged; a_zero is set when a vanishes at every grid node (violating
 * (H3)'s non-degeneracy clause). */
plfrac_status plfrac_run_check_h3(const plfrac_run* run, double* j,
                                  int* tail_flag, int* a_zero);

/* (H2) bound B_delta: attested closed form when the config provides one,
 * otherwise a lattice lower estimate of
 * sup f(t, (1+t^{alpha-1})u, (1+t^{alpha-1})v) over
 * [0,t_horizon] x [0,delta]^2. samples is the total lattice budget
 * (>= 100); pass t_horizon = 0 and samples = 0 for the defaults
 * (50, 64^3). */
plfrac_status plfrac_run_estimate_b_delta(const plfrac_run* run, double delta,
                                          double t_horizon, int64_t samples,
                                          double* out);

/* M = L (alpha-1) phi_q(B_delta) J for a kernel with bound L; p is the
 * p-Laplacian exponent. */
plfrac_status plfrac_compute_m(const plfrac_kernel* kernel, double p,
                               double b_delta, double j, double* out);

typedef struct plfrac_certificate {
    double j;       /* (H3) integral, attested value if the config pins it */
    double b_delta; /* (H2) bound, attested or lattice estimate */
    double m;       /* L (alpha-1) phi_q(b_delta) j */
    double delta;
    int satisfied;  /* delta >= m: a positive solution exists with
                     * 0 <= u/(1+t^{alpha-1}) <= delta and
                     * 0 <= u'/(1+t^{alpha-1}) <= delta */
    int tail_flag;  /* truncated j looked non-convergent: unreliable */
    int b_delta_attested;
    int j_attested;
    int a_identically_zero;
} plfrac_certificate;

/* Assembles the existence certificate for the run's delta (or delta_override
 * > 0 if given; pass 0 to use the config value). PLFRAC_ERR_HYPOTHESIS when
 * (H1) fails; PLFRAC_ERR_INVALID_ARGUMENT when no delta is available. */
plfrac_status plfrac_run_certificate(const plfrac_run* run,
                                     double delta_override,
                                     plfrac_certificate* out);

/* ------------------------------------------------------------------ */
/* Solving                                                             */
/* ------------------------------------------------------------------ */

typedef struct plfrac_solution plfrac_solution;

/* Damped Picard iteration on the run's grid. Non-convergence within
 * max_iter is NOT an error: the call returns PLFRAC_OK with
 * plfrac_solution_converged() == 0. A step norm growing 10x over 5
 * iterations returns PLFRAC_ERR_DIVERGENCE. */
plfrac_status plfrac_run_solve(const plfrac_run* run, plfrac_solution** out);

/* Direct dense solve for the linear case (p = 2, f affine in (u, v));
 * PLFRAC_ERR_UNSUPPORTED otherwise. */
plfrac_status plfrac_run_solve_oracle(const plfrac_run* run,
                                      plfrac_solution** out);

void plfrac_solution_destroy(plfrac_solution* solution);

size_t plfrac_solution_node_count(const plfrac_solution* solution);
int plfrac_solution_converged(const plfrac_solution* solution);
int plfrac_solution_iterations(const plfrac_solution* solution);
double plfrac_solution_final_step(const plfrac_solution* solution);
double plfrac_solution_residual(const plfrac_solution* solution);

/* Weighted sup norm max(||u||, ||u'||) of the solution. */
double plfrac_solution_norm(const plfrac_solution* solution);

/* Copies node coordinates and samples; any destination may be NULL.
 * capacity applies to each non-NULL buffer. */
plfrac_status plfrac_solution_copy(const plfrac_solution* solution, double* t,
                                   double* u, double* uprime, size_t capacity);

/* One application of the fixed-point operator T to caller-provided samples
 * (u, uprime) on the run's grid (node-count entries each). */
plfrac_status plfrac_run_apply_t(const plfrac_run* run, const double* u,
                                 const double* uprime, double* u_out,
                                 double* uprime_out);

typedef struct plfrac_residuals {
    double fixed_point;    /* ||T(w) - w|| weighted */
    double bc_u0;          /* |u(0)| */
    double bc_up0;         /* |u'(0)| */
    double multipoint_gap; /* |D^{alpha-1}u(s_max) - sum eta_i I^beta u'(xi_i)| */
    double dalpha0_gap;    /* |phi_p(D^alpha u)| at the first interior node;
                            * diagnostic only (finite-difference noise
                            * dominates near t = 0) */
} plfrac_residuals;

/* Boundary-condition and fixed-point diagnostics for a solution. */
plfrac_status plfrac_run_residuals(const plfrac_run* run,
                                   const plfrac_solution* solution,
                                   plfrac_residuals* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PLFRAC_H */
