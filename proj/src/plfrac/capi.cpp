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
#include "plfrac.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "plfrac/config.hpp"
#include "plfrac/errors.hpp"
#include "plfrac/frac_core.hpp"
#include "plfrac/green.hpp"
#include "plfrac/grid.hpp"
#include "plfrac/problem.hpp"
#include "plfrac/solver.hpp"
#include "plfrac/special.hpp"

namespace {

thread_local std::string g_last_error;

plfrac_status set_error(plfrac_status status, const char* message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
plfrac_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return PLFRAC_OK;
    } catch (const plfrac::ConfigError& e) {
        return set_error(PLFRAC_ERR_BAD_CONFIG, e.what());
    } catch (const plfrac::HypothesisError& e) {
        return set_error(PLFRAC_ERR_HYPOTHESIS, e.what());
    } catch (const plfrac::UnsupportedError& e) {
        return set_error(PLFRAC_ERR_UNSUPPORTED, e.what());
    } catch (const plfrac::DivergenceError& e) {
        return set_error(PLFRAC_ERR_DIVERGENCE, e.what());
    } catch (const plfrac::NumericError& e) {
        return set_error(PLFRAC_ERR_NUMERIC, e.what());
    } catch (const plfrac::IoError& e) {
        return set_error(PLFRAC_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(PLFRAC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return set_error(PLFRAC_ERR_NUMERIC, e.what());
    } catch (...) {
        return set_error(PLFRAC_ERR_NUMERIC, "unknown internal error");
    }
}

[[noreturn]] void throw_null(const char* what) {
    throw std::invalid_argument(std::string(what) + " must not be NULL");
}

void require(const void* p, const char* what) {
    if (p == nullptr) {
        throw_null(what);
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

struct plfrac_grid {
    plfrac::GridPtr grid;
};

struct plfrac_kernel {
    plfrac::GreenKernel kernel;
};

struct plfrac_run {
    plfrac::RunConfig cfg;
};

struct plfrac_solution {
    plfrac::Solution sol;
    double alpha = 0.0;
};

namespace {

plfrac::SampledFunction sample_from(const plfrac_grid* grid, const double* f,
                                    const char* what) {
    require(grid, "grid");
    require(f, what);
    plfrac::SampledFunction s;
    s.grid = grid->grid;
    s.values.assign(f, f + grid->grid->node_count());
    s.validate();
    return s;
}

plfrac::GridPtr grid_of(const plfrac_run* run) {
    require(run, "run");
    return plfrac::make_grid(run->cfg.grid);
}

plfrac::WeightedFunction weighted_from(const plfrac::GridPtr& grid,
                                       const double* u, const double* uprime) {
    require(u, "u");
    require(uprime, "uprime");
    plfrac::WeightedFunction w;
    w.grid = grid;
    w.u.assign(u, u + grid->node_count());
    w.uprime.assign(uprime, uprime + grid->node_count());
    w.validate();
    return w;
}

} // namespace

extern "C" {

const char* plfrac_last_error(void) { return g_last_error.c_str(); }

const char* plfrac_version(void) { return "0.1.0"; }

void plfrac_string_free(char* s) { std::free(s); }

/* ---- special functions ---- */

plfrac_status plfrac_gamma(double x, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = plfrac::gamma_fn(x);
    });
}

plfrac_status plfrac_phi_p(double s, double p, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = plfrac::phi_p(s, p);
    });
}

plfrac_status plfrac_phi_q(double s, double p, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = plfrac::phi_q(s, p);
    });
}

/* ---- grids ---- */

plfrac_status plfrac_grid_create_graded(double s_max, size_t intervals,
                                        double grading, plfrac_grid** out) {
    return guarded([&] {
        require(out, "out");
        auto g = plfrac::Grid::graded(s_max, intervals, grading);
        *out = new plfrac_grid{std::move(g)};
    });
}

plfrac_status plfrac_grid_create_from_nodes(const double* nodes, size_t count,
                                            double grading, plfrac_grid** out) {
    return guarded([&] {
        require(out, "out");
        require(nodes, "nodes");
        auto g = plfrac::Grid::from_nodes(
            std::vector<double>(nodes, nodes + count), grading);
        *out = new plfrac_grid{std::move(g)};
    });
}

void plfrac_grid_destroy(plfrac_grid* grid) { delete grid; }

size_t plfrac_grid_node_count(const plfrac_grid* grid) {
    return grid ? grid->grid->node_count() : 0;
}

double plfrac_grid_s_max(const plfrac_grid* grid) {
    return grid ? grid->grid->s_max() : std::numeric_limits<double>::quiet_NaN();
}

double plfrac_grid_grading(const plfrac_grid* grid) {
    return grid ? grid->grid->grading() : std::numeric_limits<double>::quiet_NaN();
}

plfrac_status plfrac_grid_copy_nodes(const plfrac_grid* grid, double* out,
                                     size_t capacity) {
    return guarded([&] {
        require(grid, "grid");
        require(out, "out");
        const auto& nodes = grid->grid->nodes();
        if (capacity < nodes.size()) {
            throw std::invalid_argument("buffer too small for grid nodes");
        }
        std::memcpy(out, nodes.data(), nodes.size() * sizeof(double));
    });
}

plfrac_status plfrac_grid_copy_weights(const plfrac_grid* grid, double* out,
                                       size_t capacity) {
    return guarded([&] {
        require(grid, "grid");
        require(out, "out");
        const auto& weights = grid->grid->weights();
        if (capacity < weights.size()) {
            throw std::invalid_argument("buffer too small for grid weights");
        }
        std::memcpy(out, weights.data(), weights.size() * sizeof(double));
    });
}

/* ---- fractional calculus ---- */

plfrac_status plfrac_rl_integral(const plfrac_grid* grid, const double* f,
                                 double order, double* out) {
    return guarded([&] {
        require(out, "out");
        const auto result = plfrac::rl_integral(sample_from(grid, f, "f"), order);
        std::memcpy(out, result.values.data(),
                    result.values.size() * sizeof(double));
    });
}

plfrac_status plfrac_rl_integral_at(const plfrac_grid* grid, const double* f,
                                    double order, double x, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = plfrac::rl_integral_at(sample_from(grid, f, "f"), order, x);
    });
}

plfrac_status plfrac_rl_derivative(const plfrac_grid* grid, const double* f,
                                   double order, double* out) {
    return guarded([&] {
        require(out, "out");
        const auto result =
            plfrac::rl_derivative(sample_from(grid, f, "f"), order);
        std::memcpy(out, result.values.data(),
                    result.values.size() * sizeof(double));
    });
}

plfrac_status plfrac_weighted_sup_norm(const plfrac_grid* grid, const double* f,
                                       double alpha, double* out) {
    return guarded([&] {
        require(grid, "grid");
        require(f, "f");
        require(out, "out");
        *out = plfrac::weighted_sup_norm(*grid->grid, f,
                                         grid->grid->node_count(), alpha);
    });
}

/* ---- Green kernel ---- */

plfrac_status plfrac_kernel_create(double alpha, double beta,
                                   const double* etas, const double* xis,
                                   size_t m, plfrac_kernel** out) {
    return guarded([&] {
        require(out, "out");
        require(etas, "etas");
        require(xis, "xis");
        auto kernel = plfrac::make_kernel(alpha, beta,
                                          std::vector<double>(etas, etas + m),
                                          std::vector<double>(xis, xis + m));
        *out = new plfrac_kernel{std::move(kernel)};
    });
}

void plfrac_kernel_destroy(plfrac_kernel* kernel) { delete kernel; }

plfrac_status plfrac_kernel_delta(const plfrac_kernel* kernel, double* out) {
    return guarded([&] {
        require(kernel, "kernel");
        require(out, "out");
        *out = kernel->kernel.delta;
    });
}

plfrac_status plfrac_kernel_bound_L(const plfrac_kernel* kernel, double* out) {
    return guarded([&] {
        require(kernel, "kernel");
        require(out, "out");
        *out = kernel->kernel.L;
    });
}

plfrac_status plfrac_kernel_eval_g(const plfrac_kernel* kernel, double t,
                                   double s, double* out) {
    return guarded([&] {
        require(kernel, "kernel");
        require(out, "out");
        *out = plfrac::eval_G(kernel->kernel, t, s);
    });
}

plfrac_status plfrac_kernel_eval_gt(const plfrac_kernel* kernel, double t,
                                    double s, double* out) {
    return guarded([&] {
        require(kernel, "kernel");
        require(out, "out");
        *out = plfrac::eval_Gt(kernel->kernel, t, s);
    });
}

plfrac_status plfrac_green_solve(const plfrac_kernel* kernel,
                                 const plfrac_grid* grid, const double* h,
                                 double* u_out, double* uprime_out,
                                 double* tail_out) {
    return guarded([&] {
        require(kernel, "kernel");
        require(u_out, "u_out");
        require(uprime_out, "uprime_out");
        const auto result =
            plfrac::green_solve_linear(kernel->kernel, sample_from(grid, h, "h"));
        std::memcpy(u_out, result.u.values.data(),
                    result.u.values.size() * sizeof(double));
        std::memcpy(uprime_out, result.uprime.values.data(),
                    result.uprime.values.size() * sizeof(double));
        if (tail_out != nullptr) {
            *tail_out = result.tail_estimate;
        }
    });
}

/* ---- configured runs ---- */

plfrac_status plfrac_run_create_from_json(const char* json_text,
                                          plfrac_run** out) {
    return guarded([&] {
        require(out, "out");
        require(json_text, "json_text");
        *out = new plfrac_run{plfrac::parse_config(json_text)};
    });
}

plfrac_status plfrac_run_create_from_file(const char* path, plfrac_run** out) {
    return guarded([&] {
        require(out, "out");
        require(path, "path");
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw plfrac::IoError(std::string("cannot read config file: ") +
                                  path);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        *out = new plfrac_run{plfrac::parse_config(buf.str())};
    });
}

void plfrac_run_destroy(plfrac_run* run) { delete run; }

plfrac_status plfrac_run_to_json(const plfrac_run* run, char** out) {
    return guarded([&] {
        require(run, "run");
        require(out, "out");
        *out = dup_string(plfrac::serialize_config(run->cfg));
    });
}

double plfrac_run_alpha(const plfrac_run* run) {
    return run ? run->cfg.problem.alpha : std::numeric_limits<double>::quiet_NaN();
}

double plfrac_run_beta(const plfrac_run* run) {
    return run ? run->cfg.problem.beta : std::numeric_limits<double>::quiet_NaN();
}

double plfrac_run_gamma(const plfrac_run* run) {
    return run ? run->cfg.problem.gamma_ord
               : std::numeric_limits<double>::quiet_NaN();
}

double plfrac_run_p(const plfrac_run* run) {
    return run ? run->cfg.problem.p : std::numeric_limits<double>::quiet_NaN();
}

int plfrac_run_has_delta(const plfrac_run* run) {
    return (run && run->cfg.delta) ? 1 : 0;
}

double plfrac_run_delta(const plfrac_run* run) {
    return (run && run->cfg.delta) ? *run->cfg.delta
                                   : std::numeric_limits<double>::quiet_NaN();
}

double plfrac_run_omega(const plfrac_run* run) {
    return run ? run->cfg.solver.omega : std::numeric_limits<double>::quiet_NaN();
}

double plfrac_run_tol(const plfrac_run* run) {
    return run ? run->cfg.solver.tol : std::numeric_limits<double>::quiet_NaN();
}

int plfrac_run_max_iter(const plfrac_run* run) {
    return run ? run->cfg.solver.max_iter : 0;
}

double plfrac_run_grid_s_max(const plfrac_run* run) {
    return run ? run->cfg.grid.s_max : std::numeric_limits<double>::quiet_NaN();
}

size_t plfrac_run_grid_intervals(const plfrac_run* run) {
    return run ? run->cfg.grid.n : 0;
}

double plfrac_run_grid_grading(const plfrac_run* run) {
    return run ? run->cfg.grid.grading
               : std::numeric_limits<double>::quiet_NaN();
}

const char* plfrac_run_csv_path(const plfrac_run* run) {
    return run ? run->cfg.outputs.csv_path.c_str() : "";
}

const char* plfrac_run_report_path(const plfrac_run* run) {
    return run ? run->cfg.outputs.report_path.c_str() : "";
}

plfrac_status plfrac_run_multipoint(const plfrac_run* run, double* etas,
                                    double* xis, size_t capacity,
                                    size_t* count) {
    return guarded([&] {
        require(run, "run");
        require(count, "count");
        const auto& spec = run->cfg.problem;
        *count = spec.etas.size();
        if (etas != nullptr || xis != nullptr) {
            if (capacity < spec.etas.size()) {
                throw std::invalid_argument(
                    "buffer too small for multipoint data");
            }
            if (etas != nullptr) {
                std::memcpy(etas, spec.etas.data(),
                            spec.etas.size() * sizeof(double));
            }
            if (xis != nullptr) {
                std::memcpy(xis, spec.xis.data(),
                            spec.xis.size() * sizeof(double));
            }
        }
    });
}

plfrac_status plfrac_run_make_grid(const plfrac_run* run, plfrac_grid** out) {
    return guarded([&] {
        require(out, "out");
        *out = new plfrac_grid{grid_of(run)};
    });
}

plfrac_status plfrac_run_make_kernel(const plfrac_run* run,
                                     plfrac_kernel** out) {
    return guarded([&] {
        require(run, "run");
        require(out, "out");
        *out = new plfrac_kernel{plfrac::kernel_for(run->cfg.problem)};
    });
}

plfrac_status plfrac_run_eval_a(const plfrac_run* run, double t, double* out) {
    return guarded([&] {
        require(run, "run");
        require(out, "out");
        *out = run->cfg.problem.eval_a(t);
    });
}

plfrac_status plfrac_run_eval_f(const plfrac_run* run, double t, double u,
                                double v, double* out) {
    return guarded([&] {
        require(run, "run");
        require(out, "out");
        *out = run->cfg.problem.eval_f(t, u, v);
    });
}

/* ---- hypotheses and certificate ---- */

plfrac_status plfrac_run_check_h1(const plfrac_run* run, double* sum,
                                  double* threshold, int* ok) {
    return guarded([&] {
        require(run, "run");
        const auto r = plfrac::check_H1(run->cfg.problem);
        if (sum != nullptr) {
            *sum = r.sum;
        }
        if (threshold != nullptr) {
            *threshold = r.threshold;
        }
        if (ok != nullptr) {
            *ok = r.ok ? 1 : 0;
        }
    });
}

plfrac_status plfrac_run_check_h3(const plfrac_run* run, double* j,
                                  int* tail_flag, int* a_zero) {
    return guarded([&] {
        require(run, "run");
        const auto r = plfrac::check_H3(run->cfg.problem, grid_of(run));
        if (j != nullptr) {
            *j = r.J;
        }
        if (tail_flag != nullptr) {
            *tail_flag = r.tail_flag ? 1 : 0;
        }
        if (a_zero != nullptr) {
            *a_zero = r.a_identically_zero ? 1 : 0;
        }
    });
}

plfrac_status plfrac_run_estimate_b_delta(const plfrac_run* run, double delta,
                                          double t_horizon, int64_t samples,
                                          double* out) {
    return guarded([&] {
        require(run, "run");
        require(out, "out");
        const double horizon = t_horizon > 0.0 ? t_horizon : 50.0;
        const std::int64_t budget = samples > 0 ? samples : 64LL * 64 * 64;
        *out = plfrac::estimate_B_delta(run->cfg.problem, delta, horizon, budget);
    });
}

plfrac_status plfrac_compute_m(const plfrac_kernel* kernel, double p,
                               double b_delta, double j, double* out) {
    return guarded([&] {
        require(kernel, "kernel");
        require(out, "out");
        if (!(p > 1.0)) {
            throw std::invalid_argument("p must exceed 1");
        }
        plfrac::ProblemSpec spec;
        spec.p = p;
        *out = plfrac::compute_M(kernel->kernel, spec, b_delta, j);
    });
}

plfrac_status plfrac_run_certificate(const plfrac_run* run,
                                     double delta_override,
                                     plfrac_certificate* out) {
    return guarded([&] {
        require(run, "run");
        require(out, "out");
        double delta = delta_override;
        if (!(delta > 0.0)) {
            if (!run->cfg.delta) {
                throw std::invalid_argument(
                    "no delta: config sets none and no override given");
            }
            delta = *run->cfg.delta;
        }
        const auto cert =
            plfrac::existence_certificate(run->cfg.problem, delta, grid_of(run));
        out->j = cert.J;
        out->b_delta = cert.B_delta;
        out->m = cert.M;
        out->delta = cert.delta;
        out->satisfied = cert.satisfied ? 1 : 0;
        out->tail_flag = cert.tail_flag ? 1 : 0;
        out->b_delta_attested = cert.b_delta_attested ? 1 : 0;
        out->j_attested = cert.j_attested ? 1 : 0;
        out->a_identically_zero = cert.a_identically_zero ? 1 : 0;
    });
}

/* ---- solving ---- */

plfrac_status plfrac_run_solve(const plfrac_run* run, plfrac_solution** out) {
    return guarded([&] {
        require(run, "run");
        require(out, "out");
        const auto grid = grid_of(run);
        const auto kernel = plfrac::kernel_for(run->cfg.problem);
        plfrac::SolverConfig cfg;
        cfg.omega = run->cfg.solver.omega;
        cfg.tol = run->cfg.solver.tol;
        cfg.max_iter = run->cfg.solver.max_iter;
        cfg.grid = grid;
        auto sol = plfrac::picard_solve(run->cfg.problem, kernel, cfg);
        *out = new plfrac_solution{std::move(sol), run->cfg.problem.alpha};
    });
}

plfrac_status plfrac_run_solve_oracle(const plfrac_run* run,
                                      plfrac_solution** out) {
    return guarded([&] {
        require(run, "run");
        require(out, "out");
        const auto grid = grid_of(run);
        const auto kernel = plfrac::kernel_for(run->cfg.problem);
        auto sol = plfrac::linear_oracle_solve(run->cfg.problem, kernel, grid);
        *out = new plfrac_solution{std::move(sol), run->cfg.problem.alpha};
    });
}

void plfrac_solution_destroy(plfrac_solution* solution) { delete solution; }

size_t plfrac_solution_node_count(const plfrac_solution* solution) {
    return solution ? solution->sol.w.grid->node_count() : 0;
}

int plfrac_solution_converged(const plfrac_solution* solution) {
    return (solution && solution->sol.converged) ? 1 : 0;
}

int plfrac_solution_iterations(const plfrac_solution* solution) {
    return solution ? solution->sol.iterations : 0;
}

double plfrac_solution_final_step(const plfrac_solution* solution) {
    return solution ? solution->sol.final_step_norm
                    : std::numeric_limits<double>::quiet_NaN();
}

double plfrac_solution_residual(const plfrac_solution* solution) {
    return solution ? solution->sol.residual
                    : std::numeric_limits<double>::quiet_NaN();
}

double plfrac_solution_norm(const plfrac_solution* solution) {
    return solution ? solution->sol.w.norm(solution->alpha)
                    : std::numeric_limits<double>::quiet_NaN();
}

plfrac_status plfrac_solution_copy(const plfrac_solution* solution, double* t,
                                   double* u, double* uprime,
                                   size_t capacity) {
    return guarded([&] {
        require(solution, "solution");
        const auto& w = solution->sol.w;
        const size_t n = w.grid->node_count();
        if ((t != nullptr || u != nullptr || uprime != nullptr) && capacity < n) {
            throw std::invalid_argument("buffer too small for solution data");
        }
        if (t != nullptr) {
            std::memcpy(t, w.grid->nodes().data(), n * sizeof(double));
        }
        if (u != nullptr) {
            std::memcpy(u, w.u.data(), n * sizeof(double));
        }
        if (uprime != nullptr) {
            std::memcpy(uprime, w.uprime.data(), n * sizeof(double));
        }
    });
}

plfrac_status plfrac_run_apply_t(const plfrac_run* run, const double* u,
                                 const double* uprime, double* u_out,
                                 double* uprime_out) {
    return guarded([&] {
        require(run, "run");
        require(u_out, "u_out");
        require(uprime_out, "uprime_out");
        const auto grid = grid_of(run);
        const auto kernel = plfrac::kernel_for(run->cfg.problem);
        const auto w = weighted_from(grid, u, uprime);
        const auto result = plfrac::apply_T(run->cfg.problem, kernel, w);
        std::memcpy(u_out, result.u.data(), result.u.size() * sizeof(double));
        std::memcpy(uprime_out, result.uprime.data(),
                    result.uprime.size() * sizeof(double));
    });
}

plfrac_status plfrac_run_residuals(const plfrac_run* run,
                                   const plfrac_solution* solution,
                                   plfrac_residuals* out) {
    return guarded([&] {
        require(run, "run");
        require(solution, "solution");
        require(out, "out");
        const auto kernel = plfrac::kernel_for(run->cfg.problem);
        const auto rep =
            plfrac::residual_report(run->cfg.problem, kernel, solution->sol.w);
        out->fixed_point = rep.fixed_point_residual;
        out->bc_u0 = rep.bc_u0;
        out->bc_up0 = rep.bc_up0;
        out->multipoint_gap = rep.multipoint_gap;
        out->dalpha0_gap = rep.dalpha0_gap;
    });
}

} // extern "C"
