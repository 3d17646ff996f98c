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

// Command-line front end for the plfrac library. Talks to the library
// exclusively through the public C API (plfrac.h).
//
// Exit codes:
//   0  success / certificate satisfied / all identity checks pass
//   1  malformed configuration, unsupported request, or I/O failure
//   2  certificate not satisfied (check) or identity check failed
//   3  existence hypothesis (H1) violated
//   4  solver failed to converge (or diverged)

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plfrac.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotSatisfied = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitNoConvergence = 4;

struct RunDeleter {
    void operator()(plfrac_run* r) const { plfrac_run_destroy(r); }
};
struct GridDeleter {
    void operator()(plfrac_grid* g) const { plfrac_grid_destroy(g); }
};
struct KernelDeleter {
    void operator()(plfrac_kernel* k) const { plfrac_kernel_destroy(k); }
};
struct SolutionDeleter {
    void operator()(plfrac_solution* s) const { plfrac_solution_destroy(s); }
};
using RunPtr = std::unique_ptr<plfrac_run, RunDeleter>;
using GridPtr = std::unique_ptr<plfrac_grid, GridDeleter>;
using KernelPtr = std::unique_ptr<plfrac_kernel, KernelDeleter>;
using SolutionPtr = std::unique_ptr<plfrac_solution, SolutionDeleter>;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt_short(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

int exit_for_status(plfrac_status st) {
    switch (st) {
    case PLFRAC_OK:
        return kExitOk;
    case PLFRAC_ERR_HYPOTHESIS:
        return kExitHypothesis;
    case PLFRAC_ERR_DIVERGENCE:
        return kExitNoConvergence;
    default:
        return kExitUsage;
    }
}

int fail_with(plfrac_status st, const std::string& context) {
    std::cerr << "error: " << context << ": " << plfrac_last_error() << "\n";
    return exit_for_status(st);
}

// Collects the report while echoing it to stdout; optionally saved to a file.
class Report {
public:
    void line(const std::string& s) {
        std::cout << s << "\n";
        text_ << s << "\n";
    }
    bool save(const std::string& path) const {
        if (path.empty()) {
            return true;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            return false;
        }
        out << text_.str();
        return static_cast<bool>(out);
    }

private:
    std::ostringstream text_;
};

RunPtr load_run(const std::string& config_path, plfrac_status* status) {
    plfrac_run* raw = nullptr;
    *status = plfrac_run_create_from_file(config_path.c_str(), &raw);
    return RunPtr(raw);
}

bool write_csv(const std::string& path, double alpha, size_t n,
               const std::vector<double>& t, const std::vector<double>& u,
               const std::vector<double>& uprime) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        return false;
    }
    out << "t,u,uprime,u_weighted,uprime_weighted\n";
    for (size_t k = 0; k < n; ++k) {
        const double w = 1.0 + std::pow(t[k], alpha - 1.0);
        out << fmt(t[k]) << ',' << fmt(u[k]) << ',' << fmt(uprime[k]) << ','
            << fmt(u[k] / w) << ',' << fmt(uprime[k] / w) << '\n';
    }
    return static_cast<bool>(out);
}

// ---------------------------------------------------------------- check ----

int cmd_check(const std::string& config_path) {
    plfrac_status st;
    RunPtr run = load_run(config_path, &st);
    if (!run) {
        return fail_with(st, "loading config");
    }
    if (!plfrac_run_has_delta(run.get())) {
        std::cerr << "error: check requires \"delta\" in the config\n";
        return kExitUsage;
    }

    Report rep;
    double h1_sum = 0.0, h1_threshold = 0.0;
    int h1_ok = 0;
    st = plfrac_run_check_h1(run.get(), &h1_sum, &h1_threshold, &h1_ok);
    if (st != PLFRAC_OK) {
        return fail_with(st, "hypothesis check");
    }
    rep.line("hypothesis (H1): sum = " + fmt(h1_sum) +
             ", threshold Gamma(alpha+beta-1) = " + fmt(h1_threshold) +
             (h1_ok ? "  [holds]" : "  [VIOLATED]"));

    plfrac_certificate cert{};
    st = plfrac_run_certificate(run.get(), 0.0, &cert);
    if (st != PLFRAC_OK) {
        return fail_with(st, "existence certificate");
    }

    double L = 0.0;
    {
        plfrac_kernel* k = nullptr;
        st = plfrac_run_make_kernel(run.get(), &k);
        if (st != PLFRAC_OK) {
            return fail_with(st, "kernel construction");
        }
        KernelPtr kernel(k);
        plfrac_kernel_bound_L(kernel.get(), &L);
    }

    if (cert.a_identically_zero) {
        rep.line("warning: a(t) vanishes at every grid node; (H3) requires a "
                 "not identically zero on every closed subinterval");
    }
    rep.line(std::string("hypothesis (H3): J = ") + fmt(cert.j) +
             (cert.j_attested ? "  [attested]" : "  [computed on grid]") +
             (cert.tail_flag ? "  [tail not converged: UNRELIABLE]" : ""));
    rep.line(std::string("bound B_delta = ") + fmt(cert.b_delta) +
             (cert.b_delta_attested ? "  [attested]" : "  [lattice estimate]"));
    rep.line("kernel bound L = " + fmt(L));
    rep.line("M = L*(alpha-1)*phi_q(B_delta)*J = " + fmt(cert.m));
    rep.line("delta = " + fmt(cert.delta));
    if (cert.satisfied) {
        rep.line("verdict: CERTIFIED (delta >= M): a positive solution exists "
                 "with 0 <= u/(1+t^(alpha-1)) <= delta and 0 <= "
                 "u'/(1+t^(alpha-1)) <= delta" +
                 std::string(cert.tail_flag ? " [UNRELIABLE: J truncation did "
                                              "not converge]"
                                            : ""));
    } else {
        rep.line("verdict: NOT CERTIFIED (delta < M; try delta >= " +
                 fmt_short(cert.m) + ")");
    }

    if (!rep.save(plfrac_run_report_path(run.get()))) {
        std::cerr << "error: cannot write report file\n";
        return kExitUsage;
    }
    return cert.satisfied ? kExitOk : kExitNotSatisfied;
}

// ---------------------------------------------------------------- solve ----

int cmd_solve(const std::string& config_path, bool with_oracle,
              const std::string& csv_override) {
    plfrac_status st;
    RunPtr run = load_run(config_path, &st);
    if (!run) {
        return fail_with(st, "loading config");
    }

    plfrac_solution* raw = nullptr;
    st = plfrac_run_solve(run.get(), &raw);
    SolutionPtr sol(raw);
    if (st != PLFRAC_OK) {
        return fail_with(st, "solve");
    }

    const size_t n = plfrac_solution_node_count(sol.get());
    std::vector<double> t(n), u(n), uprime(n);
    plfrac_solution_copy(sol.get(), t.data(), u.data(), uprime.data(), n);
    const double alpha = plfrac_run_alpha(run.get());

    Report rep;
    const bool converged = plfrac_solution_converged(sol.get()) != 0;
    rep.line(std::string("converged = ") + (converged ? "true" : "false") +
             ", iterations = " +
             std::to_string(plfrac_solution_iterations(sol.get())) +
             ", final_step = " + fmt(plfrac_solution_final_step(sol.get())));

    plfrac_residuals res{};
    st = plfrac_run_residuals(run.get(), sol.get(), &res);
    if (st != PLFRAC_OK) {
        return fail_with(st, "residual report");
    }
    rep.line("fixed_point_residual = " + fmt(res.fixed_point));
    rep.line("bc_u0 = " + fmt(res.bc_u0) + ", bc_up0 = " + fmt(res.bc_up0));
    rep.line("multipoint_gap = " + fmt(res.multipoint_gap));
    rep.line("dalpha0_gap = " + fmt(res.dalpha0_gap) +
             "  (diagnostic only; finite-difference noise dominates near 0)");
    rep.line("solution_norm = " + fmt(plfrac_solution_norm(sol.get())));

    if (plfrac_run_has_delta(run.get())) {
        const double delta = plfrac_run_delta(run.get());
        double max_wu = 0.0, max_wup = 0.0, min_u = 0.0, min_up = 0.0;
        for (size_t k = 0; k < n; ++k) {
            const double w = 1.0 + std::pow(t[k], alpha - 1.0);
            max_wu = std::max(max_wu, u[k] / w);
            max_wup = std::max(max_wup, uprime[k] / w);
            min_u = std::min(min_u, u[k]);
            min_up = std::min(min_up, uprime[k]);
        }
        const bool bounds_hold =
            min_u >= 0.0 && min_up >= 0.0 && max_wu <= delta && max_wup <= delta;
        rep.line("delta_bounds (0 <= u/(1+t^(alpha-1)) <= delta pointwise, "
                 "same for u'): " +
                 std::string(bounds_hold ? "hold" : "VIOLATED") +
                 "  [max weighted u = " + fmt_short(max_wu) +
                 ", max weighted u' = " + fmt_short(max_wup) +
                 ", delta = " + fmt_short(delta) + "]");
    }

    if (with_oracle) {
        plfrac_solution* oraw = nullptr;
        st = plfrac_run_solve_oracle(run.get(), &oraw);
        SolutionPtr oracle(oraw);
        if (st != PLFRAC_OK) {
            return fail_with(st, "direct linear solve (--oracle)");
        }
        std::vector<double> ou(n), oup(n);
        plfrac_solution_copy(oracle.get(), nullptr, ou.data(), oup.data(), n);
        double disc = 0.0;
        for (size_t k = 0; k < n; ++k) {
            const double w = 1.0 + std::pow(t[k], alpha - 1.0);
            disc = std::max(disc, std::abs(u[k] - ou[k]) / w);
            disc = std::max(disc, std::abs(uprime[k] - oup[k]) / w);
        }
        rep.line("oracle_discrepancy = " + fmt(disc) +
                 "  (iteration vs direct dense solve, weighted norm)");
    }

    std::string csv_path =
        csv_override.empty() ? plfrac_run_csv_path(run.get()) : csv_override;
    if (!csv_path.empty()) {
        if (!write_csv(csv_path, alpha, n, t, u, uprime)) {
            std::cerr << "error: cannot write CSV to " << csv_path << "\n";
            return kExitUsage;
        }
        rep.line("csv written: " + csv_path +
                 (converged ? "" : "  (solver did NOT converge; partial data)"));
    }

    if (!rep.save(plfrac_run_report_path(run.get()))) {
        std::cerr << "error: cannot write report file\n";
        return kExitUsage;
    }
    return converged ? kExitOk : kExitNoConvergence;
}

// ----------------------------------------------------------- identities ----

struct IdentityCheck {
    std::string name;
    double observed;
    double tolerance;
    bool pass;
};

int cmd_identities(const std::string& config_path) {
    // Grid defaults tuned for the identity suite; a config overrides them.
    double s_max = 4.0;
    size_t intervals = 1024;
    double grading = 2.0;
    if (!config_path.empty()) {
        plfrac_status st;
        RunPtr run = load_run(config_path, &st);
        if (!run) {
            return fail_with(st, "loading config");
        }
        s_max = plfrac_run_grid_s_max(run.get());
        intervals = plfrac_run_grid_intervals(run.get());
        grading = plfrac_run_grid_grading(run.get());
    }

    plfrac_grid* graw = nullptr;
    plfrac_status st = plfrac_grid_create_graded(s_max, intervals, grading, &graw);
    if (st != PLFRAC_OK) {
        return fail_with(st, "grid construction");
    }
    GridPtr grid(graw);
    const size_t n = plfrac_grid_node_count(grid.get());
    std::vector<double> t(n);
    plfrac_grid_copy_nodes(grid.get(), t.data(), n);

    // Identity tolerances are stated for N = 1024; the quadrature converges
    // at second order, so coarser grids scale them by (1024/N)^2.
    const double scale =
        std::max(1.0, (1024.0 / static_cast<double>(intervals)) *
                          (1024.0 / static_cast<double>(intervals)));
    std::vector<IdentityCheck> checks;

    {
        // Semigroup: I^{1/2} I^{1/2} 1 = I^1 1.
        std::vector<double> ones(n, 1.0), half(n), halfhalf(n), one(n);
        plfrac_rl_integral(grid.get(), ones.data(), 0.5, half.data());
        plfrac_rl_integral(grid.get(), half.data(), 0.5, halfhalf.data());
        plfrac_rl_integral(grid.get(), ones.data(), 1.0, one.data());
        double err = 0.0;
        for (size_t k = 0; k < n; ++k) {
            err = std::max(err, std::abs(halfhalf[k] - one[k]));
        }
        const double tol = 1e-3 * scale;
        checks.push_back({"semigroup I^0.5 I^0.5 [1] vs I^1 [1] (max abs)",
                          err, tol, err <= tol});
    }
    {
        // Power law: D^{1/2} t^{1/2} = Gamma(3/2) (constant).
        std::vector<double> f(n), d(n);
        for (size_t k = 0; k < n; ++k) {
            f[k] = std::sqrt(t[k]);
        }
        plfrac_rl_derivative(grid.get(), f.data(), 0.5, d.data());
        double exact = 0.0;
        plfrac_gamma(1.5, &exact);
        double err = 0.0;
        for (size_t k = 2; k < n; ++k) { // first interior node excluded:
            // its stencil spans the boundary layer of the kernel and carries
            // an O(1) self-similar error independent of N
            err = std::max(err, std::abs(d[k] - exact) / exact);
        }
        const double tol = 1e-3;
        checks.push_back({"power law D^0.5 [t^0.5] = Gamma(3/2) (max rel, "
                          "interior nodes)",
                          err, tol, err <= tol});
    }
    {
        // D^{1/2} 1 = t^{-1/2} / Gamma(1/2).
        std::vector<double> ones(n, 1.0), d(n);
        plfrac_rl_derivative(grid.get(), ones.data(), 0.5, d.data());
        double g_half = 0.0;
        plfrac_gamma(0.5, &g_half);
        double err = 0.0;
        for (size_t k = 0; k < n; ++k) {
            if (t[k] < 0.5) {
                continue;
            }
            const double exact = 1.0 / (std::sqrt(t[k]) * g_half);
            err = std::max(err, std::abs(d[k] - exact) / exact);
        }
        const double tol = 1e-2 * scale;
        checks.push_back({"D^0.5 [1] = t^-0.5/Gamma(1/2) (max rel, t >= 0.5)",
                          err, tol, err <= tol});
    }
    {
        // Kernel bounds on the built-in reference kernel (alpha = 5/2,
        // beta = 1/2, eta = [1/3, 1/3], xi = [1/3, 2/3]):
        // 0 <= G/(1+t^{alpha-1}) <= L and 0 <= G_t/(1+t^{alpha-1}) <= (alpha-1)L.
        const double alpha = 2.5;
        const double etas[2] = {1.0 / 3.0, 1.0 / 3.0};
        const double xis[2] = {1.0 / 3.0, 2.0 / 3.0};
        plfrac_kernel* kraw = nullptr;
        st = plfrac_kernel_create(alpha, 0.5, etas, xis, 2, &kraw);
        if (st != PLFRAC_OK) {
            return fail_with(st, "reference kernel construction");
        }
        KernelPtr kernel(kraw);
        double L = 0.0;
        plfrac_kernel_bound_L(kernel.get(), &L);

        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> dist_t(0.0, s_max);
        std::uniform_real_distribution<double> dist_s(0.0, 2.0 * s_max);
        const int samples = 100000;
        int violations_g = 0, violations_gt = 0;
        double max_g = 0.0, max_gt = 0.0;
        for (int i = 0; i < samples; ++i) {
            const double tt = dist_t(rng);
            const double ss = dist_s(rng);
            const double w = 1.0 + std::pow(tt, alpha - 1.0);
            double g = 0.0, gt = 0.0;
            plfrac_kernel_eval_g(kernel.get(), tt, ss, &g);
            plfrac_kernel_eval_gt(kernel.get(), tt, ss, &gt);
            const double wg = g / w;
            const double wgt = gt / w;
            max_g = std::max(max_g, wg);
            max_gt = std::max(max_gt, wgt);
            if (wg < 0.0 || wg > L * (1.0 + 1e-9)) {
                ++violations_g;
            }
            if (wgt < 0.0 || wgt > (alpha - 1.0) * L * (1.0 + 1e-9)) {
                ++violations_gt;
            }
        }
        checks.push_back({"kernel bound sweep: max G/(1+t^1.5) vs L = " + fmt(L) +
                              " (violations out of 100000: " +
                              std::to_string(violations_g) + ")",
                          max_g, L * (1.0 + 1e-9), violations_g == 0});
        checks.push_back({"kernel bound sweep: max G_t/(1+t^1.5) vs (alpha-1)L = " +
                              fmt(1.5 * L) + " (violations out of 100000: " +
                              std::to_string(violations_gt) + ")",
                          max_gt, 1.5 * L * (1.0 + 1e-9), violations_gt == 0});
    }

    Report rep;
    rep.line("identity suite on grid: S_max = " + fmt_short(s_max) +
             ", N = " + std::to_string(intervals) +
             ", grading = " + fmt_short(grading) +
             (scale > 1.0 ? "  (tolerances scaled by " + fmt_short(scale) + ")"
                          : ""));
    bool all_pass = true;
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        rep.line(std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name +
                 ": observed " + fmt_short(c.observed) + " vs tolerance " +
                 fmt_short(c.tolerance));
    }
    rep.line(all_pass ? "identity suite: all checks passed"
                      : "identity suite: FAILURES present");
    return all_pass ? kExitOk : kExitNotSatisfied;
}

// ------------------------------------------------------------ example41 ----

int cmd_example41() {
    const double alpha = 2.5;
    const double beta = 0.5;
    const double etas[2] = {1.0 / 3.0, 1.0 / 3.0};
    const double xis[2] = {1.0 / 3.0, 2.0 / 3.0};

    plfrac_kernel* kraw = nullptr;
    plfrac_status st = plfrac_kernel_create(alpha, beta, etas, xis, 2, &kraw);
    if (st != PLFRAC_OK) {
        return fail_with(st, "reference kernel construction");
    }
    KernelPtr kernel(kraw);

    double threshold = 0.0;
    plfrac_gamma(alpha + beta - 1.0, &threshold);
    double delta_h1 = 0.0, L = 0.0;
    plfrac_kernel_delta(kernel.get(), &delta_h1);
    plfrac_kernel_bound_L(kernel.get(), &L);
    const double sum = threshold - delta_h1;

    // With p = 2 and J = 1 (attested), M = (alpha-1) L B_delta and the
    // attested bound is B_delta = (3 delta + 1)/9; the minimal certified
    // radius solves delta = (alpha-1) L (3 delta + 1)/9.
    const double m_coeff = (alpha - 1.0) * L; // = 3/sqrt(pi)
    const double sqrt_pi = std::sqrt(M_PI);
    const double delta_star = 1.0 / (3.0 * (sqrt_pi - 1.0));
    const double b_delta_star = (3.0 * delta_star + 1.0) / 9.0;

    Report rep;
    rep.line("built-in reference instance: alpha = 5/2, beta = 1/2, "
             "eta = [1/3, 1/3], xi = [1/3, 2/3], p = 2, J = 1 (attested)");
    rep.line("multipoint_sum = " + fmt(sum) + "  (= 1/3 < Gamma(2) = " +
             fmt(threshold) + ": hypothesis (H1) holds)");
    rep.line("Delta = " + fmt(delta_h1) + "  (= 2/3)");
    rep.line("L = " + fmt(L) + "  (= 2/sqrt(pi) ~ 1.128)");
    rep.line("M_over_B_delta = " + fmt(m_coeff) +
             "  (M = (3/sqrt(pi)) B_delta ~ 1.693 B_delta with J = 1)");
    rep.line("delta_star = " + fmt(delta_star) +
             "  (minimal certified radius, = 1/(3(sqrt(pi)-1)) ~ 0.4315)");
    rep.line("B_delta_star = " + fmt(b_delta_star) + "  (= 1/" +
             fmt_short(1.0 / b_delta_star) + " ~ 1/3.922)");
    rep.line("");
    rep.line("note: this instance takes gamma = 1 and asserts the (H3) "
             "integral J = int_0^inf phi_q(I^1 a)(s) ds = 1, but for gamma = 1 "
             "the inner integral I^1 a is nondecreasing and eventually "
             "positive for every admissible a not identically zero, so the "
             "outer integral diverges no matter which a is chosen (a is never "
             "specified). The constants above therefore treat J = 1 as an "
             "attested input, not a computed quantity; running `check` with "
             "gamma = 1 and a concrete a raises the tail-divergence flag and "
             "marks the certificate unreliable.");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-point p-Laplacian fractional boundary value problems on "
                 "[0, inf): hypothesis checks, existence certificates, and "
                 "fixed-point solves (library version " +
                 std::string(plfrac_version()) + ")"};
    app.require_subcommand(1);

    std::string config_path;
    std::string csv_override;
    bool with_oracle = false;

    CLI::App* check =
        app.add_subcommand("check", "verify hypotheses and the existence "
                                    "certificate delta >= M");
    check->add_option("--config", config_path, "JSON run configuration")
        ->required();

    CLI::App* solve = app.add_subcommand(
        "solve", "solve the fixed-point integral equation by damped Picard "
                 "iteration");
    solve->add_option("--config", config_path, "JSON run configuration")
        ->required();
    solve->add_flag("--oracle", with_oracle,
                    "cross-check against the direct dense solve (p = 2, "
                    "affine f only)");
    solve->add_option("--csv", csv_override,
                      "write the solution CSV here (overrides outputs.csv_path)");

    CLI::App* identities = app.add_subcommand(
        "identities", "run the fractional-identity and kernel-bound suites");
    identities->add_option("--config", config_path,
                           "JSON run configuration (grid settings are used)");

    CLI::App* example41 = app.add_subcommand(
        "example41", "reproduce the built-in reference instance's constants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // remap CLI11's exit codes onto the documented contract
        // (0 for --help, 1 for every usage error)
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (check->parsed()) {
        return cmd_check(config_path);
    }
    if (solve->parsed()) {
        return cmd_solve(config_path, with_oracle, csv_override);
    }
    if (identities->parsed()) {
        return cmd_identities(config_path);
    }
    if (example41->parsed()) {
        return cmd_example41();
    }
    return kExitUsage;
}
