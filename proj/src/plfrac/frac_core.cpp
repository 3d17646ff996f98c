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
#include "plfrac/frac_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "plfrac/special.hpp"

namespace plfrac {

namespace {

void require_positive_order(double order, const char* who) {
    if (!std::isfinite(order) || order <= 0.0) {
        throw std::invalid_argument(std::string(who) + ": order must be finite and > 0, got " +
                                    std::to_string(order));
    }
}

// Exact moments of the kernel (t-s)^{o-1} over [a, b] (b <= t) against the
// linear hat basis on [a, b] of width h:
//
//   m0 = / b (t-s)^{o-1} ds = ((t-a)^o - (t-b)^o)/o
//        / a
//   m1 = / b (t-s)^{o-1} (s-a) ds = (t-a) m0 - ((t-a)^{o+1} - (t-b)^{o+1})/(o+1)
//        / a
//
// contribution of the interval to the node weights:
//   left node  f(a):  m0 - m1/h      right node f(b):  m1/h
//
// Both are nonnegative (0 <= m1 <= h*m0). For b = t the singular endpoint is
// integrated exactly ((t-b)^o = 0); o = 1 yields the trapezoid rule.
struct IntervalMoments {
    double left;
    double right;
};

inline IntervalMoments kernel_moments(double t, double a, double b, double o) {
    const double da = t - a;
    const double db = t - b;
    const double h = b - a;
    const double m0 = (std::pow(da, o) - std::pow(db, o)) / o;
    const double m1 = da * m0 - (std::pow(da, o + 1.0) - std::pow(db, o + 1.0)) / (o + 1.0);
    const double r = m1 / h;
    return {m0 - r, r};
}

// Fills row k of the product-quadrature weight table (entries j = 0..k).
void frac_row(const std::vector<double>& t, double order, double inv_gamma, std::size_t k,
              double* row) {
    const double tk = t[k];
    for (std::size_t j = 0; j < k; ++j) {
        const IntervalMoments m = kernel_moments(tk, t[j], t[j + 1], order);
        row[j] += m.left * inv_gamma;
        row[j + 1] += m.right * inv_gamma;
    }
}

// Symmetric stencil width for the n-th finite-difference derivative: odd so
// interior windows are centered; >= n+2 points for second-order consistency.
std::size_t stencil_points(int n) {
    const std::size_t m = static_cast<std::size_t>(n) + 2;
    return (m % 2 == 0) ? m + 1 : m;
}

// n-th derivative of samples g on nodes t, Fornberg weights on sliding
// windows: centered at interior nodes, clamped one-sided at the ends.
std::vector<double> fd_derivative(const std::vector<double>& t, const std::vector<double>& g,
                                  int n) {
    const std::size_t count = t.size();
    const std::size_t m = std::min(stencil_points(n), count);
    std::vector<double> out(count, 0.0), w(m, 0.0);
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t lo = (k > (m - 1) / 2) ? k - (m - 1) / 2 : 0;
        lo = std::min(lo, count - m);
        fd_weights(t[k], t.data() + lo, m, n, w.data());
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i) acc += w[i] * g[lo + i];
        out[k] = acc;
    }
    return out;
}

} // namespace

void fd_weights(double z, const double* x, std::size_t m, int der, double* w_out) {
    // Fornberg (1988), weights for derivatives 0..der at z from nodes x[0..m-1].
    if (m == 0 || der < 0 || static_cast<std::size_t>(der) >= m) {
        throw std::invalid_argument("fd_weights: need der < node count");
    }
    const int nd = static_cast<int>(m) - 1;
    std::vector<double> c(m * (der + 1), 0.0);
    auto C = [&](int i, int j) -> double& { return c[static_cast<std::size_t>(i) * (der + 1) + j]; };

    double c1 = 1.0;
    double c4 = x[0] - z;
    C(0, 0) = 1.0;
    for (int i = 1; i <= nd; ++i) {
        const int mn = std::min(i, der);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    C(i, k) = c1 * (k * C(i - 1, k - 1) - c5 * C(i - 1, k)) / c2;
                }
                C(i, 0) = -c1 * c5 * C(i - 1, 0) / c2;
            }
            for (int k = mn; k >= 1; --k) {
                C(j, k) = (c4 * C(j, k) - k * C(j, k - 1)) / c3;
            }
            C(j, 0) = c4 * C(j, 0) / c3;
        }
        c1 = c2;
    }
    for (std::size_t i = 0; i < m; ++i) w_out[i] = C(static_cast<int>(i), der);
}

SampledFunction rl_integral(const SampledFunction& f, double order) {
    require_positive_order(order, "rl_integral");
    f.validate();
    const std::vector<double>& t = f.grid->nodes();
    const std::size_t count = t.size();
    const double inv_gamma = 1.0 / gamma_fn(order);

    SampledFunction out = SampledFunction::zeros(f.grid);
    std::vector<double> row(count, 0.0);
    for (std::size_t k = 1; k < count; ++k) {
        std::fill(row.begin(), row.begin() + k + 1, 0.0);
        frac_row(t, order, inv_gamma, k, row.data());
        double acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) acc += row[j] * f.values[j];
        out.values[k] = acc;
    }
    return out;
}

double rl_integral_at(const SampledFunction& f, double order, double x) {
    require_positive_order(order, "rl_integral_at");
    f.validate();
    const std::vector<double>& t = f.grid->nodes();
    if (!std::isfinite(x) || x < 0.0 || x > f.grid->s_max()) {
        throw std::invalid_argument("rl_integral_at: point outside [0, S_max]");
    }
    if (x == 0.0) return 0.0;

    const double inv_gamma = 1.0 / gamma_fn(order);
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < t.size() && t[j] < x; ++j) {
        const double a = t[j];
        const double b = std::min(t[j + 1], x);
        // Moments over the (possibly partial) interval [a, b] against the
        // linear interpolant through (t_j, f_j), (t_{j+1}, f_{j+1}).
        const double da = x - a;
        const double db = x - b;
        const double m0 = (std::pow(da, order) - std::pow(db, order)) / order;
        const double m1 =
            da * m0 - (std::pow(da, order + 1.0) - std::pow(db, order + 1.0)) / (order + 1.0);
        const double slope = (f.values[j + 1] - f.values[j]) / (t[j + 1] - t[j]);
        acc += (f.values[j] * m0 + slope * m1) * inv_gamma;
    }
    return acc;
}

Matrix frac_integral_weights(const Grid& grid, double order) {
    require_positive_order(order, "frac_integral_weights");
    const std::vector<double>& t = grid.nodes();
    const std::size_t count = t.size();
    const double inv_gamma = 1.0 / gamma_fn(order);
    Matrix w(count, count);
    for (std::size_t k = 1; k < count; ++k) {
        frac_row(t, order, inv_gamma, k, w.row(k));
    }
    return w;
}

SampledFunction rl_derivative(const SampledFunction& f, double order) {
    if (!std::isfinite(order) || order <= 0.0 || order > 3.0) {
        throw std::invalid_argument("rl_derivative: supported order range is (0, 3], got " +
                                    std::to_string(order));
    }
    f.validate();

    // Integer orders: I^{n-order} is the identity and D^order is the classical
    // derivative; differencing f directly avoids a needless quadrature pass.
    const double rounded = std::round(order);
    if (std::fabs(order - rounded) < 1e-12 && rounded >= 1.0) {
        const int n = static_cast<int>(rounded);
        SampledFunction out{f.grid, fd_derivative(f.grid->nodes(), f.values, n)};
        return out;
    }

    const int n = static_cast<int>(std::floor(order)) + 1;
    SampledFunction g = rl_integral(f, static_cast<double>(n) - order);
    SampledFunction out{f.grid, fd_derivative(f.grid->nodes(), g.values, n)};
    return out;
}

double weighted_sup_norm(const Grid& grid, const double* values, std::size_t count,
                         double alpha) {
    if (!std::isfinite(alpha) || alpha <= 2.0 || alpha > 3.0) {
        throw std::invalid_argument("weighted_sup_norm: alpha must lie in (2, 3], got " +
                                    std::to_string(alpha));
    }
    if (count != grid.node_count()) {
        throw std::invalid_argument("weighted_sup_norm: value count != node count");
    }
    const std::vector<double>& t = grid.nodes();
    double best = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const double w = std::fabs(values[k]) / (1.0 + std::pow(t[k], alpha - 1.0));
        best = std::max(best, w);
    }
    return best;
}

double weighted_sup_norm(const SampledFunction& u, double alpha) {
    u.validate();
    return weighted_sup_norm(*u.grid, u.values.data(), u.values.size(), alpha);
}

} // namespace plfrac
