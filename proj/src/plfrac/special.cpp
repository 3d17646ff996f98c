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
#include "plfrac/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace plfrac {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's widely published set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Core approximation, valid for x >= 0.5.
double lanczos_gamma(double x) {
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        acc += kLanczos[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    constexpr double kSqrtTwoPi = 2.5066282746310002;
    return kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

} // namespace

double gamma_fn(double x) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw std::invalid_argument("gamma_fn: argument must be finite and > 0, got " +
                                    std::to_string(x));
    }
    if (x < 0.5) {
        // Reflection keeps the Lanczos core on x >= 0.5 where it is accurate.
        // sin(pi*x) > 0 on (0, 0.5), no pole risk here.
        constexpr double kPi = 3.141592653589793238462643383279502884;
        return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
    }
    return lanczos_gamma(x);
}

double phi_p(double s, double p) {
    if (!std::isfinite(p) || p <= 1.0) {
        throw std::invalid_argument("phi_p: p must be finite and > 1, got " + std::to_string(p));
    }
    if (!std::isfinite(s)) {
        throw std::invalid_argument("phi_p: s must be finite");
    }
    if (p == 2.0) return s; // identity map, exact
    if (s == 0.0) return 0.0;
    return std::copysign(std::pow(std::fabs(s), p - 1.0), s);
}

double phi_q(double s, double p) {
    if (!std::isfinite(p) || p <= 1.0) {
        throw std::invalid_argument("phi_q: p must be finite and > 1, got " + std::to_string(p));
    }
    return phi_p(s, p / (p - 1.0));
}

} // namespace plfrac
