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
#ifndef PLFRAC_ERRORS_HPP
#define PLFRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plfrac {

// Argument-range violations use std::invalid_argument directly.

// Hypothesis (H1) violated: Delta = Gamma(alpha+beta-1) - sum eta_i xi_i^{alpha+beta-2} <= 0.
// Carries the offending sum so callers can report it.
class HypothesisError : public std::runtime_error {
public:
    HypothesisError(const std::string& what, double offending_sum)
        : std::runtime_error(what), sum(offending_sum) {}
    double sum;
};

// A quadrature target looks divergent (non-decaying tail on the truncated half-line),
// or the fixed-point iteration is blowing up.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation not applicable to the given problem (e.g. linear oracle with p != 2).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical breakdown (singular dense system, non-finite intermediate).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed serialized configuration (bad JSON, unknown keys, range violations).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace plfrac

#endif
