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
#include "plfrac/functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "plfrac/errors.hpp"

namespace plfrac {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw ConfigError(std::string(what) + " must be finite");
    }
}

} // namespace

double ScalarDesc::eval(double t, double alpha) const {
    switch (kind) {
    case Kind::Constant:
        return value;
    case Kind::Exponential:
        return value * std::exp(-rate * t);
    case Kind::Indicator:
        return t <= cutoff ? value : 0.0;
    case Kind::Weighted:
        return value / (1.0 + std::pow(t, alpha - 1.0));
    }
    throw std::logic_error("unreachable");
}

void ScalarDesc::validate(const char* what) const {
    require_finite(value, what);
    if (value < 0.0) {
        throw ConfigError(std::string(what) + " must be nonnegative");
    }
    if (kind == Kind::Exponential) {
        require_finite(rate, what);
        if (rate < 0.0) {
            throw ConfigError(std::string(what) + ": rate must be nonnegative");
        }
    }
    if (kind == Kind::Indicator) {
        require_finite(cutoff, what);
        if (cutoff <= 0.0) {
            throw ConfigError(std::string(what) + ": cutoff must be positive");
        }
    }
}

double NonlinearityDesc::eval(double t, double u, double v, double alpha) const {
    switch (kind) {
    case Kind::Constant:
        return value;
    case Kind::Affine:
        return c0.eval(t, alpha) + c1.eval(t, alpha) * u + c2.eval(t, alpha) * v;
    case Kind::Example41: {
        const double w = 1.0 + std::pow(t, alpha - 1.0);
        return (2.0 * u / w + v / w + 1.0) / 9.0;
    }
    }
    throw std::logic_error("unreachable");
}

ScalarDesc NonlinearityDesc::coeff0() const {
    switch (kind) {
    case Kind::Constant:
        return ScalarDesc::constant(value);
    case Kind::Affine:
        return c0;
    case Kind::Example41:
        return ScalarDesc::constant(1.0 / 9.0);
    }
    throw std::logic_error("unreachable");
}

ScalarDesc NonlinearityDesc::coeff1() const {
    switch (kind) {
    case Kind::Constant:
        return ScalarDesc::constant(0.0);
    case Kind::Affine:
        return c1;
    case Kind::Example41:
        return ScalarDesc::weighted(2.0 / 9.0);
    }
    throw std::logic_error("unreachable");
}

ScalarDesc NonlinearityDesc::coeff2() const {
    switch (kind) {
    case Kind::Constant:
        return ScalarDesc::constant(0.0);
    case Kind::Affine:
        return c2;
    case Kind::Example41:
        return ScalarDesc::weighted(1.0 / 9.0);
    }
    throw std::logic_error("unreachable");
}

void NonlinearityDesc::validate() const {
    switch (kind) {
    case Kind::Constant:
        require_finite(value, "f.value");
        if (value < 0.0) {
            throw ConfigError("f.value must be nonnegative");
        }
        return;
    case Kind::Affine:
        c0.validate("f.c0");
        c1.validate("f.c1");
        c2.validate("f.c2");
        return;
    case Kind::Example41:
        return;
    }
    throw std::logic_error("unreachable");
}

NonlinearityDesc NonlinearityDesc::constant(double v) {
    NonlinearityDesc d;
    d.kind = Kind::Constant;
    d.value = v;
    return d;
}

NonlinearityDesc NonlinearityDesc::affine(ScalarDesc c0, ScalarDesc c1, ScalarDesc c2) {
    NonlinearityDesc d;
    d.kind = Kind::Affine;
    d.c0 = c0;
    d.c1 = c1;
    d.c2 = c2;
    return d;
}

NonlinearityDesc NonlinearityDesc::example41() {
    NonlinearityDesc d;
    d.kind = Kind::Example41;
    return d;
}

double BDeltaDesc::eval(double delta) const {
    switch (kind) {
    case Kind::None:
        throw std::logic_error("BDeltaDesc::eval called without attestation");
    case Kind::Constant:
        return value;
    case Kind::Linear:
        return intercept + slope * delta;
    case Kind::Example41:
        return (3.0 * delta + 1.0) / 9.0;
    }
    throw std::logic_error("unreachable");
}

void BDeltaDesc::validate() const {
    switch (kind) {
    case Kind::None:
    case Kind::Example41:
        return;
    case Kind::Constant:
        require_finite(value, "b_delta.value");
        if (value < 0.0) {
            throw ConfigError("b_delta.value must be nonnegative");
        }
        return;
    case Kind::Linear:
        require_finite(intercept, "b_delta.intercept");
        require_finite(slope, "b_delta.slope");
        if (intercept < 0.0 || slope < 0.0) {
            throw ConfigError("b_delta coefficients must be nonnegative");
        }
        return;
    }
    throw std::logic_error("unreachable");
}

} // namespace plfrac
