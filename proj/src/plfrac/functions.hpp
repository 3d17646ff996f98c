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
#ifndef PLFRAC_FUNCTIONS_HPP
#define PLFRAC_FUNCTIONS_HPP

namespace plfrac {

// Coefficient functions and nonlinearities are configured as named built-in
// families rather than arbitrary expressions: configs stay auditable, and the
// dense linear oracle can detect the affine case reliably.

// Scalar function of t:
//   Constant     value
//   Exponential  value * exp(-rate * t),              rate >= 0
//   Indicator    value * 1{t <= cutoff},              cutoff > 0
//   Weighted     value / (1 + t^{alpha-1})            (alpha from the problem)
// All families are nonnegative when value >= 0 (enforced by validate()).
struct ScalarDesc {
    enum class Kind { Constant, Exponential, Indicator, Weighted };
    Kind kind = Kind::Constant;
    double value = 0.0;
    double rate = 1.0;   // Exponential only
    double cutoff = 1.0; // Indicator only

    double eval(double t, double alpha) const;
    void validate(const char* what) const;

    static ScalarDesc constant(double v) { return {Kind::Constant, v, 1.0, 1.0}; }
    static ScalarDesc exponential(double v, double rate) {
        return {Kind::Exponential, v, rate, 1.0};
    }
    static ScalarDesc indicator(double v, double cutoff) {
        return {Kind::Indicator, v, 1.0, cutoff};
    }
    static ScalarDesc weighted(double v) { return {Kind::Weighted, v, 1.0, 1.0}; }

    bool operator==(const ScalarDesc&) const = default;
};

// Nonlinearity f(t, u, v):
//   Constant    f = value
//   Affine      f = c0(t) + c1(t) u + c2(t) v
//   Example41   f = (1/9)(2u/(1+t^{alpha-1}) + v/(1+t^{alpha-1}) + 1)
//               (the affine instance c0 = 1/9, c1 = 2/9 weighted, c2 = 1/9
//               weighted; kept as its own kind so configs round-trip verbatim)
// Every kind is affine in (u, v), which the linear oracle exploits; the
// family set matches everything the certificate machinery supports.
struct NonlinearityDesc {
    enum class Kind { Constant, Affine, Example41 };
    Kind kind = Kind::Constant;
    double value = 0.0; // Constant only
    ScalarDesc c0, c1, c2;

    double eval(double t, double u, double v, double alpha) const;
    // Affine decomposition (valid for every kind).
    ScalarDesc coeff0() const;
    ScalarDesc coeff1() const;
    ScalarDesc coeff2() const;
    void validate() const;

    static NonlinearityDesc constant(double v);
    static NonlinearityDesc affine(ScalarDesc c0, ScalarDesc c1, ScalarDesc c2);
    static NonlinearityDesc example41();

    bool operator==(const NonlinearityDesc&) const = default;
};

// User-attested bound B_delta = sup of the weighted nonlinearity over the
// delta-ball (hypothesis (H2) is not machine-checkable in general; an
// attestation is a closed form supplied with the problem).
//   None       no attestation; the lattice sampler estimates a lower bound
//   Constant   B_delta = value
//   Linear     B_delta = intercept + slope * delta
//   Example41  B_delta = (3 delta + 1)/9   (the Linear instance 1/9, 1/3)
struct BDeltaDesc {
    enum class Kind { None, Constant, Linear, Example41 };
    Kind kind = Kind::None;
    double value = 0.0;     // Constant
    double intercept = 0.0; // Linear
    double slope = 0.0;     // Linear

    bool attested() const { return kind != Kind::None; }
    double eval(double delta) const;
    void validate() const;

    bool operator==(const BDeltaDesc&) const = default;
};

} // namespace plfrac

#endif
