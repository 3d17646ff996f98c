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
#ifndef PLFRAC_SPECIAL_HPP
#define PLFRAC_SPECIAL_HPP

namespace plfrac {

// Euler gamma function for x > 0 (Lanczos approximation, g = 7, 9 coefficients;
// relative error <= 1e-10 on (0, 50], in practice ~1e-13).
// Throws std::invalid_argument for non-finite or non-positive x.
double gamma_fn(double x);

// p-Laplacian map  phi_p(s) = |s|^{p-2} s,  p > 1.  Odd and strictly increasing.
double phi_p(double s, double p);

// Inverse map  phi_q = (phi_p)^{-1}  with 1/p + 1/q = 1, i.e. q = p/(p-1).
double phi_q(double s, double p);

} // namespace plfrac

#endif
