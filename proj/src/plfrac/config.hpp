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
#ifndef PLFRAC_CONFIG_HPP
#define PLFRAC_CONFIG_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "plfrac/grid.hpp"
#include "plfrac/problem.hpp"

namespace plfrac {

// JSON run configuration. Shape:
//
// {
//   "problem": {
//     "alpha": 2.5, "beta": 0.5, "gamma": 0.2, "p": 1.5,
//     "etas": [...], "xis": [...],
//     "a":  {"kind": "indicator", "value": 1.0, "cutoff": 1.0},
//     "f":  {"kind": "example41"},
//     "b_delta": {"kind": "example41"},      // optional, default "none"
//     "attested_J": 1.0                       // optional
//   },
//   "grid":   {"S_max": 20.0, "N": 256, "grading": 2.0},          // optional
//   "solver": {"omega": 1.0, "tol": 1e-10, "max_iter": 200},      // optional
//   "delta": 0.5,                                                 // optional
//   "outputs": {"csv_path": "...", "report_path": "..."}          // optional
// }
//
// Scalar descriptors ("a", affine coefficients):
//   {"kind": "constant",    "value": v}            v
//   {"kind": "exponential", "value": v, "rate": r} v e^{-r t}
//   {"kind": "indicator",   "value": v, "cutoff": c} v 1{t <= c}
//   {"kind": "weighted",    "value": v}            v / (1 + t^{alpha-1})
// Nonlinearity descriptors ("f"):
//   {"kind": "constant", "value": v}
//   {"kind": "affine", "c0": <scalar>, "c1": <scalar>, "c2": <scalar>}
//   {"kind": "example41"}
// Unknown keys anywhere are rejected.

struct GridConfig {
    double s_max = 20.0;
    std::size_t n = 256;
    double grading = 2.0;

    bool operator==(const GridConfig&) const = default;
};

struct SolverSettings {
    double omega = 1.0;
    double tol = 1e-10;
    int max_iter = 200;

    bool operator==(const SolverSettings&) const = default;
};

struct OutputConfig {
    std::string csv_path;    // empty = no CSV
    std::string report_path; // empty = stdout only

    bool operator==(const OutputConfig&) const = default;
};

struct RunConfig {
    ProblemSpec problem;
    GridConfig grid;
    SolverSettings solver;
    std::optional<double> delta; // required by check/solve commands
    OutputConfig outputs;

    bool operator==(const RunConfig&) const = default;
};

// Parse/validate a config document. Throws ConfigError on malformed JSON,
// unknown keys, missing required fields, or range violations.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

// Canonical serialization (2-space indent); parse_config(serialize_config(c))
// reproduces c field-for-field.
std::string serialize_config(const RunConfig& cfg);

// Builds the graded grid described by the config.
GridPtr make_grid(const GridConfig& cfg);

} // namespace plfrac

#endif
