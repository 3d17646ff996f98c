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
#include "plfrac/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace plfrac {

namespace {

void validate_nodes(const std::vector<double>& nodes) {
    if (nodes.size() < 17) {
        throw std::invalid_argument("Grid: need at least 16 intervals (17 nodes), got " +
                                    std::to_string(nodes.size() ? nodes.size() - 1 : 0));
    }
    if (nodes.front() != 0.0) {
        throw std::invalid_argument("Grid: first node must be exactly 0");
    }
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
        if (!(nodes[k] < nodes[k + 1]) || !std::isfinite(nodes[k + 1])) {
            throw std::invalid_argument("Grid: nodes must be finite and strictly increasing");
        }
    }
}

} // namespace

Grid::Grid(std::vector<double> nodes, double grading)
    : nodes_(std::move(nodes)), grading_(grading) {
    validate_nodes(nodes_);
    const std::size_t n = nodes_.size();
    weights_.assign(n, 0.0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double h = nodes_[k + 1] - nodes_[k];
        weights_[k] += 0.5 * h;
        weights_[k + 1] += 0.5 * h;
    }
}

std::shared_ptr<const Grid> Grid::graded(double s_max, std::size_t intervals, double grading) {
    if (!std::isfinite(s_max) || s_max <= 0.0) {
        throw std::invalid_argument("Grid::graded: S_max must be finite and > 0");
    }
    if (!std::isfinite(grading) || grading < 1.0) {
        throw std::invalid_argument("Grid::graded: grading must be >= 1");
    }
    if (intervals < 16) {
        throw std::invalid_argument("Grid::graded: need at least 16 intervals");
    }
    std::vector<double> nodes(intervals + 1);
    for (std::size_t k = 0; k <= intervals; ++k) {
        nodes[k] = s_max * std::pow(static_cast<double>(k) / static_cast<double>(intervals),
                                    grading);
    }
    nodes[0] = 0.0;      // exact, regardless of pow rounding
    nodes[intervals] = s_max;
    return std::shared_ptr<const Grid>(new Grid(std::move(nodes), grading));
}

std::shared_ptr<const Grid> Grid::from_nodes(std::vector<double> nodes, double grading) {
    return std::shared_ptr<const Grid>(new Grid(std::move(nodes), grading));
}

SampledFunction SampledFunction::zeros(GridPtr grid) {
    if (!grid) throw std::invalid_argument("SampledFunction: null grid");
    return SampledFunction{grid, std::vector<double>(grid->node_count(), 0.0)};
}

SampledFunction SampledFunction::from(GridPtr grid, const std::function<double(double)>& fn) {
    if (!grid) throw std::invalid_argument("SampledFunction: null grid");
    SampledFunction f{grid, {}};
    f.values.reserve(grid->node_count());
    for (double t : grid->nodes()) f.values.push_back(fn(t));
    f.validate();
    return f;
}

void SampledFunction::validate() const {
    if (!grid) throw std::invalid_argument("SampledFunction: null grid");
    if (values.size() != grid->node_count()) {
        throw std::invalid_argument("SampledFunction: value count " +
                                    std::to_string(values.size()) + " != node count " +
                                    std::to_string(grid->node_count()));
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("SampledFunction: non-finite sample");
        }
    }
}

} // namespace plfrac
