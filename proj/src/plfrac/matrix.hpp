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
#ifndef PLFRAC_MATRIX_HPP
#define PLFRAC_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace plfrac {

// Minimal row-major dense matrix: just enough for quadrature-weight tables.
// Heavy linear algebra (the dense oracle solve) maps this storage into Eigen.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data; // row-major, rows*cols

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }
    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    // y = A x  (x.size() == cols)
    void apply(const double* x, double* y) const {
        for (std::size_t i = 0; i < rows; ++i) {
            const double* r = row(i);
            double acc = 0.0;
            for (std::size_t j = 0; j < cols; ++j) acc += r[j] * x[j];
            y[i] = acc;
        }
    }
};

} // namespace plfrac

#endif
