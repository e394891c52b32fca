/*
 * Copyright 2026 The xailab authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef XAILAB_LINALG_HPP_
#define XAILAB_LINALG_HPP_

#include <cstddef>
#include <vector>

namespace xailab {

using Vector = std::vector<double>;

// Dense row-major matrix. Small and deliberately minimal: the solvers in
// this project work on systems of at most a few hundred rows.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }

  Vector row(std::size_t i) const {
    return Vector(data.begin() + static_cast<std::ptrdiff_t>(i * cols),
                  data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
  }

  void set_row(std::size_t i, const Vector& v) {
    for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = v[j];
  }
};

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);

Vector matvec(const Matrix& a, const Vector& x);
// Computes a^T x for x of length a.rows.
Vector matvec_transposed(const Matrix& a, const Vector& x);

// Solves a x = b by Gaussian elimination with partial pivoting.
// Throws on (numerically) singular systems.
Vector solve_linear_system(Matrix a, Vector b);

// Weighted least squares min_beta sum_i w_i (y_i - x_i . beta)^2 with an
// optional ridge penalty; the column `unpenalized_col` (pass a negative
// value for none) is excluded from the penalty. Solved by Householder QR
// on the sqrt(w)-scaled design, which tolerates the extreme weight ranges
// the Shapley kernel produces where normal equations would lose rank.
// Throws when the (augmented) design is rank-deficient.
Vector weighted_least_squares(const Matrix& x, const Vector& y,
                              const Vector& w, double ridge,
                              long unpenalized_col);

}  // namespace xailab

#endif  // XAILAB_LINALG_HPP_
