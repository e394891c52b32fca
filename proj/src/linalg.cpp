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

#include "xailab/linalg.hpp"

#include <cmath>
#include <cstdlib>

#include "xailab/error.hpp"

namespace xailab {

double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

Vector matvec(const Matrix& a, const Vector& x) {
  Vector out(a.rows, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) s += a(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

Vector matvec_transposed(const Matrix& a, const Vector& x) {
  Vector out(a.cols, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double xi = x[i];
    for (std::size_t j = 0; j < a.cols; ++j) out[j] += a(i, j) * xi;
  }
  return out;
}

Vector solve_linear_system(Matrix a, Vector b) {
  if (a.rows != a.cols || a.rows == 0 || b.size() != a.rows)
    throw Error("linalg", "solve_linear_system requires a square system");
  const std::size_t n = a.rows;
  double scale = 0.0;
  for (double v : a.data) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) throw Error("linalg", "singular system: all-zero matrix");

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
    if (std::abs(a(pivot, k)) < 1e-13 * scale)
      throw Error("linalg", "singular system: pivot underflow");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      std::swap(b[k], b[pivot]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = a(i, k) / a(k, k);
      if (m == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= m * a(k, j);
      b[i] -= m * b[k];
    }
  }
  Vector x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

Vector weighted_least_squares(const Matrix& x, const Vector& y,
                              const Vector& w, double ridge,
                              long unpenalized_col) {
  const std::size_t m = x.rows;
  const std::size_t p = x.cols;
  if (m == 0 || p == 0 || y.size() != m || w.size() != m)
    throw Error("linalg", "weighted_least_squares shape mismatch");
  if (ridge < 0.0) throw Error("linalg", "ridge strength must be >= 0");

  std::size_t n_aug = 0;
  if (ridge > 0.0)
    for (std::size_t j = 0; j < p; ++j)
      if (static_cast<long>(j) != unpenalized_col) ++n_aug;
  if (m + n_aug < p)
    throw Error("linalg", "underdetermined system: fewer rows than columns");

  // Scale rows by sqrt(w); ridge becomes sqrt(ridge) * e_j rows appended
  // below the data block.
  Matrix a(m + n_aug, p, 0.0);
  Vector b(m + n_aug, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (w[i] < 0.0) throw Error("linalg", "negative weight");
    const double s = std::sqrt(w[i]);
    for (std::size_t j = 0; j < p; ++j) a(i, j) = s * x(i, j);
    b[i] = s * y[i];
  }
  if (ridge > 0.0) {
    const double s = std::sqrt(ridge);
    std::size_t r = m;
    for (std::size_t j = 0; j < p; ++j) {
      if (static_cast<long>(j) == unpenalized_col) continue;
      a(r, j) = s;
      ++r;
    }
  }

  // Householder QR, applying the reflections to b as we go.
  const std::size_t rows = a.rows;
  Vector diag(p, 0.0);
  Vector v(rows, 0.0);
  for (std::size_t k = 0; k < p; ++k) {
    double colnorm = 0.0;
    for (std::size_t i = k; i < rows; ++i) colnorm += a(i, k) * a(i, k);
    colnorm = std::sqrt(colnorm);
    if (colnorm == 0.0) {
      diag[k] = 0.0;
      continue;
    }
    const double alpha = a(k, k) >= 0.0 ? -colnorm : colnorm;
    double vtv = 0.0;
    v[k] = a(k, k) - alpha;
    vtv += v[k] * v[k];
    for (std::size_t i = k + 1; i < rows; ++i) {
      v[i] = a(i, k);
      vtv += v[i] * v[i];
    }
    if (vtv > 0.0) {
      for (std::size_t j = k + 1; j < p; ++j) {
        double c = 0.0;
        for (std::size_t i = k; i < rows; ++i) c += v[i] * a(i, j);
        c = 2.0 * c / vtv;
        for (std::size_t i = k; i < rows; ++i) a(i, j) -= c * v[i];
      }
      double c = 0.0;
      for (std::size_t i = k; i < rows; ++i) c += v[i] * b[i];
      c = 2.0 * c / vtv;
      for (std::size_t i = k; i < rows; ++i) b[i] -= c * v[i];
    }
    a(k, k) = alpha;
    diag[k] = alpha;
    for (std::size_t i = k + 1; i < rows; ++i) a(i, k) = 0.0;
  }

  double maxdiag = 0.0;
  for (std::size_t k = 0; k < p; ++k) maxdiag = std::max(maxdiag, std::abs(diag[k]));
  if (maxdiag == 0.0)
    throw Error("linalg", "rank-deficient design: zero matrix");
  for (std::size_t k = 0; k < p; ++k)
    if (std::abs(diag[k]) < 1e-13 * maxdiag)
      throw Error("linalg", "rank-deficient design");

  Vector beta(p, 0.0);
  for (std::size_t i = p; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < p; ++j) s -= a(i, j) * beta[j];
    beta[i] = s / a(i, i);
  }
  return beta;
}

}  // namespace xailab
