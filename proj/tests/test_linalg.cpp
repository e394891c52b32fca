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

#include <cmath>
#include <doctest.h>

#include "xailab/error.hpp"
#include "xailab/linalg.hpp"
#include "xailab/textio.hpp"

using namespace xailab;

TEST_CASE("matrix storage is row major with working row accessors") {
  Matrix m(2, 3, 0.0);
  m(0, 0) = 1.0;
  m(0, 2) = 3.0;
  m(1, 1) = 5.0;
  CHECK(m.row(0) == Vector{1.0, 0.0, 3.0});
  m.set_row(1, {4.0, 5.0, 6.0});
  CHECK(m(1, 0) == 4.0);
  CHECK(m(1, 2) == 6.0);
}

TEST_CASE("dot, norm2 and matvec agree with hand values") {
  CHECK(dot({1.0, 2.0, 3.0}, {4.0, -5.0, 6.0}) == doctest::Approx(12.0));
  CHECK(norm2({3.0, 4.0}) == doctest::Approx(5.0));
  Matrix a(2, 3, 0.0);
  a.set_row(0, {1.0, 2.0, 3.0});
  a.set_row(1, {4.0, 5.0, 6.0});
  const Vector ax = matvec(a, {1.0, 1.0, 1.0});
  CHECK(ax[0] == doctest::Approx(6.0));
  CHECK(ax[1] == doctest::Approx(15.0));
  const Vector atx = matvec_transposed(a, {1.0, 2.0});
  CHECK(atx[0] == doctest::Approx(9.0));
  CHECK(atx[1] == doctest::Approx(12.0));
  CHECK(atx[2] == doctest::Approx(15.0));
}

TEST_CASE("gaussian elimination solves a classic 3x3 system") {
  Matrix a(3, 3, 0.0);
  a.set_row(0, {2.0, 1.0, -1.0});
  a.set_row(1, {-3.0, -1.0, 2.0});
  a.set_row(2, {-2.0, 1.0, 2.0});
  const Vector x = solve_linear_system(a, {8.0, -11.0, -3.0});
  CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(x[2] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("singular systems are rejected") {
  Matrix a(2, 2, 0.0);
  a.set_row(0, {1.0, 2.0});
  a.set_row(1, {2.0, 4.0});
  CHECK_THROWS_AS((void)solve_linear_system(a, {1.0, 2.0}), Error);
}

// Exact normal-equation solution computed by hand in rational arithmetic:
// X = [1 0; 1 1; 1 2; 1 3], y = [1 3 5 4], w = [1 2 1 3]
// gives beta = (58/31, 26/31).
TEST_CASE("weighted least squares matches a hand-solved system") {
  Matrix x(4, 2, 0.0);
  x.set_row(0, {1.0, 0.0});
  x.set_row(1, {1.0, 1.0});
  x.set_row(2, {1.0, 2.0});
  x.set_row(3, {1.0, 3.0});
  const Vector y = {1.0, 3.0, 5.0, 4.0};
  const Vector w = {1.0, 2.0, 1.0, 3.0};
  const Vector beta = weighted_least_squares(x, y, w, 0.0, -1);
  CHECK(beta[0] == doctest::Approx(58.0 / 31.0).epsilon(1e-12));
  CHECK(beta[1] == doctest::Approx(26.0 / 31.0).epsilon(1e-12));
}

// Same system with ridge 0.5 applied to the slope only (intercept column 0
// unpenalized): beta = (256/131, 104/131).
TEST_CASE("ridge skips the unpenalized column") {
  Matrix x(4, 2, 0.0);
  x.set_row(0, {1.0, 0.0});
  x.set_row(1, {1.0, 1.0});
  x.set_row(2, {1.0, 2.0});
  x.set_row(3, {1.0, 3.0});
  const Vector y = {1.0, 3.0, 5.0, 4.0};
  const Vector w = {1.0, 2.0, 1.0, 3.0};
  const Vector beta = weighted_least_squares(x, y, w, 0.5, 0);
  CHECK(beta[0] == doctest::Approx(256.0 / 131.0).epsilon(1e-12));
  CHECK(beta[1] == doctest::Approx(104.0 / 131.0).epsilon(1e-12));
}

TEST_CASE("interpolating fit drives residuals to zero") {
  Matrix x(3, 3, 0.0);
  x.set_row(0, {1.0, 1.0, 1.0});
  x.set_row(1, {1.0, 2.0, 4.0});
  x.set_row(2, {1.0, 3.0, 9.0});
  const Vector y = {2.0, 3.0, 6.0};
  const Vector beta = weighted_least_squares(x, y, {1.0, 1.0, 1.0}, 0.0, -1);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(dot(x.row(i), beta) == doctest::Approx(y[i]).epsilon(1e-10));
}

TEST_CASE("rank-deficient designs without ridge are rejected") {
  Matrix x(3, 2, 0.0);
  x.set_row(0, {1.0, 2.0});
  x.set_row(1, {2.0, 4.0});
  x.set_row(2, {3.0, 6.0});
  CHECK_THROWS_AS(
      (void)weighted_least_squares(x, {1.0, 2.0, 3.0}, {1.0, 1.0, 1.0}, 0.0,
                                   -1),
      Error);
}

TEST_CASE("extreme weight ratios keep full precision") {
  // Two points fix the line exactly; a third with negligible weight must not
  // disturb it. Normal equations at weight ratio 1e12 lose this.
  Matrix x(3, 2, 0.0);
  x.set_row(0, {1.0, 0.0});
  x.set_row(1, {1.0, 1.0});
  x.set_row(2, {1.0, 2.0});
  const Vector y = {1.0, 2.0, 100.0};
  const Vector beta =
      weighted_least_squares(x, y, {1e12, 1e12, 1e-6}, 0.0, -1);
  CHECK(beta[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(beta[1] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("format_double round-trips through parse_double") {
  for (const double v : {0.0, 1.0, -1.5, 0.1, 1e-300, 3.141592653589793,
                         123456789.123456789, -2.2250738585072014e-308}) {
    bool ok = false;
    CHECK(parse_double(format_double(v), &ok) == v);
    CHECK(ok);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
}
