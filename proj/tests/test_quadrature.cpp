// Copyright 2026 The pcml Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcml/quadrature.hpp"

#include <cmath>

#include <doctest.h>

#include "pcml/errors.hpp"

using pcml::integrate_adaptive;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("polynomial is integrated to machine accuracy") {
  auto r = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, {},
                              1e-12);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r.error_estimate <= 1e-12);
}

TEST_CASE("kinked integrand converges once split at the kink") {
  auto f = [](double x) { return std::abs(x - 0.3); };
  const double splits[] = {0.3};
  auto r = integrate_adaptive(f, 0.0, 1.0, splits, 1e-13);
  // int |x-0.3| over [0,1] = 0.09/2 + 0.49/2
  CHECK(r.value == doctest::Approx(0.29).epsilon(1e-13));
}

TEST_CASE("rapidly decaying tail with interior structure") {
  auto f = [](double x) { return std::exp(-std::abs(x)) * 0.5; };
  const double splits[] = {0.0};
  auto r = integrate_adaptive(f, -40.0, 40.0, splits, 1e-12);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unreachable tolerance raises an accuracy error with an estimate") {
  auto f = [](double x) { return std::sin(3.0 * x) * std::sin(3.0 * x); };
  CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 10.0, {}, 1e-30),
                  pcml::AccuracyError);
  try {
    integrate_adaptive(f, 0.0, 10.0, {}, 1e-30);
  } catch (const pcml::AccuracyError& e) {
    CHECK(e.achieved_error() > 0.0);
    CHECK(e.achieved_error() < 1e-6);
  }
}

TEST_CASE("invalid inputs are rejected") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(integrate_adaptive(f, 1.0, 0.0, {}, 1e-8),
                  pcml::InvalidInputError);
  CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 1.0, {}, 0.0),
                  pcml::InvalidInputError);
}

TEST_CASE("non-finite integrands are rejected, not averaged away") {
  auto f = [](double x) { return x == 0.5 ? x : std::sqrt(x - 0.5); };
  CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 1.0, {}, 1e-8),
                  pcml::InvalidInputError);
}

TEST_SUITE_END();
