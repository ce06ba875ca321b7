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

#include "pcml/noise.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>

#include "pcml/errors.hpp"
#include "pcml/quadrature.hpp"

namespace {

using pcml::custom_model;
using pcml::gaussian_model;
using pcml::laplace_model;
using pcml::log_concavity_probe;
using pcml::NoiseModel;

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return g;
}

// Independent oracle for the standard normal CDF at small |x|: the erf
// Maclaurin series in extended precision.
long double erf_series(long double x) {
  long double term = x, sum = x;
  for (int n = 1; n < 60; ++n) {
    term *= -x * x / n;
    sum += term / (2 * n + 1);
  }
  return sum * 2.0L / sqrtl(acosl(-1.0L));
}

// Heavy-tailed density proportional to exp(-sqrt|t|): not log-concave on the
// positive axis (its log is convex there).
NoiseModel heavy_tailed_model() {
  auto density = [](double t) { return std::exp(-std::sqrt(std::abs(t))) / 4.0; };
  auto cdf_pos = [](double t) {
    const double s = std::sqrt(t);
    return 1.0 - 0.5 * std::exp(-s) * (1.0 + s);
  };
  auto cumulative = [cdf_pos](double t) {
    return t >= 0.0 ? cdf_pos(t) : 1.0 - cdf_pos(-t);
  };
  auto quantile = [cumulative](double p) {
    double lo = -1e9, hi = 1e9;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (cumulative(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  return custom_model(density, cumulative, quantile, /*log_concave=*/false,
                      {0.0});
}

double integrate_density(const NoiseModel& model, double lo, double hi) {
  return pcml::integrate_adaptive([&](double t) { return model.density(t); },
                                  lo, hi, model.density_kinks(), 1e-11)
      .value;
}

}  // namespace

TEST_SUITE_BEGIN("noise");

TEST_CASE("laplace closed forms") {
  const NoiseModel lap1 = laplace_model(1.0);
  CHECK(lap1.density(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lap1.cumulative(0.0) == doctest::Approx(0.5).epsilon(1e-15));

  const NoiseModel lap01 = laplace_model(0.1);
  const double expected = 1.0 - 0.5 * std::exp(-0.1);
  CHECK(lap01.cumulative(1.0) == doctest::Approx(expected).epsilon(1e-12));

  // Cross-check the CDF against numerical integration of the density.
  const double from_density =
      lap01.cumulative(-200.0) + integrate_density(lap01, -200.0, 1.0);
  CHECK(std::abs(from_density - expected) < 1e-10);
}

TEST_CASE("laplace rejects nonpositive gamma") {
  CHECK_THROWS_AS(laplace_model(0.0), pcml::InvalidInputError);
  CHECK_THROWS_AS(laplace_model(-2.0), pcml::InvalidInputError);
}

TEST_CASE("gaussian closed forms") {
  const NoiseModel g1 = gaussian_model(1.0);
  CHECK(g1.cumulative(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g1.density(0.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-15));

  // Phi(1) against the independent erf series.
  const NoiseModel g2 = gaussian_model(2.0);
  const double phi1 =
      0.5 * (1.0 + static_cast<double>(erf_series(1.0L / sqrtl(2.0L))));
  CHECK(std::abs(g2.cumulative(2.0) - phi1) < 1e-12);
}

TEST_CASE("gaussian rejects nonpositive sigma") {
  CHECK_THROWS_AS(gaussian_model(0.0), pcml::InvalidInputError);
  CHECK_THROWS_AS(gaussian_model(-1.0), pcml::InvalidInputError);
}

TEST_CASE("density integrates to one") {
  for (double scale : {0.05, 0.1, 0.5, 1.0, 2.0}) {
    for (const NoiseModel& model :
         {laplace_model(scale), gaussian_model(scale)}) {
      const double lo = model.quantile(pcml::kTailEpsilon);
      const double hi = model.quantile(1.0 - pcml::kTailEpsilon);
      CHECK(std::abs(integrate_density(model, lo, hi) - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("cumulative is nondecreasing with the right limits") {
  for (const NoiseModel& model : {laplace_model(0.3), gaussian_model(1.5)}) {
    double prev = 0.0;
    for (double t : linspace(-40.0, 40.0, 401)) {
      const double c = model.cumulative(t);
      CHECK(c >= prev - 1e-15);
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
      prev = c;
    }
    CHECK(model.cumulative(model.quantile(pcml::kTailEpsilon)) < 1e-12);
    CHECK(model.cumulative(model.quantile(1.0 - pcml::kTailEpsilon)) >
          1.0 - 1e-12);
  }
}

TEST_CASE("quantile inverts the cumulative") {
  // Past ~5 scales the CDF saturates toward 1 and its rounding alone moves
  // the quantile by more than the tolerance, so the grid stays inside that.
  for (const NoiseModel& model : {laplace_model(0.1), laplace_model(2.0),
                                  gaussian_model(0.5), gaussian_model(3.0)}) {
    for (double t : linspace(-5.0 * model.scale(), 5.0 * model.scale(), 33)) {
      CHECK(std::abs(model.quantile(model.cumulative(t)) - t) < 1e-9);
    }
    CHECK_THROWS_AS(model.quantile(0.0), pcml::InvalidInputError);
    CHECK_THROWS_AS(model.quantile(1.0), pcml::InvalidInputError);
  }
}

TEST_CASE("laplace cdf matches integrated density across the support") {
  const double gamma = 0.25;
  const NoiseModel model = laplace_model(gamma);
  const double lo = -20.0 / gamma;
  double integral = model.cumulative(lo);
  double prev = lo;
  for (double t : linspace(lo + 1.0, 20.0 / gamma, 41)) {
    integral += integrate_density(model, prev, t);
    prev = t;
    CHECK(std::abs(integral - model.cumulative(t)) < 1e-10);
  }
}

TEST_CASE("log-concavity probe accepts laplace and gaussian") {
  const std::vector<double> grid = linspace(-3.0, 3.0, 13);
  for (double s : {0.05, 0.1, 0.5, 1.0, 2.0}) {
    CHECK(log_concavity_probe(laplace_model(s), grid, 0.25));
    CHECK(log_concavity_probe(gaussian_model(s), grid, 0.25));
  }
}

TEST_CASE("log-concavity probe rejects a heavy-tailed density") {
  const NoiseModel heavy = heavy_tailed_model();
  CHECK(std::abs(integrate_density(heavy, -2000.0, 2000.0) - 1.0) < 1e-6);
  CHECK_FALSE(log_concavity_probe(heavy, linspace(0.5, 5.0, 10), 0.25));
  CHECK_FALSE(heavy.log_concave());
}

TEST_CASE("probe rejects bad grids") {
  const NoiseModel lap = laplace_model(1.0);
  CHECK_THROWS_AS(log_concavity_probe(lap, {}, 0.1), pcml::InvalidInputError);
  const std::vector<double> unsorted{1.0, 0.0};
  CHECK_THROWS_AS(log_concavity_probe(lap, unsorted, 0.1),
                  pcml::InvalidInputError);
  const std::vector<double> grid{0.0, 1.0};
  CHECK_THROWS_AS(log_concavity_probe(lap, grid, 0.0),
                  pcml::InvalidInputError);
}

TEST_CASE("sampling is deterministic given the seed") {
  const NoiseModel lap = laplace_model(0.5);
  std::mt19937_64 a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(lap.sample(a) == lap.sample(b));
}

TEST_CASE("custom model requires all three callables") {
  auto f = [](double) { return 0.0; };
  CHECK_THROWS_AS(custom_model(nullptr, f, f), pcml::InvalidInputError);
  CHECK_THROWS_AS(custom_model(f, nullptr, f), pcml::InvalidInputError);
  CHECK_THROWS_AS(custom_model(f, f, nullptr), pcml::InvalidInputError);
}

TEST_SUITE_END();
