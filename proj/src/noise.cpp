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

#include <algorithm>
#include <cmath>

#include "pcml/errors.hpp"

namespace pcml {
namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// Acklam's rational approximation of the standard normal quantile,
// accurate to ~1.15e-9 before refinement.
double acklam_quantile(double p) {
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
            a[5]) *
           q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double q = std::sqrt(-2.0 * std::log1p(-p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
           c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double standard_normal_cdf(double x) {
  return 0.5 * std::erfc(-x / kSqrt2);
}

double standard_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidInputError("quantile argument must lie in (0, 1)");
  }
  // Evaluate the upper half by symmetry: 1 - p is exact for p >= 0.5, and the
  // lower tail keeps full relative precision in the CDF, which the Halley
  // refinement needs (near 1 the CDF saturates and the residual washes out).
  if (p > 0.5) return -standard_normal_quantile(1.0 - p);
  double x = acklam_quantile(p);
  // One Halley step against the erfc-based CDF pulls the result to within a
  // few ulp.
  const double e = standard_normal_cdf(x) - p;
  const double u = e / (kInvSqrt2Pi * std::exp(-0.5 * x * x));
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double uniform_open(std::mt19937_64& rng) {
  // 53 random mantissa bits centered in the cell: never exactly 0 or 1.
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double NoiseModel::sample(std::mt19937_64& rng) const {
  return quantile_(uniform_open(rng));
}

NoiseModel laplace_model(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidInputError("laplace_model: gamma must be a positive real");
  }
  auto density = [gamma](double t) {
    return 0.5 * gamma * std::exp(-gamma * std::abs(t));
  };
  auto cumulative = [gamma](double t) {
    return t < 0.0 ? 0.5 * std::exp(gamma * t)
                   : 1.0 - 0.5 * std::exp(-gamma * t);
  };
  auto quantile = [gamma](double p) {
    if (!(p > 0.0 && p < 1.0)) {
      throw InvalidInputError("quantile argument must lie in (0, 1)");
    }
    return p < 0.5 ? std::log(2.0 * p) / gamma
                   : -std::log(2.0 * (1.0 - p)) / gamma;
  };
  return NoiseModel(NoiseKind::laplace, 1.0 / gamma, density, cumulative,
                    quantile, /*log_concave=*/true, {0.0});
}

NoiseModel gaussian_model(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidInputError("gaussian_model: sigma must be a positive real");
  }
  auto density = [sigma](double t) {
    const double z = t / sigma;
    return kInvSqrt2Pi / sigma * std::exp(-0.5 * z * z);
  };
  auto cumulative = [sigma](double t) { return standard_normal_cdf(t / sigma); };
  auto quantile = [sigma](double p) {
    return sigma * standard_normal_quantile(p);
  };
  return NoiseModel(NoiseKind::gaussian, sigma, density, cumulative, quantile,
                    /*log_concave=*/true, {});
}

NoiseModel custom_model(NoiseModel::Fn density, NoiseModel::Fn cumulative,
                        NoiseModel::Fn quantile, bool log_concave,
                        std::vector<double> density_kinks) {
  if (!density || !cumulative || !quantile) {
    throw InvalidInputError(
        "custom_model: density, cumulative and quantile are all required");
  }
  std::sort(density_kinks.begin(), density_kinks.end());
  return NoiseModel(NoiseKind::custom, 0.0, std::move(density),
                    std::move(cumulative), std::move(quantile), log_concave,
                    std::move(density_kinks));
}

bool log_concavity_probe(const NoiseModel& model, std::span<const double> grid,
                         double delta) {
  if (grid.empty()) throw InvalidInputError("log_concavity_probe: empty grid");
  if (!(delta > 0.0)) {
    throw InvalidInputError("log_concavity_probe: delta must be positive");
  }
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw InvalidInputError("log_concavity_probe: grid must be ascending");
  }
  constexpr double kSlack = 1e-12;

  auto holds_for = [&](auto&& f) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = i; j < grid.size(); ++j) {
        const double lhs = f(grid[i] + delta) * f(grid[j]);
        const double rhs = f(grid[i]) * f(grid[j] + delta);
        if (lhs < rhs - kSlack) return false;
      }
    }
    return true;
  };

  return holds_for([&](double t) { return model.density(t); }) &&
         holds_for([&](double t) { return model.cumulative(t); });
}

}  // namespace pcml
