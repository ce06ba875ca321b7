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

#ifndef PCML_NOISE_HPP
#define PCML_NOISE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace pcml {

enum class NoiseKind { laplace, gaussian, custom };

// Immutable univariate noise distribution: density, CDF, quantile, and a
// log-concavity attestation. Values are safe to share and evaluate
// concurrently; sampling takes an explicit generator so there is no hidden
// mutable state.
class NoiseModel {
 public:
  using Fn = std::function<double(double)>;

  double density(double t) const { return density_(t); }
  double cumulative(double t) const { return cumulative_(t); }
  double quantile(double p) const { return quantile_(p); }

  NoiseKind kind() const { return kind_; }

  // Laplace: scale b = 1/gamma. Gaussian: standard deviation. Custom: 0.
  double scale() const { return scale_; }

  bool log_concave() const { return log_concave_; }

  // Kink locations of the density (Laplace: {0}); quadrature seeds panels
  // here so no rule application straddles a non-smooth point.
  const std::vector<double>& density_kinks() const { return density_kinks_; }

  // Inverse-CDF draw from the given generator.
  double sample(std::mt19937_64& rng) const;

  friend NoiseModel laplace_model(double gamma);
  friend NoiseModel gaussian_model(double sigma);
  friend NoiseModel custom_model(Fn density, Fn cumulative, Fn quantile,
                                 bool log_concave,
                                 std::vector<double> density_kinks);

 private:
  NoiseModel(NoiseKind kind, double scale, Fn density, Fn cumulative,
             Fn quantile, bool log_concave, std::vector<double> kinks)
      : kind_(kind),
        scale_(scale),
        density_(std::move(density)),
        cumulative_(std::move(cumulative)),
        quantile_(std::move(quantile)),
        log_concave_(log_concave),
        density_kinks_(std::move(kinks)) {}

  NoiseKind kind_;
  double scale_;
  Fn density_;
  Fn cumulative_;
  Fn quantile_;
  bool log_concave_;
  std::vector<double> density_kinks_;
};

// Laplace with location 0 and scale 1/gamma: density (gamma/2) exp(-gamma|t|).
// Throws InvalidInputError for gamma <= 0.
NoiseModel laplace_model(double gamma);

// Zero-mean Gaussian with standard deviation sigma. The CDF is evaluated via
// erfc (absolute error well below 1e-12); the quantile uses a rational
// approximation polished with one Halley step.
NoiseModel gaussian_model(double sigma);

// User-supplied distribution. All three callables are required. log_concave
// defaults to unattested, which disables analytic shortcuts that rely on it.
NoiseModel custom_model(NoiseModel::Fn density, NoiseModel::Fn cumulative,
                        NoiseModel::Fn quantile, bool log_concave = false,
                        std::vector<double> density_kinks = {});

// Checks g(x1 + delta) g(x2) >= g(x1) g(x2 + delta) for all grid pairs
// x1 <= x2, for both the density and the CDF (CDF log-concavity is inherited
// from the density, so both must pass). A 1e-12 slack absorbs roundoff.
// Throws InvalidInputError for an empty or unsorted grid or delta <= 0.
bool log_concavity_probe(const NoiseModel& model, std::span<const double> grid,
                         double delta);

// Per-tail mass dropped when truncating improper integrals over noise at
// quantile(kTailEpsilon) and quantile(1 - kTailEpsilon).
inline constexpr double kTailEpsilon = 1e-13;

// Uniform draw strictly inside (0, 1), suitable as quantile input.
double uniform_open(std::mt19937_64& rng);

// High-accuracy standard normal CDF and quantile, shared with tests.
double standard_normal_cdf(double x);
double standard_normal_quantile(double p);

}  // namespace pcml

#endif  // PCML_NOISE_HPP
