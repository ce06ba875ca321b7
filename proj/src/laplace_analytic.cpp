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

#include "pcml/laplace_analytic.hpp"

#include <cmath>

#include "pcml/errors.hpp"

namespace pcml {
namespace {

void check_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidInputError("gamma must be a positive real");
  }
}

// (1 - e^-gamma/2)^j evaluated in log space so large powers underflow
// gracefully instead of distorting the series tail.
double base_pow(double log_base, long long j) {
  return std::exp(static_cast<double>(j) * log_base);
}

}  // namespace

std::vector<double> h_series(int m, double gamma) {
  check_gamma(gamma);
  if (m < 0) throw InvalidInputError("h_series: m must be nonnegative");

  const double log_base = std::log1p(-0.5 * std::exp(-gamma));
  std::vector<double> h;
  h.reserve(static_cast<std::size_t>(m) + 1);
  h.push_back(gamma);

  // Kahan accumulation of the correction terms on top of H(0) = gamma.
  double acc = 0.0, comp = 0.0;
  for (int j = 1; j <= m; ++j) {
    const double term =
        (std::ldexp(1.0, -j) - base_pow(log_base, j)) / static_cast<double>(j);
    const double y = term - comp;
    const double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
    // The full series sums to -gamma, so the true value is >= 0; clamp the
    // roundoff floor once the tail has cancelled gamma completely.
    h.push_back(std::max(0.0, gamma + acc));
  }
  return h;
}

double win_prob_uniform_closed(int m, double gamma) {
  check_gamma(gamma);
  if (m < 1) throw InvalidInputError("win_prob_uniform_closed: m must be >= 1");
  if (m == 1) return 1.0;  // the H(m-2) term carries a zero coefficient

  const double eg = std::exp(-gamma);
  const double log_base = std::log1p(-0.5 * eg);
  const double dm = static_cast<double>(m);

  const double h_m2 = h_series(m - 2, gamma).back();
  const double pow2_m = std::ldexp(1.0, -m);
  const double t_m = base_pow(log_base, m);
  const double t_m1 = base_pow(log_base, m - 1);

  return (1.0 - dm) / dm * pow2_m * eg +
         std::exp(gamma) / dm * (1.0 - t_m) + 0.5 * t_m1 -
         (dm - 1.0) / 4.0 * eg * h_m2;
}

double k_of_m(int m, double gamma) {
  return static_cast<double>(m) * win_prob_uniform_closed(m, gamma);
}

double leakage_at_vmax(int m, double gamma) {
  if (m == 1) {
    check_gamma(gamma);
    return 0.0;
  }
  return std::log(k_of_m(m, gamma));
}

double per_query_bound(double gamma) {
  check_gamma(gamma);
  return gamma;
}

double total_bound(long long k, double gamma) {
  check_gamma(gamma);
  if (k < 0) throw InvalidInputError("total_bound: k must be nonnegative");
  return static_cast<double>(k) * gamma;
}

AnalyticLeakage analyze_uniform(int m, double gamma) {
  AnalyticLeakage out;
  out.gamma = gamma;
  out.m = m;
  out.h_values = h_series(m, gamma);
  out.win_prob_uniform = win_prob_uniform_closed(m, gamma);
  out.k_of_m = static_cast<double>(m) * out.win_prob_uniform;
  out.leakage_nats = m == 1 ? 0.0 : std::log(out.k_of_m);
  return out;
}

}  // namespace pcml
