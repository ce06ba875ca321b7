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

#include "pcml/rnm.hpp"

#include <algorithm>
#include <cmath>

#include "pcml/errors.hpp"
#include "pcml/quadrature.hpp"

namespace pcml {

double win_probability(const VoteHistogram& v, std::size_t j,
                       const NoiseModel& noise, double tol) {
  const std::size_t m = v.num_classes();
  if (j >= m) throw InvalidInputError("win_probability: class index out of range");
  if (!(tol > 0.0)) throw InvalidInputError("win_probability: tol must be positive");
  if (m == 1) return 1.0;

  const double lo = noise.quantile(kTailEpsilon);
  const double hi = noise.quantile(1.0 - kTailEpsilon);

  // Each CDF factor G(v_j - v_l + t) is non-smooth where its argument crosses
  // zero, i.e. at t = v_l - v_j; the density may add kinks of its own.
  std::vector<double> splits;
  splits.reserve(m + noise.density_kinks().size());
  for (std::size_t l = 0; l < m; ++l) {
    if (l != j) splits.push_back(v[l] - v[j]);
  }
  for (double k : noise.density_kinks()) splits.push_back(k);

  const auto& counts = v.counts();
  const double vj = counts[j];
  auto integrand = [&counts, &noise, vj, j](double t) {
    double p = noise.density(t);
    if (p == 0.0) return 0.0;
    for (std::size_t l = 0; l < counts.size(); ++l) {
      if (l == j) continue;
      p *= noise.cumulative(vj - counts[l] + t);
      if (p == 0.0) break;
    }
    return p;
  };

  // Split the requested tolerance between quadrature and the truncated tails
  // (each tail omits at most kTailEpsilon of density mass, and every CDF
  // factor is <= 1).
  const double truncation = 2.0 * kTailEpsilon;
  if (tol <= 2.0 * truncation) {
    throw AccuracyError(
        "win_probability: tolerance not reachable under tail truncation",
        truncation);
  }
  QuadResult q = integrate_adaptive(integrand, lo, hi, splits, tol - truncation);
  return std::clamp(q.value, 0.0, 1.0);
}

LeakageReport entrywise_leakage(const VoteHistogram& v_minus,
                                const NoiseModel& noise, double tol) {
  const std::size_t m = v_minus.num_classes();
  if (!(tol > 0.0)) {
    throw InvalidInputError("entrywise_leakage: tol must be positive");
  }

  LeakageReport report;
  report.method = "quadrature";
  report.parameters["m"] = static_cast<double>(m);
  report.parameters["tol"] = tol;
  if (noise.kind() == NoiseKind::laplace) {
    report.parameters["gamma"] = 1.0 / noise.scale();
  } else if (noise.kind() == NoiseKind::gaussian) {
    report.parameters["sigma"] = noise.scale();
  }

  if (m == 1) {
    report.value_nats = 0.0;
    report.per_class_win_probs = {1.0};
    report.error_estimate = 0.0;
    return report;
  }

  double sum = 0.0;
  report.per_class_win_probs.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double pj = win_probability(v_minus.with_vote_for(j), j, noise, tol);
    report.per_class_win_probs.push_back(pj);
    sum += pj;
  }
  report.error_estimate = static_cast<double>(m) * tol;
  // The sum is >= 1 (placing the unknown vote on j only helps class j); a
  // marginally negative log is quadrature roundoff.
  report.value_nats = std::max(0.0, std::log(sum));
  return report;
}

std::size_t noisy_argmax(const VoteHistogram& v, const NoiseModel& noise,
                         std::mt19937_64& rng) {
  const std::size_t m = v.num_classes();
  std::size_t best = 0;
  double best_value = v[0] + noise.sample(rng);
  for (std::size_t l = 1; l < m; ++l) {
    const double value = v[l] + noise.sample(rng);
    if (value > best_value) {
      best = l;
      best_value = value;
    }
  }
  return best;
}

std::size_t noisy_argmax_sample(const VoteHistogram& v, const NoiseModel& noise,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return noisy_argmax(v, noise, rng);
}

}  // namespace pcml
