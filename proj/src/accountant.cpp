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

#include "pcml/accountant.hpp"

#include <cmath>
#include <string>

#include "pcml/errors.hpp"
#include "pcml/laplace_analytic.hpp"
#include "pcml/rnm.hpp"

namespace pcml {

BudgetLedger::BudgetLedger(BudgetPolicy policy,
                           std::optional<double> budget_nats)
    : policy_(policy), budget_nats_(budget_nats) {
  if (budget_nats_ && !(*budget_nats_ > 0.0)) {
    throw InvalidInputError("ledger: budget must be positive when given");
  }
}

bool BudgetLedger::record(std::string query_id, double leakage_nats,
                          std::string method) {
  if (!(leakage_nats >= 0.0) || !std::isfinite(leakage_nats)) {
    throw InvalidInputError("ledger: leakage must be a nonnegative real");
  }
  if (policy_ == BudgetPolicy::refuse_over_budget && budget_nats_ &&
      cumulative_ + leakage_nats > *budget_nats_) {
    return false;
  }
  entries_.push_back({std::move(query_id), leakage_nats, std::move(method)});
  const double y = leakage_nats - compensation_;
  const double t = cumulative_ + y;
  compensation_ = (t - cumulative_) - y;
  cumulative_ = t;
  return true;
}

double calibrate_gamma(const VoteHistogram& v_minus, double target_nats,
                       double tol) {
  const double m = static_cast<double>(v_minus.num_classes());
  if (!(target_nats > 0.0) || target_nats >= std::log(m)) {
    throw InvalidInputError(
        "calibrate_gamma: target must lie in (0, log m) nats");
  }
  if (!(tol > 0.0)) throw InvalidInputError("calibrate_gamma: tol must be positive");

  const double quad_tol = std::min(kDefaultQuadTol, 0.1 * tol);
  auto leakage_at = [&](double gamma) {
    return entrywise_leakage(v_minus, laplace_model(gamma), quad_tol).value_nats;
  };

  // Expand the bracket geometrically until it straddles the target. The
  // leakage grows with gamma only up to a histogram-dependent ceiling
  // (histograms with a unique maximum leak nothing once the noise vanishes),
  // so the upward expansion stops at the first sign of decrease instead of
  // walking past the peak.
  double lo = 1e-3, hi = 1.0;
  constexpr double kGammaMax = 1e6, kGammaMin = 1e-12;
  double leak_lo = leakage_at(lo), leak_hi = leakage_at(hi);
  while (leak_lo > target_nats && lo > kGammaMin) {
    lo *= 0.25;
    leak_lo = leakage_at(lo);
  }
  while (leak_hi < target_nats && hi < kGammaMax) {
    const double next = hi * 2.0;
    const double leak_next = leakage_at(next);
    if (leak_next < leak_hi - tol) {
      throw NoSolutionError(
          "calibrate_gamma: leakage stopped increasing at " +
          std::to_string(leak_hi) + " nats before reaching the target of " +
          std::to_string(target_nats) + " nats");
    }
    hi = next;
    leak_hi = leak_next;
  }
  if (leak_lo > target_nats || leak_hi < target_nats) {
    throw NoSolutionError(
        "calibrate_gamma: target " + std::to_string(target_nats) +
        " nats is not attained by any gamma in [" + std::to_string(kGammaMin) +
        ", " + std::to_string(kGammaMax) + "]");
  }
  if (leak_lo > leak_hi + tol) {
    throw InternalConsistencyError(
        "calibrate_gamma: leakage is not monotone on the bracket");
  }

  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double leak_mid = leakage_at(mid);
    if (std::abs(leak_mid - target_nats) <= tol) return mid;
    if (leak_mid < leak_lo - tol || leak_mid > leak_hi + tol) {
      throw InternalConsistencyError(
          "calibrate_gamma: leakage is not monotone on the bracket");
    }
    if (leak_mid < target_nats) {
      lo = mid;
      leak_lo = leak_mid;
    } else {
      hi = mid;
      leak_hi = leak_mid;
    }
  }
  throw AccuracyError("calibrate_gamma: bisection failed to converge",
                      std::abs(leak_hi - leak_lo));
}

double worst_case_plan(long long k, double gamma) {
  return total_bound(k, gamma);
}

}  // namespace pcml
