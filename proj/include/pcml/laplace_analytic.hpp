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

#ifndef PCML_LAPLACE_ANALYTIC_HPP
#define PCML_LAPLACE_ANALYTIC_HPP

#include <vector>

namespace pcml {

// Closed-form quantities for the noisy-argmax mechanism with Laplace(1/gamma)
// noise on a uniform known-votes histogram. The auxiliary series
//
//   H(0) = gamma,  H(j) = H(j-1) + (2^-j - (1 - e^-gamma/2)^j) / j
//
// is nonnegative, decreasing, and tends to 0; it appears in the closed-form
// win probability and in the second-order difference of k(m) = exp(leakage).

// H(0..m), computed by the recursion with compensated summation. The tail of
// the series cancels gamma exactly, so values below roundoff are clamped to
// zero (the series is nonnegative).
std::vector<double> h_series(int m, double gamma);

// Win probability of one fixed class when all m classes carry equal known
// votes and the extra vote is placed on it. Equals the quadrature
// win_probability of (c,...,c) + delta_j for any common count c.
double win_prob_uniform_closed(int m, double gamma);

// Entrywise leakage at the uniform histogram: log(m * win_prob_uniform).
// By Schur-concavity this is the maximum over all known-vote histograms of a
// fixed total, and it is bounded by gamma for every m.
double leakage_at_vmax(int m, double gamma);

// k(m) = exp(leakage_at_vmax) = m * win_prob_uniform_closed. Nondecreasing
// and concave in m, with limit e^gamma.
double k_of_m(int m, double gamma);

// Per-query leakage bound: gamma nats, independent of m.
double per_query_bound(double gamma);

// Budget for k answered queries: k * gamma nats (linear composition).
double total_bound(long long k, double gamma);

// Bundle of the uniform-histogram quantities for one (m, gamma) point.
struct AnalyticLeakage {
  double gamma = 0.0;
  int m = 0;
  std::vector<double> h_values;  // H(0..m)
  double win_prob_uniform = 0.0;
  double leakage_nats = 0.0;
  double k_of_m = 0.0;
};

AnalyticLeakage analyze_uniform(int m, double gamma);

}  // namespace pcml

#endif  // PCML_LAPLACE_ANALYTIC_HPP
