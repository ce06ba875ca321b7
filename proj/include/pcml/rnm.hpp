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

#ifndef PCML_RNM_HPP
#define PCML_RNM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pcml/histogram.hpp"
#include "pcml/noise.hpp"

namespace pcml {

// Default absolute tolerance for one win-probability quadrature. The
// reference leakage values are quoted to three significant figures at
// magnitude 1e-2, so this leaves several orders of margin.
inline constexpr double kDefaultQuadTol = 1e-10;

// Result of a leakage computation, in nats, with method metadata so outputs
// can be re-verified downstream.
struct LeakageReport {
  double value_nats = 0.0;
  std::string method;  // quadrature | closed_form | monte_carlo | bound
  std::vector<double> per_class_win_probs;
  // Absolute error bound on the win-probability sum (exp of value_nats).
  double error_estimate = 0.0;
  std::map<std::string, double> parameters;
};

// P(argmax_l v_l + N_l = j) for i.i.d. noise N_l, computed as the integral of
// g(t) * prod_{l != j} G(v_j - v_l + t) over the real line, truncated at the
// kTailEpsilon quantiles and split at every kink of any factor. Absolute
// error <= tol or AccuracyError is thrown.
double win_probability(const VoteHistogram& v, std::size_t j,
                       const NoiseModel& noise, double tol = kDefaultQuadTol);

// Entrywise information leakage of the noisy-argmax mechanism about the one
// unknown vote, given the known-votes histogram v_minus:
//
//   log sum_j P(Y = j | v_minus + delta_j)
//
// Each summand is the win probability of class j after the unknown vote is
// placed on j, which is where it maximizes that class's win probability.
LeakageReport entrywise_leakage(const VoteHistogram& v_minus,
                                const NoiseModel& noise,
                                double tol = kDefaultQuadTol);

// One draw of the mechanism: argmax_l v_l + N_l with i.i.d. noise. Ties are
// broken toward the lowest class index (they have probability zero under
// continuous noise). Deterministic given the generator state.
std::size_t noisy_argmax(const VoteHistogram& v, const NoiseModel& noise,
                         std::mt19937_64& rng);

// Seeded single draw.
std::size_t noisy_argmax_sample(const VoteHistogram& v, const NoiseModel& noise,
                                std::uint64_t seed);

}  // namespace pcml

#endif  // PCML_RNM_HPP
