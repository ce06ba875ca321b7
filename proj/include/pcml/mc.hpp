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

#ifndef PCML_MC_HPP
#define PCML_MC_HPP

#include <cstdint>

#include "pcml/histogram.hpp"
#include "pcml/noise.hpp"
#include "pcml/rnm.hpp"

namespace pcml {

// Seeded Monte Carlo estimate. std_error is the plug-in binomial standard
// error scaled to the reported mean's units.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long n_samples = 0;
  std::uint64_t seed = 0;
};

// Empirical frequency of the mechanism returning class j over n independent
// draws. Requires n >= 100. Deterministic given the seed.
McEstimate mc_win_probability(const VoteHistogram& v, std::size_t j,
                              const NoiseModel& noise, long long n,
                              std::uint64_t seed);

// Simulated membership adversary: the unknown vote's class is drawn uniformly,
// the mechanism runs on v_minus + delta_class, and the adversary applies the
// MAP rule built from quadrature win probabilities (the genuinely optimal
// estimator, not a learned approximation). Returns the multiplicative gain
// over blind guessing: (empirical hit rate) / (1/m). Its log must not exceed
// the entrywise leakage of v_minus beyond sampling error.
McEstimate mc_membership_adversary(const VoteHistogram& v_minus,
                                   const NoiseModel& noise, long long n,
                                   std::uint64_t seed,
                                   double quad_tol = kDefaultQuadTol);

}  // namespace pcml

#endif  // PCML_MC_HPP
