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

#include "pcml/mc.hpp"

#include <cmath>
#include <vector>

#include "pcml/errors.hpp"

namespace pcml {
namespace {

void check_samples(long long n) {
  if (n < 100) {
    throw InvalidInputError("at least 100 Monte Carlo samples required");
  }
}

double binomial_std_error(double p_hat, long long n) {
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n));
}

}  // namespace

McEstimate mc_win_probability(const VoteHistogram& v, std::size_t j,
                              const NoiseModel& noise, long long n,
                              std::uint64_t seed) {
  check_samples(n);
  if (j >= v.num_classes()) {
    throw InvalidInputError("mc_win_probability: class index out of range");
  }
  std::mt19937_64 rng(seed);
  long long hits = 0;
  for (long long i = 0; i < n; ++i) {
    if (noisy_argmax(v, noise, rng) == j) ++hits;
  }
  const double p_hat = static_cast<double>(hits) / static_cast<double>(n);
  return {p_hat, binomial_std_error(p_hat, n), n, seed};
}

McEstimate mc_membership_adversary(const VoteHistogram& v_minus,
                                   const NoiseModel& noise, long long n,
                                   std::uint64_t seed, double quad_tol) {
  check_samples(n);
  const std::size_t m = v_minus.num_classes();

  // MAP rule from the quadrature posteriors: with a uniform prior over the
  // unknown vote's class c, the optimal guess after observing output y is
  // argmax_c P(Y = y | v_minus + delta_c).
  std::vector<std::vector<double>> likelihood(m, std::vector<double>(m));
  for (std::size_t c = 0; c < m; ++c) {
    const VoteHistogram v = v_minus.with_vote_for(c);
    for (std::size_t y = 0; y < m; ++y) {
      likelihood[c][y] = win_probability(v, y, noise, quad_tol);
    }
  }
  std::vector<std::size_t> guess(m, 0);
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t c = 1; c < m; ++c) {
      if (likelihood[c][y] > likelihood[guess[y]][y]) guess[y] = c;
    }
  }

  std::vector<VoteHistogram> candidates;
  candidates.reserve(m);
  for (std::size_t c = 0; c < m; ++c) {
    candidates.push_back(v_minus.with_vote_for(c));
  }

  std::mt19937_64 rng(seed);
  long long correct = 0;
  for (long long i = 0; i < n; ++i) {
    const auto truth =
        static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(m));
    const std::size_t y = noisy_argmax(candidates[truth], noise, rng);
    if (guess[y] == truth) ++correct;
  }
  const double hit_rate = static_cast<double>(correct) / static_cast<double>(n);
  const double dm = static_cast<double>(m);
  return {dm * hit_rate, dm * binomial_std_error(hit_rate, n), n, seed};
}

}  // namespace pcml
