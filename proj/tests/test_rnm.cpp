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
#include <numeric>
#include <random>

#include <doctest.h>

#include "pcml/errors.hpp"
#include "pcml/histogram.hpp"
#include "pcml/noise.hpp"

namespace {

using pcml::entrywise_leakage;
using pcml::gaussian_model;
using pcml::laplace_model;
using pcml::noisy_argmax_sample;
using pcml::VoteHistogram;
using pcml::win_probability;

// Closed form for the two-class win probability with one extra vote: the CDF
// of the difference of two i.i.d. Laplace(1/gamma) variables evaluated at 1.
double laplace_two_class_win(double gamma) {
  return 1.0 - 0.25 * std::exp(-gamma) * (2.0 + gamma);
}

VoteHistogram random_histogram(std::mt19937_64& rng, std::size_t max_m = 5) {
  const std::size_t m = 2 + rng() % (max_m - 1);
  std::vector<double> counts(m);
  for (double& c : counts) {
    c = static_cast<double>(rng() % 7) + (rng() % 2 ? 0.5 : 0.0);
  }
  return VoteHistogram(std::move(counts));
}

}  // namespace

TEST_SUITE_BEGIN("rnm");

TEST_CASE("all-equal histograms win with probability 1/m") {
  for (std::size_t m : {2u, 3u, 5u, 7u}) {
    const VoteHistogram v(std::vector<double>(m, 4.0));
    for (const auto& noise : {laplace_model(0.3), gaussian_model(1.0)}) {
      for (std::size_t j = 0; j < m; ++j) {
        CHECK(std::abs(win_probability(v, j, noise) -
                       1.0 / static_cast<double>(m)) < 1e-9);
      }
    }
  }
}

TEST_CASE("two-class closed form") {
  for (double gamma : {0.1, 0.5, 1.0, 2.0}) {
    const double p = win_probability(VoteHistogram({1.0, 0.0}), 0,
                                     laplace_model(gamma));
    CHECK(std::abs(p - laplace_two_class_win(gamma)) < 1e-9);
  }
  CHECK(laplace_two_class_win(0.1) == doctest::Approx(0.524961).epsilon(1e-6));
}

TEST_CASE("class index and tolerance are validated") {
  const VoteHistogram v({1.0, 2.0});
  CHECK_THROWS_AS(win_probability(v, 2, laplace_model(1.0)),
                  pcml::InvalidInputError);
  CHECK_THROWS_AS(win_probability(v, 0, laplace_model(1.0), 0.0),
                  pcml::InvalidInputError);
  CHECK_THROWS_AS(win_probability(v, 0, laplace_model(1.0), 1e-14),
                  pcml::AccuracyError);
}

TEST_CASE("win probabilities sum to one") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 20; ++rep) {
    const VoteHistogram v = random_histogram(rng);
    const auto noise = rep % 2 ? laplace_model(0.4) : gaussian_model(2.0);
    double sum = 0.0;
    for (std::size_t j = 0; j < v.num_classes(); ++j) {
      sum += win_probability(v, j, noise);
    }
    CHECK(std::abs(sum - 1.0) <
          static_cast<double>(v.num_classes()) * pcml::kDefaultQuadTol);
  }
}

TEST_CASE("win probability is monotone in the class's own votes") {
  const auto noise = laplace_model(0.2);
  double prev = 0.0;
  for (double c : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double p = win_probability(VoteHistogram({c, 3.0, 1.0}), 0, noise);
    CHECK(p >= prev - 1e-12);
    prev = p;
  }
}

TEST_CASE("permutation equivariance") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 10; ++rep) {
    const VoteHistogram v = random_histogram(rng);
    const std::size_t m = v.num_classes();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> permuted(m);
    for (std::size_t i = 0; i < m; ++i) permuted[perm[i]] = v[i];
    const VoteHistogram vp(permuted);

    const auto noise = laplace_model(0.3);
    for (std::size_t j = 0; j < m; ++j) {
      CHECK(std::abs(win_probability(v, j, noise) -
                     win_probability(vp, perm[j], noise)) < 1e-9);
    }
    const double leak_a = entrywise_leakage(v, noise).value_nats;
    const double leak_b = entrywise_leakage(vp, noise).value_nats;
    CHECK(std::abs(leak_a - leak_b) < 1e-9);
  }
}

TEST_CASE("single class leaks nothing") {
  const auto report =
      entrywise_leakage(VoteHistogram({17.0}), laplace_model(0.7));
  CHECK(report.value_nats == 0.0);
  CHECK(report.per_class_win_probs == std::vector<double>{1.0});
}

TEST_CASE("reference histogram leakage and report invariants") {
  const auto report =
      entrywise_leakage(VoteHistogram({4, 3, 2, 1}), laplace_model(0.1));
  CHECK(report.value_nats == doctest::Approx(0.08502522).epsilon(1e-6));
  CHECK(report.method == "quadrature");
  CHECK(report.parameters.at("gamma") == doctest::Approx(0.1));
  CHECK(report.parameters.at("m") == 4.0);

  double sum = 0.0;
  for (double p : report.per_class_win_probs) {
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    sum += p;
  }
  CHECK(std::abs(std::exp(report.value_nats) - sum) <=
        report.error_estimate + 1e-15);
}

TEST_CASE("leakage lies in [0, log m]") {
  std::mt19937_64 rng(5150);
  for (int rep = 0; rep < 15; ++rep) {
    const VoteHistogram v = random_histogram(rng);
    const auto noise = rep % 2 ? laplace_model(1.5) : gaussian_model(0.7);
    const double leak = entrywise_leakage(v, noise).value_nats;
    CHECK(leak >= 0.0);
    CHECK(leak <= std::log(static_cast<double>(v.num_classes())) + 1e-12);
  }
}

TEST_CASE("noisy argmax is deterministic given the seed") {
  const VoteHistogram v({3.0, 2.0, 5.0});
  const auto noise = laplace_model(0.8);
  for (std::uint64_t seed : {1ull, 99ull, 31337ull}) {
    CHECK(noisy_argmax_sample(v, noise, seed) ==
          noisy_argmax_sample(v, noise, seed));
  }
}

TEST_CASE("near-zero noise makes the argmax nearly deterministic") {
  const VoteHistogram v({10.0, 0.0});
  const auto noise = laplace_model(100.0);
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    if (noisy_argmax_sample(v, noise, seed) == 0) ++hits;
  }
  CHECK(hits > 9990);
}

TEST_SUITE_END();
