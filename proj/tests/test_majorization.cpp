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

#include "pcml/majorization.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include <doctest.h>

#include "pcml/errors.hpp"
#include "pcml/noise.hpp"
#include "pcml/rnm.hpp"

namespace {

using pcml::compare;
using pcml::enumerate_histograms;
using pcml::extremal_histograms;
using pcml::MajorizationRelation;
using pcml::most_balanced_composition;
using pcml::VoteHistogram;

}  // namespace

TEST_SUITE_BEGIN("majorization");

TEST_CASE("textbook comparisons") {
  CHECK(compare(std::vector<double>{4, 4, 1}, std::vector<double>{5, 2, 2})
            .relation == MajorizationRelation::incomparable);
  CHECK(compare(std::vector<double>{9, 0, 0}, std::vector<double>{3, 3, 3})
            .relation == MajorizationRelation::p_majorizes_q);
  CHECK(compare(std::vector<double>{3, 3, 3}, std::vector<double>{9, 0, 0})
            .relation == MajorizationRelation::q_majorizes_p);
  CHECK(compare(std::vector<double>{2, 1}, std::vector<double>{2, 1})
            .relation == MajorizationRelation::equal);
  // Permutations are equal: the order never matters.
  CHECK(compare(std::vector<double>{1, 2}, std::vector<double>{2, 1})
            .relation == MajorizationRelation::equal);
}

TEST_CASE("mismatched totals and lengths") {
  CHECK(compare(std::vector<double>{3, 1}, std::vector<double>{2, 1})
            .relation == MajorizationRelation::incomparable);
  CHECK_THROWS_AS(
      compare(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2}),
      pcml::InvalidInputError);
}

TEST_CASE("prefix sums are exposed sorted descending") {
  const auto verdict =
      compare(std::vector<double>{1, 5, 3}, std::vector<double>{3, 3, 3});
  CHECK(verdict.prefix_sums_p == std::vector<double>{5, 8, 9});
  CHECK(verdict.prefix_sums_q == std::vector<double>{3, 6, 9});
  CHECK(verdict.relation == MajorizationRelation::p_majorizes_q);
}

TEST_CASE("partial-order structure over an enumeration") {
  const auto histograms = enumerate_histograms(6, 3);
  // Reflexivity.
  for (const auto& h : histograms) {
    CHECK(compare(h.counts(), h.counts()).relation ==
          MajorizationRelation::equal);
  }
  // Antisymmetry up to permutation and transitivity on comparable triples.
  auto rel = [&](std::size_t a, std::size_t b) {
    return compare(histograms[a].counts(), histograms[b].counts()).relation;
  };
  for (std::size_t a = 0; a < histograms.size(); ++a) {
    for (std::size_t b = 0; b < histograms.size(); ++b) {
      if (rel(a, b) == MajorizationRelation::p_majorizes_q) {
        CHECK(rel(b, a) == MajorizationRelation::q_majorizes_p);
      }
      if (rel(a, b) == MajorizationRelation::equal) continue;
      for (std::size_t c = 0; c < histograms.size(); ++c) {
        if (rel(a, b) == MajorizationRelation::p_majorizes_q &&
            rel(b, c) == MajorizationRelation::p_majorizes_q) {
          const auto ac = rel(a, c);
          CHECK((ac == MajorizationRelation::p_majorizes_q ||
                 ac == MajorizationRelation::equal));
        }
      }
    }
  }
}

TEST_CASE("extremal histograms") {
  const auto ex = extremal_histograms(10.0, 5);
  CHECK(ex.v_max.counts() == std::vector<double>(5, 2.0));
  REQUIRE(ex.v_min_family.size() == 5);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(ex.v_min_family[j][j] == 10.0);
    CHECK(ex.v_min_family[j].total() == 10.0);
  }

  const auto nine = extremal_histograms(9.0, 3);
  CHECK(nine.v_min_family[0].counts() == std::vector<double>{9, 0, 0});
  CHECK(nine.v_min_family[1].counts() == std::vector<double>{0, 9, 0});
  CHECK(nine.v_min_family[2].counts() == std::vector<double>{0, 0, 9});

  const auto zero = extremal_histograms(0.0, 4);
  CHECK(zero.v_max.counts() == std::vector<double>(4, 0.0));
  CHECK(zero.v_min_family[0].counts() == std::vector<double>(4, 0.0));
}

TEST_CASE("enumeration is exact, ordered, and capped") {
  const auto two = enumerate_histograms(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].counts() == std::vector<double>{2, 0});
  CHECK(two[1].counts() == std::vector<double>{1, 1});
  CHECK(two[2].counts() == std::vector<double>{0, 2});

  CHECK(enumerate_histograms(6, 3).size() == 28);
  CHECK(enumerate_histograms(9, 3).size() == 55);

  const auto empty_total = enumerate_histograms(0, 3);
  REQUIRE(empty_total.size() == 1);
  CHECK(empty_total[0].counts() == std::vector<double>(3, 0.0));

  try {
    enumerate_histograms(100, 5, 1000);
    FAIL("expected ResourceError");
  } catch (const pcml::ResourceError& e) {
    // C(104, 4) = 4598126 compositions; the error names the count.
    CHECK(std::string(e.what()).find("4598126") != std::string::npos);
  }
}

TEST_CASE("most balanced composition") {
  CHECK(most_balanced_composition(6, 3).counts() ==
        std::vector<double>{2, 2, 2});
  CHECK(most_balanced_composition(7, 3).counts() ==
        std::vector<double>{3, 2, 2});
  CHECK(most_balanced_composition(0, 2).counts() ==
        std::vector<double>{0, 0});
}

TEST_CASE("integer maximizer for a non-divisible total is the balanced one") {
  const auto noise = pcml::laplace_model(0.5);
  const auto histograms = enumerate_histograms(7, 3);
  double best = -1.0;
  std::vector<double> argbest;
  for (const auto& h : histograms) {
    const double leak = pcml::entrywise_leakage(h, noise).value_nats;
    if (leak > best) {
      best = leak;
      argbest = h.counts();
    }
  }
  const double balanced_leak =
      pcml::entrywise_leakage(most_balanced_composition(7, 3), noise)
          .value_nats;
  CHECK(balanced_leak >= best - 1e-9);
  // The maximizer is (3,2,2) up to permutation.
  std::sort(argbest.begin(), argbest.end(), std::greater<>());
  CHECK(argbest == std::vector<double>{3, 2, 2});
}

TEST_CASE("schur ordering of leakage on a small enumeration") {
  const auto noise = pcml::laplace_model(0.5);
  const auto histograms = enumerate_histograms(4, 3);
  std::vector<double> leaks;
  leaks.reserve(histograms.size());
  for (const auto& h : histograms) {
    leaks.push_back(pcml::entrywise_leakage(h, noise).value_nats);
  }
  for (std::size_t a = 0; a < histograms.size(); ++a) {
    for (std::size_t b = 0; b < histograms.size(); ++b) {
      const auto r = compare(histograms[a].counts(), histograms[b].counts());
      if (r.relation == MajorizationRelation::p_majorizes_q) {
        CHECK(leaks[a] <= leaks[b] + 1e-9);
      }
    }
  }
}

TEST_CASE("moving a vote from a smaller to a larger bin never raises leakage") {
  std::mt19937_64 rng(424242);
  const auto noise = pcml::laplace_model(0.3);
  int tested = 0;
  while (tested < 20) {
    const std::size_t m = 2 + rng() % 3;
    std::vector<double> counts(m);
    for (double& c : counts) c = static_cast<double>(rng() % 6);
    // Pick a strictly smaller donor bin and a strictly larger receiver.
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (counts[i] > counts[hi]) hi = i;
      if (counts[i] < counts[lo]) lo = i;
    }
    if (counts[lo] < 1.0 || counts[hi] <= counts[lo]) continue;
    const VoteHistogram before(counts);
    counts[lo] -= 1.0;
    counts[hi] += 1.0;
    const VoteHistogram after(counts);
    CHECK(pcml::entrywise_leakage(after, noise).value_nats <=
          pcml::entrywise_leakage(before, noise).value_nats + 1e-9);
    ++tested;
  }
}

TEST_SUITE_END();
