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
#include <cmath>
#include <functional>
#include <string>

#include "pcml/errors.hpp"

namespace pcml {
namespace {

constexpr double kSlack = 1e-9;

std::vector<double> descending_prefix_sums(std::span<const double> x) {
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double run = 0.0;
  for (double& v : sorted) {
    run += v;
    v = run;
  }
  return sorted;
}

}  // namespace

MajorizationVerdict compare(std::span<const double> p,
                            std::span<const double> q) {
  if (p.empty() || p.size() != q.size()) {
    throw InvalidInputError("compare: inputs must have equal nonzero length");
  }

  MajorizationVerdict verdict;
  verdict.prefix_sums_p = descending_prefix_sums(p);
  verdict.prefix_sums_q = descending_prefix_sums(q);
  const std::size_t n = p.size();

  if (std::abs(verdict.prefix_sums_p[n - 1] - verdict.prefix_sums_q[n - 1]) >
      kSlack) {
    verdict.relation = MajorizationRelation::incomparable;
    return verdict;
  }

  bool equal = true;
  bool p_dominates = true;
  bool q_dominates = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double diff = verdict.prefix_sums_p[i] - verdict.prefix_sums_q[i];
    if (std::abs(diff) > kSlack) equal = false;
    if (diff < -kSlack) p_dominates = false;
    if (diff > kSlack) q_dominates = false;
  }

  if (equal) {
    verdict.relation = MajorizationRelation::equal;
  } else if (p_dominates) {
    verdict.relation = MajorizationRelation::p_majorizes_q;
  } else if (q_dominates) {
    verdict.relation = MajorizationRelation::q_majorizes_p;
  } else {
    verdict.relation = MajorizationRelation::incomparable;
  }
  return verdict;
}

ExtremalHistograms extremal_histograms(double total, std::size_t m) {
  if (m < 1) throw InvalidInputError("extremal_histograms: m must be >= 1");
  if (!(total >= 0.0)) {
    throw InvalidInputError("extremal_histograms: total must be nonnegative");
  }
  ExtremalHistograms out{
      VoteHistogram(std::vector<double>(m, total / static_cast<double>(m))),
      {}};
  out.v_min_family.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> concentrated(m, 0.0);
    concentrated[j] = total;
    out.v_min_family.emplace_back(std::move(concentrated));
  }
  return out;
}

VoteHistogram most_balanced_composition(long long total, std::size_t m) {
  if (m < 1) throw InvalidInputError("m must be >= 1");
  if (total < 0) throw InvalidInputError("total must be nonnegative");
  const long long base = total / static_cast<long long>(m);
  const long long extra = total % static_cast<long long>(m);
  std::vector<double> counts(m, static_cast<double>(base));
  for (long long j = 0; j < extra; ++j) counts[static_cast<std::size_t>(j)] += 1.0;
  return VoteHistogram(std::move(counts));
}

std::vector<VoteHistogram> enumerate_histograms(long long total, std::size_t m,
                                                long long cap) {
  if (m < 1) throw InvalidInputError("enumerate_histograms: m must be >= 1");
  if (total < 0) {
    throw InvalidInputError("enumerate_histograms: total must be nonnegative");
  }

  // C(total + m - 1, m - 1); the product stays exact in double far beyond
  // any usable cap, so the error can name the count.
  double count = 1.0;
  for (std::size_t i = 1; i < m && count < 1e18; ++i) {
    count *= static_cast<double>(total + static_cast<long long>(i)) /
             static_cast<double>(i);
  }
  if (count > static_cast<double>(cap)) {
    const std::string shown =
        count < 1e18 ? std::to_string(std::llround(count))
                     : std::string("more than 1e18");
    throw ResourceError("enumerate_histograms: " + shown +
                        " compositions exceed the cap of " +
                        std::to_string(cap));
  }
  const long long rounded = std::llround(count);

  std::vector<VoteHistogram> result;
  result.reserve(static_cast<std::size_t>(rounded));
  std::vector<double> current(m, 0.0);
  std::function<void(std::size_t, long long)> fill = [&](std::size_t pos,
                                                         long long remaining) {
    if (pos == m - 1) {
      current[pos] = static_cast<double>(remaining);
      result.emplace_back(current);
      return;
    }
    for (long long c = remaining; c >= 0; --c) {
      current[pos] = static_cast<double>(c);
      fill(pos + 1, remaining - c);
    }
  };
  fill(0, total);
  return result;
}

}  // namespace pcml
