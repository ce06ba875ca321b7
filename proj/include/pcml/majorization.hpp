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

#ifndef PCML_MAJORIZATION_HPP
#define PCML_MAJORIZATION_HPP

#include <span>
#include <vector>

#include "pcml/histogram.hpp"

namespace pcml {

enum class MajorizationRelation {
  p_majorizes_q,
  q_majorizes_p,
  equal,
  incomparable,
};

struct MajorizationVerdict {
  MajorizationRelation relation = MajorizationRelation::incomparable;
  // Prefix sums of the descending-sorted inputs, exposed for reporting.
  std::vector<double> prefix_sums_p;
  std::vector<double> prefix_sums_q;
};

// Majorization partial order: p majorizes q when every prefix sum of the
// descending-sorted p dominates q's and the totals agree. A 1e-9 slack on
// prefix dominance and totals guards real-valued inputs; integer histograms
// are exact. Vectors of different lengths are rejected.
MajorizationVerdict compare(std::span<const double> p,
                            std::span<const double> q);

struct ExtremalHistograms {
  VoteHistogram v_max;                      // (total/m, ..., total/m)
  std::vector<VoteHistogram> v_min_family;  // total * delta_j for each j
};

// The histograms extremizing any Schur-concave function over nonnegative
// vectors of the given total: the uniform vector (maximum) and the m
// concentrated vectors (the shared minimum).
ExtremalHistograms extremal_histograms(double total, std::size_t m);

// Most balanced integer composition of the total: counts differ by at most
// one, larger counts first. For totals divisible by m this is v_max.
VoteHistogram most_balanced_composition(long long total, std::size_t m);

// All compositions of an integer total into m nonnegative integer parts, in
// deterministic (first-component descending, then recursively) order. Throws
// ResourceError naming the count when it would exceed cap.
std::vector<VoteHistogram> enumerate_histograms(long long total, std::size_t m,
                                                long long cap = 100000);

}  // namespace pcml

#endif  // PCML_MAJORIZATION_HPP
