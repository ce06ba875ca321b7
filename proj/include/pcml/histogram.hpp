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

#ifndef PCML_HISTOGRAM_HPP
#define PCML_HISTOGRAM_HPP

#include <cstddef>
#include <vector>

namespace pcml {

// Per-class vote counts for one query. Counts are nonnegative reals: integer
// in simulation contexts, real-valued where the analysis benefits from a
// continuous domain (e.g. noise calibration). Class indices are 0-based.
class VoteHistogram {
 public:
  explicit VoteHistogram(std::vector<double> counts);

  static VoteHistogram zeros(std::size_t num_classes);

  std::size_t num_classes() const { return counts_.size(); }
  double total() const;
  double operator[](std::size_t j) const { return counts_[j]; }
  const std::vector<double>& counts() const { return counts_; }

  // Histogram with one extra vote in class j (v + delta_j).
  VoteHistogram with_vote_for(std::size_t j) const;

  // Histogram with one vote removed from class j (v - delta_j). Requires
  // counts[j] >= 1: the removed vote must actually have been cast there.
  VoteHistogram without_vote_for(std::size_t j) const;

 private:
  std::vector<double> counts_;
};

}  // namespace pcml

#endif  // PCML_HISTOGRAM_HPP
