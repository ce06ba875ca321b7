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

#include "pcml/histogram.hpp"

#include <cmath>
#include <string>

#include "pcml/errors.hpp"

namespace pcml {

VoteHistogram::VoteHistogram(std::vector<double> counts)
    : counts_(std::move(counts)) {
  if (counts_.empty()) {
    throw InvalidInputError("histogram needs at least one class");
  }
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    if (!(counts_[j] >= 0.0) || !std::isfinite(counts_[j])) {
      throw InvalidInputError("histogram count for class " +
                              std::to_string(j) +
                              " must be a nonnegative real");
    }
  }
}

VoteHistogram VoteHistogram::zeros(std::size_t num_classes) {
  return VoteHistogram(std::vector<double>(num_classes, 0.0));
}

double VoteHistogram::total() const {
  double sum = 0.0;
  for (double c : counts_) sum += c;
  return sum;
}

VoteHistogram VoteHistogram::with_vote_for(std::size_t j) const {
  if (j >= counts_.size()) {
    throw InvalidInputError("class index out of range");
  }
  std::vector<double> c = counts_;
  c[j] += 1.0;
  return VoteHistogram(std::move(c));
}

VoteHistogram VoteHistogram::without_vote_for(std::size_t j) const {
  if (j >= counts_.size()) {
    throw InvalidInputError("class index out of range");
  }
  if (counts_[j] < 1.0) {
    throw InvalidInputError(
        "cannot remove a vote from a class with fewer than one vote");
  }
  std::vector<double> c = counts_;
  c[j] -= 1.0;
  return VoteHistogram(std::move(c));
}

}  // namespace pcml
