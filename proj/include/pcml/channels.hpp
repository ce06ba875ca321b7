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

#ifndef PCML_CHANNELS_HPP
#define PCML_CHANNELS_HPP

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace pcml {

// Finite conditional channel P(y | x, z) for one fixed conditioning outcome z.
// The input support is declared explicitly by the caller (the inputs with
// positive prior mass under that z); inferring it from a prior with a float
// threshold would silently change the leakage. One channel object per
// conditioning outcome keeps the invariants local.
class ConditionalChannel {
 public:
  ConditionalChannel(std::vector<std::string> x_support,
                     std::vector<std::string> y_alphabet,
                     std::vector<std::vector<double>> rows);

  std::size_t num_inputs() const { return rows_.size(); }
  std::size_t num_outputs() const { return y_alphabet_.size(); }
  const std::vector<std::string>& x_support() const { return x_support_; }
  const std::vector<std::string>& y_alphabet() const { return y_alphabet_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  double prob(std::size_t x, std::size_t y) const { return rows_[x][y]; }

 private:
  std::vector<std::string> x_support_;
  std::vector<std::string> y_alphabet_;
  std::vector<std::vector<double>> rows_;
};

// Prior over the declared input support: strictly positive, sums to one.
class PriorOverInputs {
 public:
  explicit PriorOverInputs(std::vector<double> probs);

  static PriorOverInputs uniform(std::size_t n);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t x) const { return probs_[x]; }

 private:
  std::vector<double> probs_;
};

// Pointwise conditional maximal leakage of the channel, in nats:
//
//   log sum_y max_{x in support} P(y | x, z)
//
// The sum of column maxima is the best-case hit rate of an adversary that
// guesses a uniformly shattering function of the input, which attains the
// supremum over all adversary targets.
double pcml(const ConditionalChannel& channel);

// Unconditional maximal leakage: the same computation with the support taken
// to be every input of positive marginal probability. Provided as a named
// alias for the unconditional reading of the channel.
double maximal_leakage(const ConditionalChannel& channel);

// Multiplicative gain of the optimal (MAP) estimator of a target U observing
// the channel output, over guessing U blind:
//
//   sum_y max_u sum_x P(u|x) P(y|x) P(x)   /   max_u sum_x P(u|x) P(x)
//
// computed by exact enumeration. u_given_x rows must be normalized over the
// target alphabet; the Markov chain U - (X, z) - Y holds by construction.
double map_adversary_gain(const ConditionalChannel& channel,
                          const PriorOverInputs& prior,
                          const std::vector<std::vector<double>>& u_given_x);

// Deterministic target: u_of_x[x] is the label U takes on input x.
double map_adversary_gain(const ConditionalChannel& channel,
                          const PriorOverInputs& prior,
                          const std::vector<std::size_t>& u_of_x,
                          std::size_t num_u_labels);

// Identity target over n inputs: the uniformly shattering U with U = X.
std::vector<std::vector<double>> shattering_target(std::size_t n);

// Channel emitting both outputs of c1 and c2 given the same input
// (conditionally independent given (x, z)). Output alphabet is the Cartesian
// product; inputs must share the same declared support.
ConditionalChannel product_channel(const ConditionalChannel& c1,
                                   const ConditionalChannel& c2);

// Post-composition with a stochastic kernel on the output alphabet. The
// kernel is itself a channel whose input support must equal the channel's
// output alphabet.
ConditionalChannel postprocess(const ConditionalChannel& channel,
                               const ConditionalChannel& kernel);

// Random test channel: each row is an independent uniform draw, normalized.
ConditionalChannel random_channel(std::size_t num_inputs,
                                  std::size_t num_outputs,
                                  std::mt19937_64& rng);

// Random conditional target distribution P(u | x), one normalized row per x.
std::vector<std::vector<double>> random_target(std::size_t num_inputs,
                                               std::size_t num_u_labels,
                                               std::mt19937_64& rng);

}  // namespace pcml

#endif  // PCML_CHANNELS_HPP
