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

#include "pcml/channels.hpp"

#include <algorithm>
#include <cmath>

#include "pcml/errors.hpp"
#include "pcml/noise.hpp"

namespace pcml {
namespace {

constexpr double kRowTol = 1e-12;

void check_distribution_row(const std::vector<double>& row,
                            const char* what) {
  double sum = 0.0;
  for (double p : row) {
    if (!(p >= 0.0 && p <= 1.0) || !std::isfinite(p)) {
      throw InvalidInputError(std::string(what) +
                              ": probabilities must lie in [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kRowTol) {
    throw InvalidInputError(std::string(what) + ": row sums to " +
                            std::to_string(sum) + ", expected 1");
  }
}

}  // namespace

ConditionalChannel::ConditionalChannel(std::vector<std::string> x_support,
                                       std::vector<std::string> y_alphabet,
                                       std::vector<std::vector<double>> rows)
    : x_support_(std::move(x_support)),
      y_alphabet_(std::move(y_alphabet)),
      rows_(std::move(rows)) {
  if (x_support_.empty()) {
    throw InvalidInputError("channel: input support must be nonempty");
  }
  if (y_alphabet_.empty()) {
    throw InvalidInputError("channel: output alphabet must be nonempty");
  }
  if (rows_.size() != x_support_.size()) {
    throw InvalidInputError("channel: one row per supported input required");
  }
  for (const auto& row : rows_) {
    if (row.size() != y_alphabet_.size()) {
      throw InvalidInputError("channel: row width must match output alphabet");
    }
    check_distribution_row(row, "channel");
  }
}

PriorOverInputs::PriorOverInputs(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvalidInputError("prior: empty support");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p > 0.0)) {
      throw InvalidInputError("prior: must be strictly positive on the support");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kRowTol) {
    throw InvalidInputError("prior: sums to " + std::to_string(sum) +
                            ", expected 1");
  }
}

PriorOverInputs PriorOverInputs::uniform(std::size_t n) {
  if (n == 0) throw InvalidInputError("prior: empty support");
  return PriorOverInputs(
      std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double pcml(const ConditionalChannel& channel) {
  double sum = 0.0;
  for (std::size_t y = 0; y < channel.num_outputs(); ++y) {
    double best = 0.0;
    for (std::size_t x = 0; x < channel.num_inputs(); ++x) {
      best = std::max(best, channel.prob(x, y));
    }
    sum += best;
  }
  return std::log(sum);
}

double maximal_leakage(const ConditionalChannel& channel) {
  return pcml(channel);
}

double map_adversary_gain(const ConditionalChannel& channel,
                          const PriorOverInputs& prior,
                          const std::vector<std::vector<double>>& u_given_x) {
  const std::size_t nx = channel.num_inputs();
  if (prior.size() != nx || u_given_x.size() != nx) {
    throw InvalidInputError(
        "map_adversary_gain: prior and target must cover the input support");
  }
  const std::size_t nu = u_given_x.front().size();
  for (const auto& row : u_given_x) {
    if (row.size() != nu) {
      throw InvalidInputError("map_adversary_gain: ragged target rows");
    }
    check_distribution_row(row, "target");
  }

  // Blind guess: max_u P(u).
  double blind = 0.0;
  for (std::size_t u = 0; u < nu; ++u) {
    double pu = 0.0;
    for (std::size_t x = 0; x < nx; ++x) pu += u_given_x[x][u] * prior[x];
    blind = std::max(blind, pu);
  }

  // Informed guess: sum_y max_u P(u, y).
  double informed = 0.0;
  for (std::size_t y = 0; y < channel.num_outputs(); ++y) {
    double best = 0.0;
    for (std::size_t u = 0; u < nu; ++u) {
      double joint = 0.0;
      for (std::size_t x = 0; x < nx; ++x) {
        joint += u_given_x[x][u] * channel.prob(x, y) * prior[x];
      }
      best = std::max(best, joint);
    }
    informed += best;
  }
  return informed / blind;
}

double map_adversary_gain(const ConditionalChannel& channel,
                          const PriorOverInputs& prior,
                          const std::vector<std::size_t>& u_of_x,
                          std::size_t num_u_labels) {
  std::vector<std::vector<double>> u_given_x(
      u_of_x.size(), std::vector<double>(num_u_labels, 0.0));
  for (std::size_t x = 0; x < u_of_x.size(); ++x) {
    if (u_of_x[x] >= num_u_labels) {
      throw InvalidInputError("map_adversary_gain: target label out of range");
    }
    u_given_x[x][u_of_x[x]] = 1.0;
  }
  return map_adversary_gain(channel, prior, u_given_x);
}

std::vector<std::vector<double>> shattering_target(std::size_t n) {
  std::vector<std::vector<double>> id(n, std::vector<double>(n, 0.0));
  for (std::size_t x = 0; x < n; ++x) id[x][x] = 1.0;
  return id;
}

ConditionalChannel product_channel(const ConditionalChannel& c1,
                                   const ConditionalChannel& c2) {
  if (c1.x_support() != c2.x_support()) {
    throw InvalidInputError("product_channel: inputs must share x_support");
  }
  std::vector<std::string> y;
  y.reserve(c1.num_outputs() * c2.num_outputs());
  for (const auto& y1 : c1.y_alphabet()) {
    for (const auto& y2 : c2.y_alphabet()) {
      y.push_back("(" + y1 + "," + y2 + ")");
    }
  }
  std::vector<std::vector<double>> rows(c1.num_inputs());
  for (std::size_t x = 0; x < c1.num_inputs(); ++x) {
    rows[x].reserve(y.size());
    for (std::size_t y1 = 0; y1 < c1.num_outputs(); ++y1) {
      for (std::size_t y2 = 0; y2 < c2.num_outputs(); ++y2) {
        rows[x].push_back(c1.prob(x, y1) * c2.prob(x, y2));
      }
    }
  }
  return ConditionalChannel(c1.x_support(), std::move(y), std::move(rows));
}

ConditionalChannel postprocess(const ConditionalChannel& channel,
                               const ConditionalChannel& kernel) {
  if (kernel.x_support() != channel.y_alphabet()) {
    throw InvalidInputError(
        "postprocess: kernel input support must equal the channel's output "
        "alphabet");
  }
  std::vector<std::vector<double>> rows(
      channel.num_inputs(), std::vector<double>(kernel.num_outputs(), 0.0));
  for (std::size_t x = 0; x < channel.num_inputs(); ++x) {
    for (std::size_t y = 0; y < channel.num_outputs(); ++y) {
      const double pxy = channel.prob(x, y);
      if (pxy == 0.0) continue;
      for (std::size_t y2 = 0; y2 < kernel.num_outputs(); ++y2) {
        rows[x][y2] += pxy * kernel.prob(y, y2);
      }
    }
  }
  // Renormalization would mask kernel defects, so rows are validated as-is;
  // clamp the tiny accumulation overshoot only.
  for (auto& row : rows) {
    for (double& p : row) p = std::min(p, 1.0);
  }
  return ConditionalChannel(channel.x_support(), kernel.y_alphabet(),
                            std::move(rows));
}

ConditionalChannel random_channel(std::size_t num_inputs,
                                  std::size_t num_outputs,
                                  std::mt19937_64& rng) {
  if (num_inputs == 0 || num_outputs == 0) {
    throw InvalidInputError("random_channel: alphabets must be nonempty");
  }
  std::vector<std::string> xs(num_inputs), ys(num_outputs);
  for (std::size_t i = 0; i < num_inputs; ++i) xs[i] = "x" + std::to_string(i);
  for (std::size_t i = 0; i < num_outputs; ++i) ys[i] = "y" + std::to_string(i);
  std::vector<std::vector<double>> rows(num_inputs,
                                        std::vector<double>(num_outputs));
  for (auto& row : rows) {
    double sum = 0.0;
    for (double& p : row) {
      p = uniform_open(rng);
      sum += p;
    }
    for (double& p : row) p /= sum;
    // Pin the row sum to exactly 1 against the validator's 1e-12 gate.
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < row.size(); ++j) acc += row[j];
    row.back() = std::max(0.0, 1.0 - acc);
  }
  return ConditionalChannel(std::move(xs), std::move(ys), std::move(rows));
}

std::vector<std::vector<double>> random_target(std::size_t num_inputs,
                                               std::size_t num_u_labels,
                                               std::mt19937_64& rng) {
  std::vector<std::vector<double>> rows(num_inputs,
                                        std::vector<double>(num_u_labels));
  for (auto& row : rows) {
    double sum = 0.0;
    for (double& p : row) {
      p = uniform_open(rng);
      sum += p;
    }
    for (double& p : row) p /= sum;
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < row.size(); ++j) acc += row[j];
    row.back() = std::max(0.0, 1.0 - acc);
  }
  return rows;
}

}  // namespace pcml
