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

#include "pcml/pate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "pcml/errors.hpp"

namespace pcml {
namespace {

std::vector<double> parse_csv_numbers(const std::string& line, bool* ok) {
  std::vector<double> values;
  std::stringstream ss(line);
  std::string field;
  *ok = true;
  while (std::getline(ss, field, ',')) {
    try {
      std::size_t consumed = 0;
      values.push_back(std::stod(field, &consumed));
      while (consumed < field.size() &&
             std::isspace(static_cast<unsigned char>(field[consumed]))) {
        ++consumed;
      }
      if (consumed != field.size()) *ok = false;
    } catch (const std::exception&) {
      *ok = false;
    }
    if (!*ok) return {};
  }
  return values;
}

}  // namespace

LabeledDataset::LabeledDataset(std::vector<LabeledRecord> records,
                               int num_classes)
    : records_(std::move(records)), num_classes_(num_classes) {
  if (records_.empty()) throw InvalidInputError("dataset: no records");
  int max_label = 0;
  const std::size_t dim = records_.front().features.size();
  for (const auto& r : records_) {
    if (r.features.size() != dim) {
      throw InvalidInputError("dataset: inconsistent feature dimensions");
    }
    if (r.label < 1) throw InvalidInputError("dataset: labels start at 1");
    max_label = std::max(max_label, r.label);
  }
  if (num_classes_ == 0) num_classes_ = max_label;
  if (max_label > num_classes_) {
    throw InvalidInputError("dataset: label exceeds the declared class count");
  }
}

LabeledDataset load_dataset_csv(const std::string& path, int num_classes) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset file: " + path);
  std::vector<LabeledRecord> records;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    bool ok = false;
    std::vector<double> values = parse_csv_numbers(line, &ok);
    if (!ok) {
      if (first) {  // header row
        first = false;
        continue;
      }
      throw InvalidInputError("dataset: non-numeric field in line: " + line);
    }
    first = false;
    if (values.size() < 2) {
      throw InvalidInputError(
          "dataset: each line needs at least one feature and a label");
    }
    const double label = values.back();
    values.pop_back();
    if (label != std::floor(label)) {
      throw InvalidInputError("dataset: label column must be an integer");
    }
    records.push_back({std::move(values), static_cast<int>(label)});
  }
  return LabeledDataset(std::move(records), num_classes);
}

std::vector<std::vector<double>> load_queries_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open query file: " + path);
  std::vector<std::vector<double>> queries;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    bool ok = false;
    std::vector<double> values = parse_csv_numbers(line, &ok);
    if (!ok) {
      if (first) {
        first = false;
        continue;
      }
      throw InvalidInputError("queries: non-numeric field in line: " + line);
    }
    first = false;
    if (values.empty()) continue;
    queries.push_back(std::move(values));
  }
  if (queries.empty()) throw InvalidInputError("queries: no query rows");
  return queries;
}

std::vector<std::vector<std::size_t>> partition(const LabeledDataset& dataset,
                                                std::size_t num_teachers,
                                                std::uint64_t seed) {
  const std::size_t n = dataset.size();
  if (num_teachers < 1 || num_teachers > n) {
    throw InvalidInputError(
        "partition: need 1 <= L <= n so every partition is nonempty");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::vector<std::size_t>> parts(num_teachers);
  for (std::size_t i = 0; i < n; ++i) {
    parts[i % num_teachers].push_back(order[i]);
  }
  return parts;
}

StubTeacher::StubTeacher(const LabeledDataset& dataset,
                         std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
  if (indices_.empty()) throw InvalidInputError("teacher: empty partition");
  points_.reserve(indices_.size());
  for (std::size_t idx : indices_) {
    if (idx >= dataset.size()) {
      throw InvalidInputError("teacher: record index out of range");
    }
    const LabeledRecord& r = dataset.record(idx);
    points_.push_back({idx, r.features, r.label});
  }
  // Sorting by dataset index makes the tie-break a plain first-wins scan.
  std::sort(points_.begin(), points_.end(),
            [](const TrainingPoint& a, const TrainingPoint& b) {
              return a.dataset_index < b.dataset_index ||
                     (a.dataset_index == b.dataset_index && a.label < b.label);
            });
}

int StubTeacher::predict(std::span<const double> query) const {
  if (query.size() != points_.front().features.size()) {
    throw InvalidInputError("teacher: query dimension mismatch");
  }
  double best = std::numeric_limits<double>::infinity();
  int label = points_.front().label;
  for (const TrainingPoint& p : points_) {
    double d2 = 0.0;
    for (std::size_t k = 0; k < query.size(); ++k) {
      const double diff = query[k] - p.features[k];
      d2 += diff * diff;
    }
    if (d2 < best) {
      best = d2;
      label = p.label;
    }
  }
  return label;
}

StubTeacher train_stub_teacher(const LabeledDataset& dataset,
                               std::vector<std::size_t> indices) {
  return StubTeacher(dataset, std::move(indices));
}

TeacherEnsemble::TeacherEnsemble(const LabeledDataset& dataset,
                                 std::size_t num_teachers, std::uint64_t seed)
    : num_classes_(dataset.num_classes()) {
  partitions_ = partition(dataset, num_teachers, seed);
  teachers_.reserve(num_teachers);
  record_owner_.assign(dataset.size(), 0);
  for (std::size_t t = 0; t < partitions_.size(); ++t) {
    for (std::size_t idx : partitions_[t]) record_owner_[idx] = t;
    teachers_.push_back(train_stub_teacher(dataset, partitions_[t]));
  }
}

std::size_t TeacherEnsemble::teacher_of_record(
    std::size_t dataset_index) const {
  if (dataset_index >= record_owner_.size()) {
    throw InvalidInputError("ensemble: record index out of range");
  }
  return record_owner_[dataset_index];
}

int TeacherEnsemble::teacher_vote(std::size_t teacher,
                                  std::span<const double> query) const {
  if (teacher >= teachers_.size()) {
    throw InvalidInputError("ensemble: teacher index out of range");
  }
  return teachers_[teacher].predict(query);
}

VoteHistogram TeacherEnsemble::vote_histogram(
    std::span<const double> query) const {
  std::vector<double> counts(static_cast<std::size_t>(num_classes_), 0.0);
  for (const StubTeacher& t : teachers_) {
    counts[static_cast<std::size_t>(t.predict(query)) - 1] += 1.0;
  }
  return VoteHistogram(std::move(counts));
}

QueryOutcome answer_query(const TeacherEnsemble& ensemble,
                          std::span<const double> query,
                          const NoiseModel& noise, BudgetLedger& ledger,
                          std::optional<std::size_t> target_entry_index,
                          std::mt19937_64& rng, const std::string& query_id,
                          double tol) {
  const VoteHistogram votes = ensemble.vote_histogram(query);
  const std::size_t label0 = noisy_argmax(votes, noise, rng);

  QueryOutcome outcome;
  if (target_entry_index) {
    const std::size_t teacher = ensemble.teacher_of_record(*target_entry_index);
    const int vote = ensemble.teacher_vote(teacher, query);
    const VoteHistogram v_minus =
        votes.without_vote_for(static_cast<std::size_t>(vote) - 1);
    outcome.leakage_nats = entrywise_leakage(v_minus, noise, tol).value_nats;
    outcome.v_minus = v_minus.counts();
  } else {
    // Unknown target: charge the worst case over every reduction of the
    // histogram by one actually-cast vote.
    double worst = -1.0;
    for (std::size_t j = 0; j < votes.num_classes(); ++j) {
      if (votes[j] < 1.0) continue;
      const VoteHistogram v_minus = votes.without_vote_for(j);
      const double cost = entrywise_leakage(v_minus, noise, tol).value_nats;
      if (cost > worst) {
        worst = cost;
        outcome.v_minus = v_minus.counts();
      }
    }
    outcome.leakage_nats = worst;
  }

  if (ledger.record(query_id, outcome.leakage_nats)) {
    outcome.label = static_cast<int>(label0) + 1;
    outcome.refused = false;
  } else {
    outcome.refused = true;
  }
  return outcome;
}

}  // namespace pcml
