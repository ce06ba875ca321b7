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

#ifndef PCML_PATE_HPP
#define PCML_PATE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcml/accountant.hpp"
#include "pcml/histogram.hpp"
#include "pcml/noise.hpp"
#include "pcml/rnm.hpp"

namespace pcml {

// One training record: feature vector plus a label in 1..num_classes.
struct LabeledRecord {
  std::vector<double> features;
  int label = 0;
};

class LabeledDataset {
 public:
  // num_classes = 0 infers m as the largest label present.
  explicit LabeledDataset(std::vector<LabeledRecord> records,
                          int num_classes = 0);

  std::size_t size() const { return records_.size(); }
  int num_classes() const { return num_classes_; }
  const LabeledRecord& record(std::size_t i) const { return records_[i]; }

 private:
  std::vector<LabeledRecord> records_;
  int num_classes_;
};

// CSV loader: one record per line, feature columns then an integer label in
// the last column. Lines starting with '#' and a non-numeric header line are
// skipped.
LabeledDataset load_dataset_csv(const std::string& path, int num_classes = 0);

// Query loader: feature columns only.
std::vector<std::vector<double>> load_queries_csv(const std::string& path);

// Seeded shuffle followed by round-robin assignment: L disjoint nonempty
// index sets covering the dataset, sizes differing by at most one.
std::vector<std::vector<std::size_t>> partition(const LabeledDataset& dataset,
                                                std::size_t num_teachers,
                                                std::uint64_t seed);

// Deterministic 1-nearest-neighbor classifier over one partition. Distance
// ties break toward the lowest dataset record index, then the lowest label.
class StubTeacher {
 public:
  StubTeacher(const LabeledDataset& dataset, std::vector<std::size_t> indices);

  int predict(std::span<const double> query) const;
  const std::vector<std::size_t>& record_indices() const { return indices_; }

 private:
  struct TrainingPoint {
    std::size_t dataset_index;
    std::vector<double> features;
    int label;
  };
  std::vector<TrainingPoint> points_;
  std::vector<std::size_t> indices_;
};

StubTeacher train_stub_teacher(const LabeledDataset& dataset,
                               std::vector<std::size_t> indices);

class TeacherEnsemble {
 public:
  TeacherEnsemble(const LabeledDataset& dataset, std::size_t num_teachers,
                  std::uint64_t seed);

  std::size_t num_teachers() const { return teachers_.size(); }
  int num_classes() const { return num_classes_; }
  const std::vector<std::vector<std::size_t>>& partitions() const {
    return partitions_;
  }

  // Teacher index owning the given dataset record.
  std::size_t teacher_of_record(std::size_t dataset_index) const;

  // Vote of one teacher (label in 1..m).
  int teacher_vote(std::size_t teacher, std::span<const double> query) const;

  // Histogram of all teachers' votes; counts sum to L.
  VoteHistogram vote_histogram(std::span<const double> query) const;

 private:
  std::vector<std::vector<std::size_t>> partitions_;
  std::vector<StubTeacher> teachers_;
  std::vector<std::size_t> record_owner_;
  int num_classes_;
};

struct QueryOutcome {
  // Label (1..m) released to the student; absent when the query was refused.
  std::optional<int> label;
  double leakage_nats = 0.0;
  bool refused = false;
  std::vector<double> v_minus;  // known-votes histogram used for the charge
};

// Runs the mechanism on one query and charges the ledger with the entrywise
// leakage of the known-votes histogram. When target_entry_index designates
// the unknown record, its teacher's vote is removed to form v_minus;
// otherwise the charge is the worst case over every reduction of the full
// histogram by one cast vote. The label is released only if the ledger
// accepts the cost.
QueryOutcome answer_query(const TeacherEnsemble& ensemble,
                          std::span<const double> query,
                          const NoiseModel& noise, BudgetLedger& ledger,
                          std::optional<std::size_t> target_entry_index,
                          std::mt19937_64& rng, const std::string& query_id,
                          double tol = kDefaultQuadTol);

}  // namespace pcml

#endif  // PCML_PATE_HPP
