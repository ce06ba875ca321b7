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

#ifndef PCML_ACCOUNTANT_HPP
#define PCML_ACCOUNTANT_HPP

#include <optional>
#include <string>
#include <vector>

#include "pcml/histogram.hpp"

namespace pcml {

enum class BudgetPolicy { account_only, refuse_over_budget };

struct LedgerEntry {
  std::string query_id;
  double leakage_nats = 0.0;
  std::string method;
};

// Ordered per-query leakage costs with a running total, in nats. Leakage
// composes additively across queries, so the cumulative sum is the spent
// budget. Under refuse_over_budget, a query whose cost would push the total
// past the budget is refused and leaves the ledger untouched. Mutation
// requires exclusive access (single writer).
class BudgetLedger {
 public:
  explicit BudgetLedger(BudgetPolicy policy = BudgetPolicy::account_only,
                        std::optional<double> budget_nats = std::nullopt);

  // Appends and accumulates. Returns false (refusing the entry, ledger
  // unchanged) when the policy forbids exceeding the budget. Negative
  // leakage is rejected.
  bool record(std::string query_id, double leakage_nats,
              std::string method = "quadrature");

  double cumulative_nats() const { return cumulative_; }
  const std::vector<LedgerEntry>& entries() const { return entries_; }
  BudgetPolicy policy() const { return policy_; }
  std::optional<double> budget_nats() const { return budget_nats_; }

 private:
  BudgetPolicy policy_;
  std::optional<double> budget_nats_;
  std::vector<LedgerEntry> entries_;
  // Compensated accumulation keeps the total within 1e-12 of the entry sum
  // for ledgers of any realistic length.
  double cumulative_ = 0.0;
  double compensation_ = 0.0;
};

// Noise level gamma at which the Laplace-noise entrywise leakage of v_minus
// hits target_nats, to within tol (in nats), found by bracketed bisection.
// The leakage is increasing in gamma; the bracket is expanded until it
// straddles the target and monotonicity is asserted on it. Throws
// NoSolutionError when no gamma attains the target (the leakage saturates
// below log m for histograms with a unique maximum) and
// InternalConsistencyError if the bracket violates monotonicity.
double calibrate_gamma(const VoteHistogram& v_minus, double target_nats,
                       double tol);

// A-priori budget needed for k queries at noise level gamma: k * gamma nats.
double worst_case_plan(long long k, double gamma);

}  // namespace pcml

#endif  // PCML_ACCOUNTANT_HPP
