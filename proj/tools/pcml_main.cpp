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
//
// Command-line front end for entrywise-leakage analysis of noisy-argmax
// aggregation: leakage reports, closed-form bounds, parameter sweeps,
// majorization checks, finite-channel leakage, verification suites, a
// desk-scale teacher-ensemble simulation, and noise calibration.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcml/accountant.hpp"
#include "pcml/channels.hpp"
#include "pcml/errors.hpp"
#include "pcml/histogram.hpp"
#include "pcml/json_io.hpp"
#include "pcml/laplace_analytic.hpp"
#include "pcml/majorization.hpp"
#include "pcml/mc.hpp"
#include "pcml/noise.hpp"
#include "pcml/pate.hpp"
#include "pcml/rnm.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitVerification = 3;
constexpr int kExitIo = 4;

std::vector<double> parse_number_list(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      values.push_back(std::stod(field));
    } catch (const std::exception&) {
      throw pcml::InvalidInputError("not a number: \"" + field + "\"");
    }
  }
  if (values.empty()) throw pcml::InvalidInputError("empty number list");
  return values;
}

// Relative output paths resolve under PCML_OUT_DIR when it is set.
std::string resolve_out_path(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("PCML_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  std::string resolved(dir);
  if (resolved.back() != '/') resolved += '/';
  return resolved + path;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  const std::string resolved = resolve_out_path(out_path);
  std::ofstream out(resolved);
  if (!out) throw pcml::IoError("cannot open output file: " + resolved);
  out << text;
  if (!out) throw pcml::IoError("write failed: " + resolved);
}

pcml::NoiseModel noise_from_flags(double gamma, double sigma,
                                  const std::string& noise_json) {
  const int given = (gamma > 0) + (sigma > 0) + !noise_json.empty();
  if (given != 1) {
    throw pcml::InvalidInputError(
        "specify exactly one of --gamma, --sigma, --noise-json");
  }
  if (!noise_json.empty()) {
    return pcml::noise_from_json(json::parse(noise_json));
  }
  return gamma > 0 ? pcml::laplace_model(gamma) : pcml::gaussian_model(sigma);
}

// ---------------------------------------------------------------------------
// leak

int cmd_leak(const std::string& v_csv, const std::string& request_path,
             double gamma, double sigma, const std::string& noise_json,
             double tol, bool bits, const std::string& out_path) {
  std::optional<pcml::VoteHistogram> v_minus;
  std::optional<pcml::NoiseModel> noise;
  if (!request_path.empty()) {
    const json request = pcml::load_json_file(request_path);
    v_minus.emplace(request.at("v_minus").get<std::vector<double>>());
    noise.emplace(pcml::noise_from_json(request.at("noise")));
    if (request.contains("tol")) tol = request.at("tol").get<double>();
  } else {
    if (v_csv.empty()) {
      throw pcml::InvalidInputError("leak: provide --v or --json");
    }
    v_minus.emplace(parse_number_list(v_csv));
    noise.emplace(noise_from_flags(gamma, sigma, noise_json));
  }
  const pcml::LeakageReport report =
      pcml::entrywise_leakage(*v_minus, *noise, tol);
  emit(pcml::report_to_json(report, bits).dump(2) + "\n", out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bound

int cmd_bound(double gamma, long long k, int m, bool bits,
              const std::string& out_path) {
  json out{{"gamma", pcml::round_sig12(gamma)},
           {"per_query_bound_nats",
            pcml::round_sig12(pcml::per_query_bound(gamma))}};
  if (k >= 0) {
    out["k"] = k;
    out["total_bound_nats"] = pcml::round_sig12(pcml::total_bound(k, gamma));
  }
  if (m >= 1) {
    out["m"] = m;
    out["leakage_at_vmax_nats"] =
        pcml::round_sig12(pcml::leakage_at_vmax(m, gamma));
  }
  if (bits) {
    out["per_query_bound_bits"] =
        pcml::round_sig12(pcml::per_query_bound(gamma) / std::log(2.0));
  }
  emit(out.dump(2) + "\n", out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const std::string& ms_csv, const std::string& gammas_csv,
              const std::string& histogram_file, double tol,
              const std::string& out_path) {
  const std::vector<double> gammas = parse_number_list(gammas_csv);
  std::ostringstream csv;
  csv << "m,gamma,H_m,win_prob_uniform,leakage_nats,"
         "leakage_quadrature_nats,closed_minus_quadrature,gamma_bound\n";
  csv.precision(17);

  auto emit_row = [&](int m, double gamma, double quad_leak,
                      const pcml::AnalyticLeakage& closed) {
    csv << m << ',' << gamma << ',' << closed.h_values.back() << ','
        << closed.win_prob_uniform << ',' << closed.leakage_nats << ','
        << quad_leak << ',' << closed.leakage_nats - quad_leak << ','
        << pcml::per_query_bound(gamma) << '\n';
  };

  if (histogram_file.empty()) {
    // Uniform mode: quadrature on an all-equal histogram (only vote
    // differences matter, so zeros represent every uniform v-).
    const std::vector<double> ms = parse_number_list(ms_csv);
    for (double md : ms) {
      const int m = static_cast<int>(md);
      if (m < 1 || md != std::floor(md)) {
        throw pcml::InvalidInputError("sweep: m values must be integers >= 1");
      }
      for (double gamma : gammas) {
        const pcml::AnalyticLeakage closed = pcml::analyze_uniform(m, gamma);
        const double quad =
            pcml::entrywise_leakage(pcml::VoteHistogram::zeros(m),
                                    pcml::laplace_model(gamma), tol)
                .value_nats;
        emit_row(m, gamma, quad, closed);
      }
    }
  } else {
    // Histogram mode: closed-form columns hold the uniform maximizer at the
    // same m, so closed_minus_quadrature is the slack of the Schur bound.
    const json doc = pcml::load_json_file(histogram_file);
    const json& list = doc.is_object() ? doc.at("histograms") : doc;
    for (const auto& h : list) {
      const pcml::VoteHistogram v_minus(h.get<std::vector<double>>());
      for (double gamma : gammas) {
        const int m = static_cast<int>(v_minus.num_classes());
        const pcml::AnalyticLeakage closed = pcml::analyze_uniform(m, gamma);
        const double quad =
            pcml::entrywise_leakage(v_minus, pcml::laplace_model(gamma), tol)
                .value_nats;
        emit_row(m, gamma, quad, closed);
      }
    }
  }
  emit(csv.str(), out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// majorize

int cmd_majorize(const std::string& p_csv, const std::string& q_csv,
                 const std::string& json_path, const std::string& out_path) {
  std::vector<double> p, q;
  if (!json_path.empty()) {
    const json doc = pcml::load_json_file(json_path);
    p = doc.at("p").get<std::vector<double>>();
    q = doc.at("q").get<std::vector<double>>();
  } else {
    if (p_csv.empty() || q_csv.empty()) {
      throw pcml::InvalidInputError("majorize: provide --p and --q, or --json");
    }
    p = parse_number_list(p_csv);
    q = parse_number_list(q_csv);
  }
  emit(pcml::verdict_to_json(pcml::compare(p, q)).dump(2) + "\n", out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// channel

int cmd_channel(const std::string& json_path, bool shattering_check,
                const std::string& out_path) {
  const pcml::ConditionalChannel channel =
      pcml::channel_from_json(pcml::load_json_file(json_path));
  const double leak = pcml::pcml(channel);
  json out{{"pcml_nats", pcml::round_sig12(leak)},
           {"num_inputs", channel.num_inputs()},
           {"num_outputs", channel.num_outputs()}};
  if (shattering_check) {
    const double gain = pcml::map_adversary_gain(
        channel, pcml::PriorOverInputs::uniform(channel.num_inputs()),
        pcml::shattering_target(channel.num_inputs()));
    out["shattering_gain"] = pcml::round_sig12(gain);
    out["shattering_gap"] = pcml::round_sig12(gain - std::exp(leak));
  }
  emit(out.dump(2) + "\n", out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteReport {
  int checks = 0;
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      std::cout << "FAIL " << what << "\n";
    }
  }
};

int verify_schur(int m, long long total, double gamma, double sigma) {
  SuiteReport rep;
  const auto histograms = pcml::enumerate_histograms(total, m);
  struct NoiseCase {
    std::string name;
    pcml::NoiseModel model;
  };
  const std::vector<NoiseCase> cases{
      {"laplace(" + std::to_string(gamma) + ")", pcml::laplace_model(gamma)},
      {"gaussian(" + std::to_string(sigma) + ")", pcml::gaussian_model(sigma)}};

  for (const auto& nc : cases) {
    std::vector<double> leaks(histograms.size());
    for (std::size_t i = 0; i < histograms.size(); ++i) {
      leaks[i] =
          pcml::entrywise_leakage(histograms[i], nc.model).value_nats;
    }
    long long comparable = 0;
    for (std::size_t i = 0; i < histograms.size(); ++i) {
      for (std::size_t j = i + 1; j < histograms.size(); ++j) {
        const auto verdict = pcml::compare(histograms[i].counts(),
                                           histograms[j].counts());
        if (verdict.relation == pcml::MajorizationRelation::p_majorizes_q) {
          ++comparable;
          rep.expect(leaks[i] <= leaks[j] + 1e-9,
                     nc.name + ": majorizing histogram leaks more");
        } else if (verdict.relation ==
                   pcml::MajorizationRelation::q_majorizes_p) {
          ++comparable;
          rep.expect(leaks[j] <= leaks[i] + 1e-9,
                     nc.name + ": majorizing histogram leaks more");
        }
      }
    }
    // Extremes over the enumeration: balanced at the top, concentrated at
    // the bottom.
    const auto balanced = pcml::most_balanced_composition(total, m);
    const double max_leak =
        pcml::entrywise_leakage(balanced, nc.model).value_nats;
    double min_leak = pcml::entrywise_leakage(
                          pcml::extremal_histograms(
                              static_cast<double>(total), m)
                              .v_min_family.front(),
                          nc.model)
                          .value_nats;
    for (double l : leaks) {
      rep.expect(l <= max_leak + 1e-9, nc.name + ": balanced not maximal");
      rep.expect(l >= min_leak - 1e-9, nc.name + ": concentrated not minimal");
    }
    std::cout << "schur " << nc.name << " m=" << m << " total=" << total
              << ": " << histograms.size() << " histograms, " << comparable
              << " comparable pairs, "
              << (rep.failures == 0 ? "PASS" : "FAIL") << "\n";
  }
  return rep.failures == 0 ? kExitOk : kExitVerification;
}

int verify_lemmas(long long n, std::uint64_t seed) {
  SuiteReport rep;
  std::mt19937_64 rng(seed);
  bool strict_composition = false, strict_processing = false;
  for (long long i = 0; i < n; ++i) {
    const std::size_t nx = 2 + rng() % 5;
    const std::size_t ny1 = 2 + rng() % 5;
    const std::size_t ny2 = 2 + rng() % 5;
    const auto c1 = pcml::random_channel(nx, ny1, rng);
    const auto c2 = pcml::random_channel(nx, ny2, rng);
    const double l1 = pcml::pcml(c1), l2 = pcml::pcml(c2);
    const double lp = pcml::pcml(pcml::product_channel(c1, c2));
    rep.expect(lp <= l1 + l2 + 1e-12, "composition inequality violated");
    if (lp < l1 + l2 - 1e-6) strict_composition = true;

    const auto kernel = pcml::random_channel(ny1, ny2, rng);
    // The kernel's rows must be indexed by c1's outputs to compose.
    const pcml::ConditionalChannel aligned(c1.y_alphabet(),
                                           kernel.y_alphabet(), kernel.rows());
    const double lpost = pcml::pcml(pcml::postprocess(c1, aligned));
    const double lkern = pcml::pcml(aligned);
    rep.expect(lpost <= std::min(l1, lkern) + 1e-12,
               "data-processing inequality violated");
    if (lpost < std::min(l1, lkern) - 1e-6) strict_processing = true;
  }
  rep.expect(strict_composition, "no strictly composite pair seen");
  rep.expect(strict_processing, "no strictly processed pair seen");
  std::cout << "lemmas: " << n << " random channel pairs, "
            << (rep.failures == 0 ? "PASS" : "FAIL") << "\n";
  return rep.failures == 0 ? kExitOk : kExitVerification;
}

int verify_mc(long long samples, std::uint64_t seed) {
  SuiteReport rep;
  struct Fixture {
    std::vector<double> v;
    std::size_t j;
    double gamma;
  };
  const std::vector<Fixture> fixtures{
      {{1, 0}, 0, 0.1},
      {{5, 3, 2, 1}, 0, 0.1},
      {{6, 3, 2, 1}, 1, 0.1},
      {{2, 2, 2}, 0, 0.5},
  };
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const pcml::VoteHistogram v(fixtures[i].v);
    const auto noise = pcml::laplace_model(fixtures[i].gamma);
    const double reference = pcml::win_probability(v, fixtures[i].j, noise);
    const auto est =
        pcml::mc_win_probability(v, fixtures[i].j, noise, samples, seed + i);
    const bool ok = std::abs(est.mean - reference) <= 3.0 * est.std_error;
    rep.expect(ok, "win probability outside 3 sigma");
    std::cout << "mc win_probability j=" << fixtures[i].j << " estimate="
              << est.mean << " std_error=" << est.std_error
              << " reference=" << reference << " " << (ok ? "PASS" : "FAIL")
              << "\n";
  }
  {
    const pcml::VoteHistogram v_minus({4, 3, 2, 1});
    const auto noise = pcml::laplace_model(0.1);
    const double leak = pcml::entrywise_leakage(v_minus, noise).value_nats;
    const auto gain =
        pcml::mc_membership_adversary(v_minus, noise, samples, seed + 99);
    const double log_gain = std::log(gain.mean);
    const double log_se = gain.std_error / gain.mean;
    const bool ok = log_gain <= leak + 3.0 * log_se;
    rep.expect(ok, "membership adversary beats the leakage bound");
    std::cout << "mc membership_adversary log_gain=" << log_gain
              << " std_error=" << log_se << " reference=" << leak << " "
              << (ok ? "PASS" : "FAIL") << "\n";
  }
  return rep.failures == 0 ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(const std::string& manifest_path,
                 const std::string& trace_override, double budget_override,
                 const std::string& policy_override) {
  const json manifest = pcml::load_json_file(manifest_path);

  // Manifest keys follow the long names; the short aliases L, m and gamma
  // are accepted as well.
  auto get_or_alias = [&manifest](const char* name,
                                  const char* alias) -> const json* {
    if (manifest.contains(name)) return &manifest.at(name);
    if (manifest.contains(alias)) return &manifest.at(alias);
    return nullptr;
  };

  const json* classes = get_or_alias("num_classes", "m");
  const auto dataset =
      pcml::load_dataset_csv(manifest.at("dataset").get<std::string>(),
                             classes ? classes->get<int>() : 0);
  std::vector<std::vector<double>> queries;
  if (manifest.contains("queries")) {
    queries = pcml::load_queries_csv(manifest.at("queries").get<std::string>());
  } else {
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      queries.push_back(dataset.record(i).features);
    }
  }

  const json* teachers = get_or_alias("num_teachers", "L");
  if (teachers == nullptr) {
    throw pcml::InvalidInputError("simulate: manifest needs num_teachers (L)");
  }
  const auto num_teachers = teachers->get<std::size_t>();
  const auto seed = manifest.value("seed", std::uint64_t{1});
  pcml::NoiseModel noise = manifest.contains("noise")
                               ? pcml::noise_from_json(manifest.at("noise"))
                               : pcml::laplace_model(
                                     manifest.at("gamma").get<double>());
  const long long num_queries =
      manifest.value("num_queries",
                     static_cast<long long>(queries.size()));
  if (num_queries < 0) {
    throw pcml::InvalidInputError("simulate: num_queries must be nonnegative");
  }
  const double tol = manifest.value("tol", pcml::kDefaultQuadTol);

  std::optional<double> budget;
  if (manifest.contains("budget_nats")) {
    budget = manifest.at("budget_nats").get<double>();
  }
  if (budget_override > 0) budget = budget_override;
  std::string policy_name = manifest.value("policy", "account_only");
  if (!policy_override.empty()) policy_name = policy_override;
  pcml::BudgetPolicy policy;
  if (policy_name == "account_only") {
    policy = pcml::BudgetPolicy::account_only;
  } else if (policy_name == "refuse_over_budget") {
    policy = pcml::BudgetPolicy::refuse_over_budget;
  } else {
    throw pcml::InvalidInputError("simulate: unknown policy " + policy_name);
  }
  std::optional<std::size_t> target;
  if (manifest.contains("target_index")) {
    target = manifest.at("target_index").get<std::size_t>();
  }

  std::string trace_path = trace_override;
  if (trace_path.empty()) trace_path = manifest.value("trace", "");
  trace_path = resolve_out_path(trace_path);
  std::ofstream trace;
  if (!trace_path.empty()) {
    trace.open(trace_path);
    if (!trace) throw pcml::IoError("cannot open trace file: " + trace_path);
  }

  const pcml::TeacherEnsemble ensemble(dataset, num_teachers, seed);
  pcml::BudgetLedger ledger(policy, budget);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

  long long refused = 0;
  for (long long i = 0; i < num_queries; ++i) {
    const auto& query = queries[static_cast<std::size_t>(i) % queries.size()];
    const auto outcome = pcml::answer_query(ensemble, query, noise, ledger,
                                            target, rng,
                                            "q" + std::to_string(i), tol);
    if (outcome.refused) ++refused;
    if (trace.is_open()) {
      json line{{"id", i},
                {"nats", pcml::round_sig12(outcome.leakage_nats)},
                {"cum", pcml::round_sig12(ledger.cumulative_nats())},
                {"refused", outcome.refused}};
      if (outcome.label) line["label"] = *outcome.label;
      trace << line.dump() << "\n";
    }
  }

  json summary{{"queries", num_queries},
               {"answered", num_queries - refused},
               {"refused", refused},
               {"noise", pcml::noise_to_json(noise)},
               {"cumulative_nats", pcml::round_sig12(ledger.cumulative_nats())},
               {"worst_case_plan_nats",
                noise.kind() == pcml::NoiseKind::laplace
                    ? json(pcml::round_sig12(pcml::worst_case_plan(
                          num_queries, 1.0 / noise.scale())))
                    : json(nullptr)}};
  if (budget) summary["budget_nats"] = pcml::round_sig12(*budget);
  std::cout << summary.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// calibrate

int cmd_calibrate(const std::string& v_csv, double target, double tol,
                  const std::string& out_path) {
  const pcml::VoteHistogram v_minus(parse_number_list(v_csv));
  const double gamma = pcml::calibrate_gamma(v_minus, target, tol);
  const double achieved =
      pcml::entrywise_leakage(v_minus, pcml::laplace_model(gamma)).value_nats;
  json out{{"gamma", pcml::round_sig12(gamma)},
           {"target_nats", pcml::round_sig12(target)},
           {"achieved_nats", pcml::round_sig12(achieved)},
           {"tol", pcml::round_sig12(tol)}};
  emit(out.dump(2) + "\n", out_path);
  return kExitOk;
}

json error_object(const std::string& type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Entrywise membership-privacy leakage of noisy-argmax aggregation"};
  app.require_subcommand(1);

  // leak
  std::string leak_v, leak_json, leak_noise_json, leak_out;
  double leak_gamma = 0, leak_sigma = 0, leak_tol = pcml::kDefaultQuadTol;
  bool leak_bits = false;
  auto* leak = app.add_subcommand(
      "leak", "Entrywise leakage of a known-votes histogram");
  leak->add_option("--v", leak_v, "known votes, e.g. 4,3,2,1");
  leak->add_option("--json", leak_json, "request JSON file");
  leak->add_option("--gamma", leak_gamma, "Laplace noise 1/scale");
  leak->add_option("--sigma", leak_sigma, "Gaussian standard deviation");
  leak->add_option("--noise-json", leak_noise_json, "inline noise spec JSON");
  leak->add_option("--tol", leak_tol, "win-probability tolerance");
  leak->add_flag("--bits", leak_bits, "also report the value in bits");
  leak->add_option("--out", leak_out, "write the report here");

  // bound
  double bound_gamma = 0;
  long long bound_k = -1;
  int bound_m = 0;
  bool bound_bits = false;
  std::string bound_out;
  auto* bound = app.add_subcommand("bound", "Closed-form leakage bounds");
  bound->add_option("--gamma", bound_gamma, "Laplace noise 1/scale")
      ->required();
  bound->add_option("--k", bound_k, "number of queries for the total bound");
  bound->add_option("--m", bound_m, "classes for the uniform-histogram value");
  bound->add_flag("--bits", bound_bits, "also report bounds in bits");
  bound->add_option("--out", bound_out, "write the report here");

  // sweep
  std::string sweep_ms = "2,4,8,16,32,64,128,256,512,1024";
  std::string sweep_gammas = "0.1", sweep_hist, sweep_out;
  double sweep_tol = pcml::kDefaultQuadTol;
  auto* sweep = app.add_subcommand(
      "sweep", "closed form vs quadrature over a (m, gamma) grid (CSV)");
  sweep->add_option("--ms", sweep_ms, "class counts, e.g. 2,4,8");
  sweep->add_option("--gammas", sweep_gammas, "gamma values, e.g. 0.05,0.1");
  sweep->add_option("--histogram-file", sweep_hist,
                    "JSON file of explicit histograms instead of uniform");
  sweep->add_option("--tol", sweep_tol, "quadrature tolerance");
  sweep->add_option("--out", sweep_out, "write the CSV here");

  // majorize
  std::string maj_p, maj_q, maj_json, maj_out;
  auto* majorize =
      app.add_subcommand("majorize", "Majorization verdict for two vectors");
  majorize->add_option("--p", maj_p, "first vector, e.g. 9,0,0");
  majorize->add_option("--q", maj_q, "second vector, e.g. 3,3,3");
  majorize->add_option("--json", maj_json, "JSON file with p and q arrays");
  majorize->add_option("--out", maj_out, "write the verdict here");

  // channel
  std::string chan_json, chan_out;
  bool chan_shatter = false;
  auto* channel = app.add_subcommand(
      "channel", "Pointwise conditional maximal leakage of a finite channel");
  channel->add_option("--json", chan_json, "channel spec JSON file")
      ->required();
  channel->add_flag("--shattering-check", chan_shatter,
                    "also run the shattering-adversary attainment check");
  channel->add_option("--out", chan_out, "write the report here");

  // verify
  std::string verify_suite;
  int verify_m = 3;
  long long verify_total = 6, verify_n = 1000, verify_samples = 1000000;
  double verify_gamma = 0.1, verify_sigma = 5.0;
  std::uint64_t verify_seed = 7;
  auto* verify =
      app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("--suite", verify_suite, "schur | lemmas | mc")
      ->required();
  verify->add_option("--m", verify_m, "schur: classes");
  verify->add_option("--total", verify_total, "schur: histogram total");
  verify->add_option("--gamma", verify_gamma, "schur: Laplace gamma");
  verify->add_option("--sigma", verify_sigma, "schur: Gaussian sigma");
  verify->add_option("--n", verify_n, "lemmas: number of channel pairs");
  verify->add_option("--samples", verify_samples, "mc: sample count");
  verify->add_option("--seed", verify_seed, "suite seed");

  // simulate
  std::string sim_manifest, sim_trace, sim_policy;
  double sim_budget = 0;
  auto* simulate = app.add_subcommand(
      "simulate", "Teacher-ensemble simulation with leakage accounting");
  simulate->add_option("--manifest", sim_manifest, "run manifest JSON")
      ->required();
  simulate->add_option("--trace", sim_trace,
                       "JSON-lines trace path (overrides the manifest)");
  simulate->add_option("--budget-nats", sim_budget,
                       "budget override in nats");
  simulate->add_option("--policy", sim_policy,
                       "account_only | refuse_over_budget (override)");

  // calibrate
  std::string cal_v, cal_out;
  double cal_target = 0, cal_tol = 1e-6;
  auto* calibrate = app.add_subcommand(
      "calibrate", "Gamma at which a histogram's leakage hits a target");
  calibrate->add_option("--v", cal_v, "known votes, e.g. 4,3,2,1")->required();
  calibrate->add_option("--target", cal_target, "target leakage in nats")
      ->required();
  calibrate->add_option("--tol", cal_tol, "calibration tolerance in nats");
  calibrate->add_option("--out", cal_out, "write the result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (leak->parsed()) {
      return cmd_leak(leak_v, leak_json, leak_gamma, leak_sigma,
                      leak_noise_json, leak_tol, leak_bits, leak_out);
    }
    if (bound->parsed()) {
      return cmd_bound(bound_gamma, bound_k, bound_m, bound_bits, bound_out);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_ms, sweep_gammas, sweep_hist, sweep_tol,
                       sweep_out);
    }
    if (majorize->parsed()) {
      return cmd_majorize(maj_p, maj_q, maj_json, maj_out);
    }
    if (channel->parsed()) {
      return cmd_channel(chan_json, chan_shatter, chan_out);
    }
    if (verify->parsed()) {
      if (verify_suite == "schur") {
        return verify_schur(verify_m, verify_total, verify_gamma,
                            verify_sigma);
      }
      if (verify_suite == "lemmas") return verify_lemmas(verify_n, verify_seed);
      if (verify_suite == "mc") return verify_mc(verify_samples, verify_seed);
      throw pcml::InvalidInputError("unknown suite: " + verify_suite);
    }
    if (simulate->parsed()) {
      return cmd_simulate(sim_manifest, sim_trace, sim_budget, sim_policy);
    }
    if (calibrate->parsed()) {
      return cmd_calibrate(cal_v, cal_target, cal_tol, cal_out);
    }
  } catch (const pcml::InvalidInputError& e) {
    std::cerr << error_object("invalid_input", e.what()).dump() << "\n";
    return kExitInvalidInput;
  } catch (const pcml::ResourceError& e) {
    std::cerr << error_object("resource", e.what()).dump() << "\n";
    return kExitInvalidInput;
  } catch (const pcml::NoSolutionError& e) {
    std::cerr << error_object("no_solution", e.what()).dump() << "\n";
    return kExitInvalidInput;
  } catch (const pcml::AccuracyError& e) {
    std::cerr << error_object("accuracy", e.what()).dump() << "\n";
    return kExitVerification;
  } catch (const pcml::InternalConsistencyError& e) {
    std::cerr << error_object("internal_consistency", e.what()).dump() << "\n";
    return kExitVerification;
  } catch (const pcml::IoError& e) {
    std::cerr << error_object("io", e.what()).dump() << "\n";
    return kExitIo;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << error_object("invalid_input", e.what()).dump() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << error_object("internal", e.what()).dump() << "\n";
    return kExitVerification;
  }
  return kExitOk;
}
