// Copyright 2026 The Covert Cover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covert/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <memory>
#include <sstream>
#include <string>
#include <utility>

#include "covert/errors.h"
#include "covert/pseudo_greedy.h"
#include "covert/rng.h"

namespace covert {
namespace {

std::string NowIso8601() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

nlohmann::json SummaryJson(const Summary& s) {
  return {{"median", s.median}, {"p95", s.p95}, {"mean", s.mean}};
}

// Instance stream and algorithm stream are split so that changing an
// algorithm never changes the instance a seed produces.
uint64_t InstanceSeed(uint64_t seed) { return Rng::Mix(seed ^ 0x1e57a11ceULL); }

TrialRecord RunSetCoverTrial(const ExperimentConfig& config, uint64_t seed) {
  TrialRecord record;
  record.seed = seed;
  auto hidden = std::make_shared<const SetSystem>(
      config.instance ? *config.instance
                      : GenerateSetSystem(config.set_model, config.set_params,
                                          InstanceSeed(seed))
                            .system);
  std::vector<SetIndex> cover;
  switch (config.algorithm) {
    case Algorithm::kPseudoGreedy: {
      CovertOracle oracle(hidden);
      const CoverResult r =
          RunPseudoGreedy(oracle, {.alpha = config.alpha, .seed = seed});
      cover = r.cover;
      record.failed = r.failed;
      record.ledger = r.ledger.counts();
      record.rounds = static_cast<int>(r.rounds.size());
      break;
    }
    case Algorithm::kEpsNet: {
      CovertOracle oracle(hidden);
      EpsilonNetOptions options = config.epsnet;
      options.seed = seed;
      const CoverResult r = RunWeightedEpsilonNet(oracle, options);
      cover = r.cover;
      record.failed = r.failed;
      record.ledger = r.ledger.counts();
      record.rounds = static_cast<int>(r.guesses.size());
      break;
    }
    case Algorithm::kGreedy:
      try {
        cover = GreedyCover(*hidden, config.theta).set_indices;
      } catch (const UncoverableError&) {
        record.failed = true;
      }
      break;
    case Algorithm::kBruteForce:
      try {
        cover = BruteForceMinCover(*hidden, config.brute_force_cap)
                    .set_indices;
      } catch (const UncoverableError&) {
        record.failed = true;
      }
      break;
    default:
      throw CoverError(ErrorCode::kInvalidArgument, "not a set-cover algorithm");
  }
  record.cover_size = static_cast<int>(cover.size());
  record.valid = !record.failed && VerifyCover(*hidden, cover);
  if (config.compute_opt && hidden->CoversUniverse() &&
      hidden->num_sets() <= config.brute_force_cap) {
    record.opt = BruteForceMinCover(*hidden, config.brute_force_cap).size();
    record.ratio = static_cast<double>(record.cover_size) / *record.opt;
  }
  return record;
}

TrialRecord RunGraphTrial(const ExperimentConfig& config, uint64_t seed) {
  TrialRecord record;
  record.seed = seed;
  auto graph = std::make_shared<const Graph>(
      config.graph ? *config.graph
                   : GenerateGraph(config.graph_model, config.graph_params,
                                   InstanceSeed(seed)));
  if (config.algorithm == Algorithm::kVerify) {
    const VerificationResult v = OfflineVerification(*graph, config.verify_mode);
    record.cover_size = v.size();
    record.valid = true;
    return record;
  }
  GraphOracle oracle(graph);
  const DiscoveryResult r =
      RunNetworkDiscovery(oracle, {.alpha = config.alpha, .seed = seed});
  record.cover_size = static_cast<int>(r.queried_vertices.size());
  record.ledger = r.ledger.counts();
  record.rounds = static_cast<int>(r.rounds.size());
  record.valid = r.state.unresolved_count() == 0 && r.state.edges() == graph->edges();
  if (config.compute_opt && graph->num_vertices() >= 2 &&
      graph->num_vertices() <= kExactVerificationCap) {
    record.opt = OfflineVerification(*graph, VerificationMode::kExact).size();
    record.ratio = CompetitiveRatio(r, *record.opt);
  }
  return record;
}

}  // namespace

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "pseudo-greedy") return Algorithm::kPseudoGreedy;
  if (name == "epsnet") return Algorithm::kEpsNet;
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "bruteforce") return Algorithm::kBruteForce;
  if (name == "discover") return Algorithm::kDiscover;
  if (name == "verify") return Algorithm::kVerify;
  throw CoverError(ErrorCode::kInvalidArgument,
                   "unknown algorithm '" + std::string(name) + "'");
}

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kPseudoGreedy:
      return "pseudo-greedy";
    case Algorithm::kEpsNet:
      return "epsnet";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kBruteForce:
      return "bruteforce";
    case Algorithm::kDiscover:
      return "discover";
    case Algorithm::kVerify:
      return "verify";
  }
  return "unknown";
}

nlohmann::json ExperimentConfig::ToJson() const {
  nlohmann::json j = {{"algorithm", AlgorithmName(algorithm)},
                      {"alpha", alpha},
                      {"theta", theta},
                      {"compute_opt", compute_opt},
                      {"seeds", seeds}};
  const bool graph_mode =
      algorithm == Algorithm::kDiscover || algorithm == Algorithm::kVerify;
  if (graph_mode) {
    if (graph) {
      j["graph"] = graph->ToJson();
    } else {
      j["graph_model"] = GraphModelName(graph_model);
      j["graph_params"] = {{"n", graph_params.n},
                           {"p", graph_params.p},
                           {"rows", graph_params.rows},
                           {"cols", graph_params.cols}};
    }
    if (algorithm == Algorithm::kVerify) {
      j["mode"] = verify_mode == VerificationMode::kExact ? "exact" : "greedy";
    }
  } else if (instance) {
    j["instance"] = instance->ToJson();
  } else {
    j["set_model"] = SetModelName(set_model);
    j["set_params"] = {{"universe_size", set_params.universe_size},
                       {"num_sets", set_params.num_sets},
                       {"density", set_params.density},
                       {"planted_k", set_params.planted_k},
                       {"decoy_max_size", set_params.decoy_max_size}};
  }
  if (algorithm == Algorithm::kEpsNet) {
    j["epsnet"] = {{"alpha_net", epsnet.alpha_net},
                   {"c_net", epsnet.c_net},
                   {"c_iter", epsnet.c_iter},
                   {"reset_per_guess", epsnet.reset_per_guess}};
  }
  return j;
}

nlohmann::json TrialRecord::ToJson(bool with_runtime) const {
  nlohmann::json j = {{"seed", seed},
                      {"cover_size", cover_size},
                      {"valid", valid},
                      {"failed", failed},
                      {"ledger", covert::ToJson(ledger)},
                      {"rounds", rounds}};
  if (opt) j["opt"] = *opt;
  if (ratio) j["ratio"] = *ratio;
  if (with_runtime) j["runtime_ms"] = runtime_ms;
  return j;
}

Summary Summarize(std::vector<double> values) {
  Summary s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  auto rank = [&](double q) {
    const size_t r = static_cast<size_t>(std::ceil(q * values.size()));
    return values[std::clamp<size_t>(r, 1, values.size()) - 1];
  };
  s.median = rank(0.5);
  s.p95 = rank(0.95);
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / values.size();
  return s;
}

int Report::valid_count() const {
  return static_cast<int>(std::count_if(
      trials.begin(), trials.end(), [](const TrialRecord& t) { return t.valid; }));
}

nlohmann::json Report::Aggregates() const {
  std::vector<double> sizes, queries, ratios;
  for (const auto& t : trials) {
    sizes.push_back(t.cover_size);
    queries.push_back(static_cast<double>(t.ledger.total()));
    if (t.ratio) ratios.push_back(*t.ratio);
  }
  nlohmann::json j = {
      {"trials", trials.size()},
      {"valid", valid_count()},
      {"valid_fraction",
       trials.empty() ? 0.0 : static_cast<double>(valid_count()) / trials.size()},
      {"cover_size", SummaryJson(Summarize(sizes))},
      {"queries", SummaryJson(Summarize(queries))}};
  if (!ratios.empty()) j["ratio"] = SummaryJson(Summarize(ratios));
  return j;
}

nlohmann::json Report::ToJson(bool deterministic) const {
  nlohmann::json trial_json = nlohmann::json::array();
  for (const auto& t : trials) trial_json.push_back(t.ToJson(!deterministic));
  nlohmann::json j = {{"config", config.ToJson()},
                      {"trials", std::move(trial_json)},
                      {"aggregates", Aggregates()}};
  if (!deterministic) j["generated_at"] = generated_at;
  return j;
}

std::string Report::ToCsv() const {
  std::ostringstream out;
  out << "seed,cover_size,valid,failed,hitting,set,layered,total,rounds,opt,"
         "ratio,runtime_ms\n";
  for (const auto& t : trials) {
    out << t.seed << ',' << t.cover_size << ',' << t.valid << ',' << t.failed
        << ',' << t.ledger.hitting << ',' << t.ledger.set << ','
        << t.ledger.layered << ',' << t.ledger.total() << ',' << t.rounds
        << ',';
    if (t.opt) out << *t.opt;
    out << ',';
    if (t.ratio) out << *t.ratio;
    out << ',' << t.runtime_ms << '\n';
  }
  return out.str();
}

Report RunExperiment(const ExperimentConfig& config) {
  if (config.seeds.empty()) {
    throw CoverError(ErrorCode::kInvalidArgument, "at least one seed required");
  }
  const bool graph_mode = config.algorithm == Algorithm::kDiscover ||
                          config.algorithm == Algorithm::kVerify;
  if (config.algorithm == Algorithm::kBruteForce) {
    const int m = config.instance ? config.instance->num_sets()
                                  : config.set_params.num_sets;
    if (m > config.brute_force_cap) {
      throw CoverError(ErrorCode::kCapExceeded,
                       "bruteforce limited to " +
                           std::to_string(config.brute_force_cap) +
                           " sets, instance has " + std::to_string(m));
    }
  }

  Report report;
  report.config = config;
  report.generated_at = NowIso8601();
  std::vector<uint64_t> seeds = config.seeds;
  std::sort(seeds.begin(), seeds.end());
  for (uint64_t seed : seeds) {
    const auto start = std::chrono::steady_clock::now();
    TrialRecord record = graph_mode ? RunGraphTrial(config, seed)
                                    : RunSetCoverTrial(config, seed);
    record.runtime_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    report.trials.push_back(std::move(record));
  }
  return report;
}

nlohmann::json ConcentrationReport::ToJson() const {
  auto row = [](const ConcentrationRow& r) {
    return nlohmann::json{{"set_size", r.set_size},
                          {"crossings", r.crossings},
                          {"rate", r.rate},
                          {"mean_hits", r.mean_hits}};
  };
  return {{"alpha", alpha},
          {"N", scale_n},
          {"s_i", scale},
          {"trials", trials},
          {"threshold", threshold},
          {"p", probability},
          {"sizes", {row(half), row(full), row(eighth)}}};
}

ConcentrationReport LemmaConcentrationTest(double alpha, int64_t scale_n,
                                           double scale, int trials,
                                           uint64_t seed) {
  if (trials < 1 || !(scale >= 1.0) || !(alpha > 0.0) || scale_n < 2) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     "lemma test needs trials >= 1, s_i >= 1, alpha > 0, "
                     "N >= 2");
  }
  ConcentrationReport report;
  report.alpha = alpha;
  report.scale_n = scale_n;
  report.scale = scale;
  report.trials = trials;
  report.threshold = HitThreshold(alpha, scale_n);
  report.probability = SampleProbability(scale, alpha, scale_n);

  const Rng root(seed);
  auto simulate = [&](int64_t size, uint64_t stream) {
    Rng rng = root.Split(stream);
    ConcentrationRow row;
    row.set_size = size;
    double total_hits = 0.0;
    for (int t = 0; t < trials; ++t) {
      int64_t hits = 0;
      for (int64_t e = 0; e < size; ++e) hits += rng.Bernoulli(report.probability);
      total_hits += static_cast<double>(hits);
      if (static_cast<double>(hits) >= report.threshold) ++row.crossings;
    }
    row.rate = static_cast<double>(row.crossings) / trials;
    row.mean_hits = total_hits / trials;
    return row;
  };
  report.half = simulate(static_cast<int64_t>(std::ceil(scale / 2)), 1);
  report.full = simulate(static_cast<int64_t>(std::ceil(scale)), 2);
  report.eighth = simulate(static_cast<int64_t>(std::ceil(scale / 8)), 3);
  return report;
}

double FitPowerLawExponent(std::span<const double> x,
                           std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     "power-law fit needs two or more paired points");
  }
  double mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

nlohmann::json BenchReport::ToJson() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = {{"k", r.k},
                          {"algorithm", r.algorithm},
                          {"queries", SummaryJson(r.queries)},
                          {"cover_size", SummaryJson(r.cover_size)},
                          {"valid", r.valid},
                          {"runs", r.runs}};
    if (r.algorithm == "epsnet") {
      row["iterations_at_success"] = SummaryJson(r.iterations_at_success);
    }
    rows_json.push_back(std::move(row));
  }
  return {{"universe_size", config.universe_size},
          {"num_sets", config.num_sets},
          {"decoy_max_size", config.decoy_max_size},
          {"planted_ks", config.planted_ks},
          {"seeds", config.seeds},
          {"rows", std::move(rows_json)},
          {"query_exponent",
           {{"epsnet", epsnet_exponent},
            {"pseudo-greedy", pseudo_greedy_exponent}}}};
}

BenchReport RunBench(const BenchConfig& config) {
  if (config.seeds.empty() || config.planted_ks.size() < 2) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     "bench needs seeds and at least two planted sizes");
  }
  BenchReport report;
  report.config = config;
  std::vector<double> ks, eps_median, pg_median;
  for (int k : config.planted_ks) {
    BenchRow eps{.k = k, .algorithm = "epsnet"};
    BenchRow pg{.k = k, .algorithm = "pseudo-greedy"};
    BenchRow greedy{.k = k, .algorithm = "greedy"};
    std::vector<double> eq, es, ei, pq, ps, gs;
    for (uint64_t seed : config.seeds) {
      const GeneratedSetSystem gen = GenerateSetSystem(
          SetModel::kPlantedCover,
          {.universe_size = config.universe_size,
           .num_sets = config.num_sets,
           .planted_k = k,
           .decoy_max_size = config.decoy_max_size},
          InstanceSeed(seed ^ (uint64_t(k) << 32)));
      auto hidden = std::make_shared<const SetSystem>(gen.system);

      CovertOracle eps_oracle(hidden);
      EpsilonNetOptions options = config.epsnet;
      options.seed = seed;
      const CoverResult e = RunWeightedEpsilonNet(eps_oracle, options);
      eq.push_back(static_cast<double>(e.ledger.total()));
      es.push_back(e.cover_size());
      if (!e.guesses.empty() && e.guesses.back().succeeded) {
        ei.push_back(e.guesses.back().iterations);
      }
      eps.valid += !e.failed && VerifyCover(*hidden, e.cover);

      CovertOracle pg_oracle(hidden);
      const CoverResult p =
          RunPseudoGreedy(pg_oracle, {.alpha = config.alpha, .seed = seed});
      pq.push_back(static_cast<double>(p.ledger.total()));
      ps.push_back(p.cover_size());
      pg.valid += !p.failed && VerifyCover(*hidden, p.cover);

      const Cover g = GreedyCover(*hidden, 1.0);
      gs.push_back(g.size());
      greedy.valid += VerifyCover(*hidden, g);
    }
    eps.runs = pg.runs = greedy.runs = static_cast<int>(config.seeds.size());
    eps.queries = Summarize(eq);
    eps.cover_size = Summarize(es);
    eps.iterations_at_success = Summarize(ei);
    pg.queries = Summarize(pq);
    pg.cover_size = Summarize(ps);
    greedy.cover_size = Summarize(gs);
    ks.push_back(k);
    eps_median.push_back(std::max(1.0, eps.queries.median));
    pg_median.push_back(std::max(1.0, pg.queries.median));
    report.rows.push_back(std::move(eps));
    report.rows.push_back(std::move(pg));
    report.rows.push_back(std::move(greedy));
  }
  report.epsnet_exponent = FitPowerLawExponent(ks, eps_median);
  report.pseudo_greedy_exponent = FitPowerLawExponent(ks, pg_median);
  return report;
}

}  // namespace covert
