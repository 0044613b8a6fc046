// Copyright 2026 The clueval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "clueval/sampling.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "clueval/errors.hpp"
#include "clueval/rng.hpp"
#include "clueval/summation.hpp"

namespace clueval {

EstimationParams EstimationParams::from_t(std::uint64_t t, double delta) {
  if (t == 0) throw UsageError("expected sample size t must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw UsageError("delta must lie in (0, 1)");
  EstimationParams p;
  p.t = t;
  p.delta = delta;
  return p;
}

EstimationParams EstimationParams::from_epsilon(double epsilon, double delta,
                                                std::optional<double> c, std::size_t n,
                                                std::uint32_t k) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw UsageError("epsilon must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw UsageError("delta must lie in (0, 1)");
  const double cc = c.value_or(1.0);
  if (!(cc > 0.0)) throw UsageError("constant c must be positive");
  EstimationParams p;
  p.delta = delta;
  p.epsilon = epsilon;
  p.c = cc;
  const double raw = (cc / (2.0 * epsilon * epsilon)) *
                     std::log(4.0 * static_cast<double>(n) * static_cast<double>(k) / delta);
  p.t = static_cast<std::uint64_t>(std::ceil(raw));
  return p;
}

std::string to_string(Strategy s) { return s == Strategy::pps ? "pps" : "uniform"; }

Strategy strategy_from_string(const std::string& name) {
  if (name == "pps") return Strategy::pps;
  if (name == "uniform") return Strategy::uniform;
  throw UsageError("unknown strategy '" + name + "' (expected pps|uniform)");
}

std::size_t SamplingPlan::total_drawn() const {
  std::size_t total = 0;
  for (const auto& cs : per_cluster) total += cs.entries.size();
  return total;
}

std::vector<std::size_t> SamplingPlan::drawn_per_cluster() const {
  std::vector<std::size_t> out(per_cluster.size());
  for (std::size_t j = 0; j < per_cluster.size(); ++j) out[j] = per_cluster[j].entries.size();
  return out;
}

std::vector<std::uint32_t> draw_initial_sample(const ClusteredDataset& cd, std::uint32_t cluster,
                                               double delta, std::uint64_t seed,
                                               std::uint32_t max_retries) {
  const auto members = cd.members(cluster);
  const double q = std::min(
      1.0, (2.0 / static_cast<double>(members.size())) * std::log(2.0 * cd.k() / delta));

  std::vector<std::uint32_t> sample;
  for (std::uint32_t retry = 0; retry <= max_retries; ++retry) {
    for (std::uint32_t m : members) {
      if (keyed_uniform(seed, phase::initial_retry(retry), cluster, m) < q) sample.push_back(m);
    }
    if (!sample.empty()) return sample;
  }
  // Vanishingly rare, but the reference sample must not be empty.
  const std::uint64_t pick = derive_key(seed, phase::force_pick, cluster, 0) % members.size();
  sample.push_back(members[pick]);
  return sample;
}

std::vector<double> pps_probabilities(const ClusteredDataset& cd, std::uint32_t cluster,
                                      const std::vector<std::uint32_t>& initial_sample,
                                      std::uint64_t t, std::uint64_t* evals) {
  if (initial_sample.empty()) throw UsageError("reference sample must not be empty");
  const Dataset& ds = cd.data();
  const auto members = cd.members(cluster);
  const std::size_t m = members.size();
  const double floor = 1.0 / static_cast<double>(m);
  const double tt = static_cast<double>(t);

  // One distance pass per reference: the same distances feed both the
  // reference's W sum and the members' gamma numerators.
  std::vector<double> gamma(m, floor);
  std::vector<double> dist_col(m);
  for (std::uint32_t ref : initial_sample) {
    const double* rp = ds.row(ref);
    NeumaierSum w;
    for (std::size_t i = 0; i < m; ++i) {
      dist_col[i] = ds.dist_to(members[i], rp);
      w.add(dist_col[i]);
    }
    if (evals) *evals += m;
    const double w_ref = w.value();
    if (w_ref == 0.0) continue;  // zero-diameter cluster reference carries no signal
    for (std::size_t i = 0; i < m; ++i) gamma[i] = std::max(gamma[i], dist_col[i] / w_ref);
  }

  std::vector<double> p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = std::min(1.0, tt * gamma[i]);
  return p;
}

std::vector<double> uniform_probabilities(const ClusteredDataset& cd, std::uint32_t cluster,
                                          std::uint64_t t) {
  const std::size_t m = cd.cluster_size(cluster);
  const double p = std::min(1.0, static_cast<double>(t) / static_cast<double>(m));
  return std::vector<double>(m, p);
}

SamplingPlan build_plan(const ClusteredDataset& cd, const EstimationParams& params,
                        Strategy strategy, std::uint64_t seed) {
  SamplingPlan plan;
  plan.params = params;
  plan.strategy = strategy;
  plan.seed = seed;
  plan.per_cluster.resize(cd.k());
  plan.initial_samples.resize(cd.k());

  for (std::uint32_t j = 0; j < cd.k(); ++j) {
    ClusterSample& cs = plan.per_cluster[j];
    cs.cluster = j;
    const auto members = cd.members(j);

    if (params.t >= members.size()) {
      cs.mode = SampleMode::full;
      cs.probabilities.assign(members.size(), 1.0);
      cs.entries.reserve(members.size());
      for (std::uint32_t m : members) cs.entries.push_back({m, 1.0});
      continue;
    }

    if (strategy == Strategy::pps) {
      cs.mode = SampleMode::pps;
      plan.initial_samples[j] =
          draw_initial_sample(cd, j, params.delta, seed);
      cs.probabilities =
          pps_probabilities(cd, j, plan.initial_samples[j], params.t, &plan.distance_evals);
    } else {
      cs.mode = SampleMode::uniform;
      cs.probabilities = uniform_probabilities(cd, j, params.t);
    }

    for (std::size_t i = 0; i < members.size(); ++i) {
      if (keyed_uniform(seed, phase::final_draw, j, members[i]) < cs.probabilities[i]) {
        cs.entries.push_back({members[i], cs.probabilities[i]});
      }
    }
  }
  return plan;
}

std::string plan_to_json(const SamplingPlan& plan) {
  nlohmann::json root;  // object keys serialize sorted
  root["seed"] = plan.seed;
  root["strategy"] = to_string(plan.strategy);
  root["t"] = plan.params.t;
  root["delta"] = plan.params.delta;
  if (plan.params.epsilon) root["epsilon"] = *plan.params.epsilon;
  if (plan.params.c) root["c"] = *plan.params.c;

  nlohmann::json clusters = nlohmann::json::array();
  for (std::size_t j = 0; j < plan.per_cluster.size(); ++j) {
    const ClusterSample& cs = plan.per_cluster[j];
    nlohmann::json entry;
    entry["cluster"] = cs.cluster;
    entry["mode"] = cs.mode == SampleMode::full     ? "full"
                    : cs.mode == SampleMode::pps    ? "pps"
                                                    : "uniform";
    entry["initial_sample"] = plan.initial_samples[j];
    nlohmann::json drawn = nlohmann::json::array();
    for (const SampleEntry& se : cs.entries) {
      drawn.push_back(nlohmann::json{{"p", se.p}, {"point", se.point}});
    }
    entry["drawn"] = std::move(drawn);
    entry["probabilities"] = cs.probabilities;
    clusters.push_back(std::move(entry));
  }
  root["clusters"] = std::move(clusters);
  return root.dump();
}

}  // namespace clueval
