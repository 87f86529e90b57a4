// Copyright 2026 The privlearn Authors
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

#ifndef PRIVLEARN_EXPERIMENT_HPP_
#define PRIVLEARN_EXPERIMENT_HPP_

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "privlearn/audit.hpp"
#include "privlearn/metrics.hpp"
#include "privlearn/synth.hpp"
#include "privlearn/transform.hpp"

namespace privlearn {

enum class RunMode { kNewTransform, kBaselineSubsampleOnly, kNonPrivate };

inline std::string run_mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::kNewTransform:
      return "new-transform";
    case RunMode::kBaselineSubsampleOnly:
      return "baseline-subsample-only";
    case RunMode::kNonPrivate:
      return "non-private";
  }
  throw std::logic_error("unknown run mode");
}

struct DistributionGenSpec {
  enum class Kind { kNoisyThreshold, kNoisyInterval, kUniformLabels };

  Kind kind = Kind::kNoisyThreshold;
  int t_star = 0;
  int a = 0, b = 0;
  Rational eta{0};

  DistributionSpec make(int domain_size) const {
    switch (kind) {
      case Kind::kNoisyThreshold:
        return gen_noisy_threshold(domain_size, t_star, eta);
      case Kind::kNoisyInterval:
        return gen_noisy_interval(domain_size, a, b, eta);
      case Kind::kUniformLabels:
        return gen_uniform_random_labels(domain_size);
    }
    throw std::logic_error("unknown distribution kind");
  }

  std::string name() const {
    switch (kind) {
      case Kind::kNoisyThreshold:
        return "noisy_threshold";
      case Kind::kNoisyInterval:
        return "noisy_interval";
      case Kind::kUniformLabels:
        return "uniform_labels";
    }
    throw std::logic_error("unknown distribution kind");
  }
};

struct ExperimentConfig {
  ConceptClassDescriptor concept_class;
  DistributionGenSpec dist;
  std::vector<RunMode> modes = {RunMode::kNewTransform};
  std::vector<std::size_t> n_grid;
  std::vector<Rational> eps_grid;
  std::vector<Rational> alpha_grid;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t audit_trials = 0;  // 0 disables per-cell audits
  double audit_confidence = 0.95;

  void validate() const {
    concept_class.validate();
    if (modes.empty() || n_grid.empty() || eps_grid.empty() ||
        alpha_grid.empty()) {
      throw std::invalid_argument("experiment grids must be nonempty");
    }
    if (trials < 1) throw std::invalid_argument("need at least one trial");
  }
};

struct TrialRecord {
  RunMode mode{};
  std::size_t n = 0;
  Rational eps{0};
  Rational alpha{0};
  std::size_t trial = 0;
  std::optional<Rational> excess_error;  // empty when the trial errored
  bool failed = false;                   // excess > alpha, or trial errored
  std::optional<double> eps_hat;
};

struct ResultRow {
  RunMode mode{};
  std::size_t n = 0;
  Rational eps{0};
  Rational alpha{0};
  double median_excess = 0;
  double mean_excess = 0;
  double failure_fraction = 0;
  std::optional<double> eps_hat;
  double wall_ms = 0;
};

struct ExperimentResult {
  std::vector<TrialRecord> trials;
  std::vector<ResultRow> rows;
};

// Exact bit-pattern key for small domains; a stable hash beyond 64 points.
// Hash collisions only coarsen the audit partition, never unsound.
inline std::uint64_t hypothesis_event_key(const Hypothesis& h) {
  if (h.table.size() <= 64) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < h.table.size(); ++i) {
      key |= static_cast<std::uint64_t>(h.table[i]) << i;
    }
    return key;
  }
  std::uint64_t hash = 1469598103934665603ULL;
  for (auto b : h.table) {
    hash = (hash ^ b) * 1099511628211ULL;
  }
  return hash;
}

// One pipeline run for the given mode. Substreams: 0 subsampling,
// 1 selection, 2 base learner, mirroring the agnostic learner.
inline Hypothesis run_pipeline(RunMode mode,
                               const ConceptClassDescriptor& desc,
                               const Rational& eps, const Dataset& s,
                               RandomStream& rng) {
  switch (mode) {
    case RunMode::kNewTransform: {
      AgnConfig cfg;
      cfg.concept_class = desc;
      cfg.eps = eps;
      cfg.base = em_private_empirical_learner(desc, Rational(1));
      return agnostic_learn(cfg, s, rng);
    }
    case RunMode::kBaselineSubsampleOnly: {
      const std::size_t n = s.size();
      if (eps * Rational(static_cast<long long>(n)) < Rational(1)) {
        throw std::invalid_argument("subsample empty: eps * n must be >= 1");
      }
      const std::size_t k = subsample_size(eps, n);
      auto sub_rng = rng.derive(0);
      auto em_rng = rng.derive(1);
      auto base_rng = rng.derive(2);
      const IndexSet indices = subsample_uniform_indices(n, k, sub_rng);
      auto [t, w] = split_by_index(s, indices);
      (void)w;  // the subsample-only pipeline discards W
      RelabelOutcome rel =
          relabel(desc, t, t, eps, em_rng, RelabelScore::kEmpirical);
      return em_private_empirical_learner(desc, Rational(1))
          .run(rel.relabeled, base_rng);
    }
    case RunMode::kNonPrivate: {
      auto base_rng = rng.derive(2);
      return erm_baseline_learner(desc).run(s, base_rng);
    }
  }
  throw std::logic_error("unknown run mode");
}

// Sweeps the grid; one deterministic substream per (cell, trial). Trial
// failures are recorded, never abort the sweep.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const DistributionSpec d = cfg.dist.make(cfg.concept_class.domain_size);
  const Rational opt = optimal_error(cfg.concept_class, d);
  ExperimentResult result;
  std::uint64_t cell_index = 0;
  const RandomStream root(cfg.seed);

  for (RunMode mode : cfg.modes) {
    for (std::size_t n : cfg.n_grid) {
      for (const Rational& eps : cfg.eps_grid) {
        for (const Rational& alpha : cfg.alpha_grid) {
          const auto started = std::chrono::steady_clock::now();
          const RandomStream cell_rng = root.derive(cell_index);
          std::vector<Rational> successes;
          std::size_t failures = 0;

          for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            TrialRecord rec;
            rec.mode = mode;
            rec.n = n;
            rec.eps = eps;
            rec.alpha = alpha;
            rec.trial = trial;
            auto trial_rng = cell_rng.derive(trial);
            try {
              auto data_rng = trial_rng.derive(0);
              auto pipe_rng = trial_rng.derive(1);
              const Dataset s = sample_dataset(d, n, data_rng);
              const Hypothesis out =
                  run_pipeline(mode, cfg.concept_class, eps, s, pipe_rng);
              const Rational excess =
                  generalization_error(out, d) - opt;
              rec.excess_error = excess;
              rec.failed = excess > alpha;
              successes.push_back(excess);
            } catch (const std::exception&) {
              rec.failed = true;
            }
            if (rec.failed) ++failures;
            result.trials.push_back(std::move(rec));
          }

          ResultRow row;
          row.mode = mode;
          row.n = n;
          row.eps = eps;
          row.alpha = alpha;
          row.failure_fraction =
              static_cast<double>(failures) / static_cast<double>(cfg.trials);
          if (!successes.empty()) {
            std::vector<Rational> sorted = successes;
            std::sort(sorted.begin(), sorted.end());
            const std::size_t mid = sorted.size() / 2;
            row.median_excess =
                sorted.size() % 2 == 1
                    ? to_double(sorted[mid])
                    : (to_double(sorted[mid - 1]) + to_double(sorted[mid])) / 2.0;
            Rational total(0);
            for (const auto& e : sorted) total += e;
            row.mean_excess =
                to_double(total) / static_cast<double>(sorted.size());
          }

          if (cfg.audit_trials > 0) {
            auto audit_rng = cell_rng.derive(0xA0D17ULL);
            auto data_rng = audit_rng.derive(0);
            const Dataset s1 = sample_dataset(d, n, data_rng);
            Dataset s2 = neighboring(s1, 0, {s1[0].x, 1 - s1[0].y});
            AuditPlan plan;
            plan.s1 = s1;
            plan.s2 = s2;
            plan.trials = cfg.audit_trials;
            plan.confidence = cfg.audit_confidence;
            plan.mechanism = [mode, &cfg, eps](const Dataset& input,
                                               RandomStream& mech_rng) {
              return hypothesis_event_key(
                  run_pipeline(mode, cfg.concept_class, eps, input, mech_rng));
            };
            auto run_rng = audit_rng.derive(1);
            const AuditReport rep = estimate_epsilon(plan, run_rng);
            row.eps_hat = rep.eps_hat;
            for (auto it = result.trials.end() -
                           static_cast<long>(cfg.trials);
                 it != result.trials.end(); ++it) {
              it->eps_hat = rep.eps_hat;
            }
          }

          row.wall_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
          result.rows.push_back(std::move(row));
          ++cell_index;
        }
      }
    }
  }
  return result;
}

// Stable schema: class,N,mode,n,eps,alpha,trial,excess_error,failed,eps_hat,seed
inline void write_trials_csv(std::ostream& os, const ExperimentConfig& cfg,
                             const ExperimentResult& result) {
  const auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
  };
  os << "class,N,mode,n,eps,alpha,trial,excess_error,failed,eps_hat,seed\n";
  for (const auto& rec : result.trials) {
    os << class_kind_name(cfg.concept_class.kind) << ','
       << cfg.concept_class.domain_size << ',' << run_mode_name(rec.mode) << ','
       << rec.n << ',' << fmt(to_double(rec.eps)) << ','
       << fmt(to_double(rec.alpha)) << ',' << rec.trial << ','
       << (rec.excess_error ? fmt(to_double(*rec.excess_error)) : "nan") << ','
       << (rec.failed ? 1 : 0) << ','
       << (rec.eps_hat ? fmt(*rec.eps_hat) : "") << ',' << cfg.seed << '\n';
  }
}

}  // namespace privlearn

#endif  // PRIVLEARN_EXPERIMENT_HPP_
