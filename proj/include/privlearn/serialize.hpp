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

#ifndef PRIVLEARN_SERIALIZE_HPP_
#define PRIVLEARN_SERIALIZE_HPP_

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "privlearn/audit.hpp"
#include "privlearn/concepts.hpp"
#include "privlearn/data.hpp"
#include "privlearn/experiment.hpp"
#include "privlearn/metrics.hpp"
#include "privlearn/prediction.hpp"

namespace privlearn {

using json = nlohmann::json;

// Rationals serialize as exact strings; integers are also accepted on input.
inline json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument(
      "rationals must be integers or strings like \"3/10\" or \"0.3\"");
}

// ---- datasets ----

inline json dataset_to_json(const Dataset& s) {
  json out = json::array();
  for (const auto& e : s) out.push_back({e.x, e.y});
  return out;
}

inline Dataset dataset_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("dataset must be a JSON array");
  Dataset s;
  s.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("dataset entries must be [x, y] pairs");
    }
    s.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return s;
}

inline void dataset_to_csv(std::ostream& os, const Dataset& s) {
  os << "x,y\n";
  for (const auto& e : s) os << e.x << ',' << e.y << '\n';
}

inline Dataset dataset_from_csv(std::istream& is) {
  Dataset s;
  std::string line;
  if (!std::getline(is, line) || line.rfind("x,y", 0) != 0) {
    throw std::invalid_argument("dataset CSV must start with an x,y header");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("dataset CSV rows must be x,y");
    }
    s.push_back({std::stoi(line.substr(0, comma)),
                 std::stoi(line.substr(comma + 1))});
  }
  return s;
}

// ---- concepts & hypotheses ----

inline json concept_to_json(const Concept& c) {
  return {{"kind", class_kind_name(c.kind)}, {"params", c.params}};
}

inline ClassKind class_kind_from_name(const std::string& name) {
  if (name == "points") return ClassKind::kPoints;
  if (name == "thresholds") return ClassKind::kThresholds;
  if (name == "intervals") return ClassKind::kIntervals;
  if (name == "union_k_intervals") return ClassKind::kUnionIntervals;
  throw std::invalid_argument("unknown concept class: " + name);
}

inline Concept concept_from_json(const json& j) {
  Concept c;
  c.kind = class_kind_from_name(j.at("kind").get<std::string>());
  c.params = j.at("params").get<std::vector<int>>();
  return c;
}

inline json hypothesis_to_json(const Hypothesis& h) {
  std::string bits;
  bits.reserve(h.table.size());
  for (auto b : h.table) bits.push_back(b ? '1' : '0');
  return {{"table", bits}};
}

inline Hypothesis hypothesis_from_json(const json& j) {
  const auto bits = j.at("table").get<std::string>();
  std::vector<std::uint8_t> table;
  table.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("hypothesis table must be a 0/1 string");
    }
    table.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return hypothesis_from_table(std::move(table), static_cast<int>(bits.size()));
}

inline json class_descriptor_to_json(const ConceptClassDescriptor& desc) {
  json out = {{"kind", class_kind_name(desc.kind)},
              {"domain_size", desc.domain_size}};
  if (desc.kind == ClassKind::kUnionIntervals) out["k"] = desc.max_intervals;
  return out;
}

inline ConceptClassDescriptor class_descriptor_from_json(const json& j) {
  ConceptClassDescriptor desc;
  desc.kind = class_kind_from_name(j.at("kind").get<std::string>());
  desc.domain_size = j.at("domain_size").get<int>();
  if (desc.kind == ClassKind::kUnionIntervals) {
    desc.max_intervals = j.at("k").get<int>();
  }
  desc.validate();
  return desc;
}

// ---- distributions ----

inline json distribution_to_json(const DistributionSpec& d) {
  json marginal = json::array(), p1 = json::array();
  for (const auto& m : d.marginal) marginal.push_back(rational_to_json(m));
  for (const auto& p : d.p1) p1.push_back(rational_to_json(p));
  return {{"marginal", marginal}, {"p1", p1}};
}

inline DistributionSpec distribution_from_json(const json& j) {
  DistributionSpec d;
  for (const auto& m : j.at("marginal")) d.marginal.push_back(rational_from_json(m));
  for (const auto& p : j.at("p1")) d.p1.push_back(rational_from_json(p));
  d.validate();
  return d;
}

// ---- predictor state ----

inline json predictor_state_to_json(const PredictorState& state) {
  json hyps = json::array();
  for (const auto& g : state.hypotheses) hyps.push_back(concept_to_json(g));
  return {{"hypotheses", hyps},
          {"eps_per_query", rational_to_json(state.eps_per_query)},
          {"domain_size", state.domain_size},
          {"r", state.hypotheses.size()}};
}

inline PredictorState predictor_state_from_json(const json& j) {
  PredictorState state;
  for (const auto& g : j.at("hypotheses")) {
    state.hypotheses.push_back(concept_from_json(g));
  }
  state.eps_per_query = rational_from_json(j.at("eps_per_query"));
  state.domain_size = j.at("domain_size").get<int>();
  if (state.hypotheses.empty()) {
    throw std::invalid_argument("predictor state has no hypotheses");
  }
  return state;
}

// ---- audit reports ----

inline json audit_report_to_json(const AuditReport& report) {
  json events = json::array();
  for (const auto& ev : report.events) {
    events.push_back({{"key", ev.key},
                      {"count1", ev.count1},
                      {"count2", ev.count2},
                      {"p1_lo", ev.p1_lo},
                      {"p1_hi", ev.p1_hi},
                      {"p2_lo", ev.p2_lo},
                      {"p2_hi", ev.p2_hi},
                      {"log_ratio_lower", ev.log_ratio_lower}});
  }
  return {{"eps_hat", report.eps_hat},
          {"inconclusive", report.inconclusive},
          {"trials", report.trials},
          {"confidence", report.confidence},
          {"events", events}};
}

inline void audit_report_to_csv(std::ostream& os, const AuditReport& report) {
  os << "event,count1,count2,p1_lo,p1_hi,p2_lo,p2_hi,log_ratio_lower\n";
  char buf[64];
  const auto fmt = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
  };
  for (const auto& ev : report.events) {
    os << ev.key << ',' << ev.count1 << ',' << ev.count2 << ',' << fmt(ev.p1_lo)
       << ',' << fmt(ev.p1_hi) << ',' << fmt(ev.p2_lo) << ',' << fmt(ev.p2_hi)
       << ',' << fmt(ev.log_ratio_lower) << '\n';
  }
}

// ---- experiment config & results ----

inline RunMode run_mode_from_name(const std::string& name) {
  if (name == "new-transform") return RunMode::kNewTransform;
  if (name == "baseline-subsample-only") return RunMode::kBaselineSubsampleOnly;
  if (name == "non-private") return RunMode::kNonPrivate;
  throw std::invalid_argument("unknown mode: " + name);
}

inline ExperimentConfig experiment_config_from_json(const json& j) {
  ExperimentConfig cfg;
  cfg.concept_class = class_descriptor_from_json(j.at("class"));
  const auto& dist = j.at("distribution");
  const auto type = dist.at("type").get<std::string>();
  if (type == "noisy_threshold") {
    cfg.dist.kind = DistributionGenSpec::Kind::kNoisyThreshold;
    cfg.dist.t_star = dist.at("t_star").get<int>();
    cfg.dist.eta = rational_from_json(dist.at("eta"));
  } else if (type == "noisy_interval") {
    cfg.dist.kind = DistributionGenSpec::Kind::kNoisyInterval;
    cfg.dist.a = dist.at("a").get<int>();
    cfg.dist.b = dist.at("b").get<int>();
    cfg.dist.eta = rational_from_json(dist.at("eta"));
  } else if (type == "uniform_labels") {
    cfg.dist.kind = DistributionGenSpec::Kind::kUniformLabels;
  } else {
    throw std::invalid_argument("unknown distribution type: " + type);
  }
  cfg.modes.clear();
  for (const auto& m : j.at("modes")) {
    cfg.modes.push_back(run_mode_from_name(m.get<std::string>()));
  }
  cfg.n_grid = j.at("n_grid").get<std::vector<std::size_t>>();
  for (const auto& e : j.at("eps_grid")) cfg.eps_grid.push_back(rational_from_json(e));
  for (const auto& a : j.at("alpha_grid")) cfg.alpha_grid.push_back(rational_from_json(a));
  cfg.trials = j.at("trials").get<std::size_t>();
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.audit_trials = j.value("audit_trials", std::size_t{0});
  cfg.audit_confidence = j.value("audit_confidence", 0.95);
  cfg.validate();
  return cfg;
}

inline json result_rows_to_json(const ExperimentConfig& cfg,
                                const ExperimentResult& result,
                                bool include_wall_time) {
  json rows = json::array();
  for (const auto& row : result.rows) {
    json r = {{"class", class_kind_name(cfg.concept_class.kind)},
              {"N", cfg.concept_class.domain_size},
              {"mode", run_mode_name(row.mode)},
              {"n", row.n},
              {"eps", rational_to_json(row.eps)},
              {"alpha", rational_to_json(row.alpha)},
              {"median_excess", row.median_excess},
              {"mean_excess", row.mean_excess},
              {"failure_fraction", row.failure_fraction}};
    if (row.eps_hat) r["eps_hat"] = *row.eps_hat;
    if (include_wall_time) r["wall_ms"] = row.wall_ms;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace privlearn

#endif  // PRIVLEARN_SERIALIZE_HPP_
