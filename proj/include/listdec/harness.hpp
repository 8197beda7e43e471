// Copyright 2026 The listdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace listdec {

/// One experiment run. Loaded from JSON with top-level keys `experiment`,
/// `params` (flat map; list values span a grid where the experiment allows it),
/// `seed` (mandatory) and `output`. Threads and timing are runtime settings.
struct ExperimentConfig {
  std::string experiment;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string output;
  unsigned threads = 1;
  bool timing = false;

  static ExperimentConfig from_json(const nlohmann::json& j);
};

ExperimentConfig load_config(const std::string& path);

struct ExperimentRecord {
  std::uint64_t trial = 0;
  std::uint64_t derived_seed = 0;      // derive_seed(seed, trial)
  std::vector<std::string> params;     // one value per ExperimentTable::param_columns
  std::string quantity;
  double value = 0.0;
  std::string method;
  std::optional<double> wall_ms;
};

struct ExperimentTable {
  std::string experiment;
  std::vector<std::string> param_columns;
  std::vector<ExperimentRecord> records;

  std::size_t error_count() const;
  // Records named verdict_* whose value is 0.
  std::size_t violation_count() const;
};

/// Fixed parameter columns of an experiment, in CSV order.
std::vector<std::string> experiment_columns(const std::string& experiment);
const std::vector<std::string>& experiment_names();

ExperimentTable run_rip_scan(const ExperimentConfig& config);
ExperimentTable run_reduction_chain(const ExperimentConfig& config);
ExperimentTable run_johnson_audit(const ExperimentConfig& config);
ExperimentTable run_covering_curve(const ExperimentConfig& config);
ExperimentTable run_moment_audit(const ExperimentConfig& config);
ExperimentTable run_experiment(const ExperimentConfig& config);

/// Header experiment,trial,derived_seed,<params>,quantity,value,method,wall_ms.
/// Values use %.11e; wall_ms is empty unless timing was requested.
void write_csv(std::ostream& out, const ExperimentTable& table);
void write_json(std::ostream& out, const ExperimentTable& table);

std::string summarize(const ExperimentTable& table);

/// Column reference for --help.
std::string csv_schema_help();

}  // namespace listdec
