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

#include "listdec/error.hpp"
#include "listdec/harness.hpp"
#include "listdec/random.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

using namespace listdec;
using nlohmann::json;

namespace {

ExperimentConfig config(const std::string& experiment, json params, std::uint64_t seed, unsigned threads = 1) {
  ExperimentConfig c = ExperimentConfig::from_json({{"experiment", experiment}, {"params", params}, {"seed", seed}});
  c.threads = threads;
  return c;
}

std::string csv(const ExperimentTable& t) {
  std::ostringstream out;
  write_csv(out, t);
  return out.str();
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("config validation") {
    CHECK_THROWS_AS(ExperimentConfig::from_json({{"experiment", "rip_scan"}}), InputError);
    CHECK_THROWS_AS(ExperimentConfig::from_json({{"experiment", "nope"}, {"seed", 1}}), InputError);
    CHECK_THROWS_AS(ExperimentConfig::from_json({{"experiment", "rip_scan"}, {"seed", -1}}), InputError);
    CHECK_THROWS_AS(ExperimentConfig::from_json({{"experiment", "rip_scan"}, {"seed", 1}, {"extra", 2}}), InputError);
    const auto c = ExperimentConfig::from_json(
        {{"experiment", "moment_audit"}, {"seed", 5}, {"output", "x.csv"}, {"params", {{"grids", 3}}}});
    CHECK(c.seed == 5);
    CHECK(c.output == "x.csv");
    CHECK_THROWS_AS(run_experiment(config("moment_audit", {{"bogus", 1}}, 1)), InputError);
    CHECK_THROWS_AS(run_experiment(config("moment_audit", {{"m_max", 20}}, 1)), BudgetError);
    CHECK_THROWS_AS(run_experiment(config("reduction_chain", {{"L", 7}}, 1)), BudgetError);
    CHECK_THROWS_AS(run_experiment(config("reduction_chain", {{"ktilde", 11}}, 1)), BudgetError);
  }

  TEST_CASE("csv layout is fixed per experiment") {
    for (const auto& name : experiment_names()) {
      json params;
      if (name == "rip_scan") params = {{"ktilde", 3}, {"k", 2}, {"trials", 4}};
      if (name == "reduction_chain") params = {{"trials", 3}};
      if (name == "johnson_audit") params = {{"trials", 5}};
      if (name == "covering_curve") params = {{"ktilde", 4}, {"rows", 4}, {"k", 2}, {"m", {2, 4}}, {"trials", 5}};
      if (name == "moment_audit") params = {{"grids", 4}};
      const auto t = run_experiment(config(name, params, 11));
      const std::string text = csv(t);
      std::stringstream ss(text);
      std::string header;
      std::getline(ss, header);
      auto cols = split(header);
      std::vector<std::string> expect{"experiment", "trial", "derived_seed"};
      for (const auto& c : experiment_columns(name)) expect.push_back(c);
      for (const char* c : {"quantity", "value", "method", "wall_ms"}) expect.emplace_back(c);
      CHECK(cols == expect);
      std::string line;
      std::size_t rows = 0;
      while (std::getline(ss, line)) {
        const auto cells = split(line);
        REQUIRE(cells.size() == expect.size());
        CHECK(cells[0] == name);
        CHECK(cells.back().empty());
        const auto trial = std::stoull(cells[1]);
        CHECK(std::stoull(cells[2]) == derive_seed(11, trial));
        ++rows;
      }
      CHECK(rows == t.records.size());
      CHECK(rows > 0);
    }
  }

  TEST_CASE("values use 12 significant digits") {
    const auto t = run_experiment(config("moment_audit", {{"grids", 2}}, 1));
    const auto cells = split(csv(t).substr(csv(t).find('\n') + 1));
    const std::string v = cells[cells.size() - 3];
    CHECK(v.find('e') == 13);
    CHECK(v.find('.') == 1 + (v[0] == '-'));
  }

  TEST_CASE("output is identical across worker counts") {
    const json chain = {{"trials", 12}};
    CHECK(csv(run_experiment(config("reduction_chain", chain, 3, 1))) ==
          csv(run_experiment(config("reduction_chain", chain, 3, 4))));
    const json scan = {{"ktilde", {3, 4}}, {"k", {2}}, {"trials", 6}, {"mode", "sampled"}};
    CHECK(csv(run_experiment(config("rip_scan", scan, 3, 1))) == csv(run_experiment(config("rip_scan", scan, 3, 3))));
    const json cover = {{"ktilde", 5}, {"rows", 8}, {"k", 3}, {"m", {2, 8}}, {"trials", 9}};
    CHECK(csv(run_experiment(config("covering_curve", cover, 3, 1))) ==
          csv(run_experiment(config("covering_curve", cover, 3, 2))));
    const json moment = {{"grids", 30}};
    CHECK(csv(run_experiment(config("moment_audit", moment, 3, 1))) ==
          csv(run_experiment(config("moment_audit", moment, 3, 2))));
  }

  TEST_CASE("reduction chain reports every quantity and no violations") {
    const auto t = run_reduction_chain(config("reduction_chain", {{"trials", 30}}, 8));
    CHECK(t.violation_count() == 0);
    CHECK(t.error_count() == 0);
    std::map<std::string, int> counts;
    for (const auto& r : t.records) ++counts[r.quantity];
    for (const char* q : {"phi_equivalence_maxdiff", "duplicate_codewords", "rip_constant", "min_avg_distance",
                          "johnson_radius", "johnson_list_max", "rip_to_ld_list_max", "verdict_rip_implies_distance",
                          "verdict_distance_implies_johnson", "verdict_johnson_implies_oracle", "verdict_rip_implies_ld"})
      CHECK(counts[q] == 30);
    for (const auto& r : t.records)
      if (r.quantity == "phi_equivalence_maxdiff") CHECK(r.value <= 1e-12);
  }

  TEST_CASE("rank-deficient generators give RIP constant at least 1") {
    const auto t = run_reduction_chain(config("reduction_chain", {{"trials", 10}, {"rank_deficient", true}}, 2));
    std::size_t seen = 0;
    for (const auto& r : t.records) {
      if (r.quantity == "duplicate_codewords") CHECK(r.value == 1.0);
      if (r.quantity == "rip_constant") {
        CHECK(r.value >= 1.0 - 1e-9);
        ++seen;
      }
    }
    CHECK(seen == 10);
    CHECK(t.violation_count() == 0);
  }

  TEST_CASE("rip_scan keeps going past budget errors") {
    const auto t = run_rip_scan(config("rip_scan", {{"ktilde", {3, 14}}, {"k", {2}}, {"trials", 4}}, 1));
    CHECK(t.error_count() == 1);
    bool m_star = false;
    for (const auto& r : t.records) m_star |= r.quantity == "m_star";
    CHECK(m_star);
    const auto again = run_rip_scan(config("rip_scan", {{"ktilde", {3, 14}}, {"k", {2}}, {"trials", 4}}, 1));
    CHECK(csv(t) == csv(again));
  }

  TEST_CASE("johnson and moment audits find no violations") {
    CHECK(run_johnson_audit(config("johnson_audit", {{"trials", 100}}, 4)).violation_count() == 0);
    CHECK(run_moment_audit(config("moment_audit", {{"grids", 100}}, 4)).violation_count() == 0);
  }

  TEST_CASE("timing fills wall_ms and json output parses") {
    auto c = config("moment_audit", {{"grids", 3}}, 1);
    c.timing = true;
    const auto t = run_experiment(c);
    for (const auto& r : t.records) CHECK(r.wall_ms.has_value());
    std::ostringstream out;
    write_json(out, t);
    const auto doc = json::parse(out.str());
    CHECK(doc["experiment"] == "moment_audit");
    CHECK(doc["records"].size() == t.records.size());
    CHECK(summarize(t).find("0 violations") != std::string::npos);
  }
}
