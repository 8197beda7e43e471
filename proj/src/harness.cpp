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

#include "listdec/harness.hpp"

#include "listdec/bounds.hpp"
#include "listdec/chaining.hpp"
#include "listdec/codes.hpp"
#include "listdec/error.hpp"
#include "listdec/gf.hpp"
#include "listdec/oracle.hpp"
#include "listdec/parallel.hpp"
#include "listdec/random.hpp"
#include "listdec/rip.hpp"
#include "listdec/simplex.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

namespace listdec {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

const std::map<std::string, std::vector<std::string>>& column_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"rip_scan", {"q", "ktilde", "k", "delta_target", "gamma", "mode", "rows"}},
      {"reduction_chain", {"q", "ktilde", "n", "L"}},
      {"johnson_audit", {"q", "ktilde", "n", "L"}},
      {"covering_curve", {"q", "ktilde", "rows", "k", "s", "m"}},
      {"moment_audit", {"K", "m", "s"}},
  };
  return table;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_value(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Typed access to the flat `params` map with unknown-key rejection.
class Params {
 public:
  Params(const json& j, const std::string& experiment, std::set<std::string> allowed) {
    require(j.is_object(), "params must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      require(allowed.count(it.key()) > 0,
              "unknown parameter '" + it.key() + "' for experiment " + experiment);
    }
    j_ = j;
  }

  std::uint64_t integer(const std::string& key, std::uint64_t fallback) const {
    if (!j_.contains(key)) return fallback;
    return as_integer(j_.at(key), key);
  }

  std::vector<std::uint64_t> integers(const std::string& key, std::vector<std::uint64_t> fallback) const {
    if (!j_.contains(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_array()) return {as_integer(v, key)};
    require(!v.empty(), "parameter '" + key + "' is an empty list");
    std::vector<std::uint64_t> out;
    for (const auto& e : v) out.push_back(as_integer(e, key));
    return out;
  }

  double real(const std::string& key, double fallback) const {
    if (!j_.contains(key)) return fallback;
    const json& v = j_.at(key);
    require(v.is_number(), "parameter '" + key + "' must be a number");
    const double d = v.get<double>();
    require(std::isfinite(d), "parameter '" + key + "' must be finite");
    return d;
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    if (!j_.contains(key)) return fallback;
    require(j_.at(key).is_string(), "parameter '" + key + "' must be a string");
    return j_.at(key).get<std::string>();
  }

  bool flag(const std::string& key, bool fallback) const {
    if (!j_.contains(key)) return fallback;
    require(j_.at(key).is_boolean(), "parameter '" + key + "' must be a boolean");
    return j_.at(key).get<bool>();
  }

 private:
  static std::uint64_t as_integer(const json& v, const std::string& key) {
    require(v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0),
            "parameter '" + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
  }

  json j_;
};

ExperimentTable make_table(const std::string& experiment) {
  ExperimentTable t;
  t.experiment = experiment;
  t.param_columns = experiment_columns(experiment);
  return t;
}

/// Records of one trial, built in a fixed order.
struct TrialSink {
  std::uint64_t trial;
  std::uint64_t seed;
  std::vector<std::string> params;
  std::vector<ExperimentRecord> records;

  void add(const std::string& quantity, double value, const std::string& method) {
    records.push_back({trial, seed, params, quantity, value, method, std::nullopt});
  }
  void error(const std::exception& e) {
    const bool budget = dynamic_cast<const BudgetError*>(&e) != nullptr;
    add("error", std::nan(""), budget ? "budget_error" : "input_error");
  }
  void stamp(double ms) {
    for (auto& r : records) r.wall_ms = ms;
  }
};

void append(ExperimentTable& table, std::vector<TrialSink>& sinks, bool timing, const std::vector<double>& ms) {
  for (std::size_t i = 0; i < sinks.size(); ++i) {
    if (timing) sinks[i].stamp(ms[i]);
    for (auto& r : sinks[i].records) table.records.push_back(std::move(r));
  }
}

RipMode parse_mode(const std::string& mode) {
  if (mode == "automatic" || mode == "auto") return RipMode::automatic;
  if (mode == "exact") return RipMode::exact;
  if (mode == "sampled") return RipMode::sampled;
  throw InputError("unknown RIP mode '" + mode + "'");
}

const char* verdict_method(bool hypothesis) { return hypothesis ? "checked" : "vacuous"; }

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  require(j.is_object(), "config must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& k = it.key();
    require(k == "experiment" || k == "params" || k == "seed" || k == "output",
            "unknown config key '" + k + "'");
  }
  require(j.contains("experiment") && j.at("experiment").is_string(), "config needs an experiment name");
  require(j.contains("seed"), "config needs a seed");
  const json& seed = j.at("seed");
  require(seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<std::int64_t>() >= 0),
          "seed must be a non-negative integer");
  ExperimentConfig c;
  c.experiment = j.at("experiment").get<std::string>();
  require(column_table().count(c.experiment) > 0, "unknown experiment '" + c.experiment + "'");
  c.seed = seed.get<std::uint64_t>();
  if (j.contains("params")) c.params = j.at("params");
  require(c.params.is_object(), "params must be a JSON object");
  if (j.contains("output")) {
    require(j.at("output").is_string(), "output must be a path string");
    c.output = j.at("output").get<std::string>();
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("malformed config '" + path + "': " + e.what());
  }
  return ExperimentConfig::from_json(j);
}

std::size_t ExperimentTable::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) { return r.quantity == "error"; }));
}

std::size_t ExperimentTable::violation_count() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
    return r.quantity.rfind("verdict_", 0) == 0 && r.value == 0.0;
  }));
}

std::vector<std::string> experiment_columns(const std::string& experiment) {
  const auto it = column_table().find(experiment);
  require(it != column_table().end(), "unknown experiment '" + experiment + "'");
  return it->second;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"rip_scan", "reduction_chain", "johnson_audit",
                                                 "covering_curve", "moment_audit"};
  return names;
}

ExperimentTable run_rip_scan(const ExperimentConfig& config) {
  const Params p(config.params, "rip_scan",
                 {"q", "ktilde", "k", "delta_target", "trials", "gamma", "mode", "sampled_trials"});
  const auto q = static_cast<unsigned>(p.integer("q", 2));
  const auto ktildes = p.integers("ktilde", {8});
  const auto ks = p.integers("k", {2});
  const double delta = p.real("delta_target", 0.5);
  const std::size_t trials = p.integer("trials", 40);
  const double gamma = p.real("gamma", 0.1);
  const std::string mode = p.text("mode", "automatic");
  RowSearchOptions options;
  options.mode = parse_mode(mode);
  options.success_threshold = 1.0 - gamma;
  options.sampled_trials = p.integer("sampled_trials", 8);
  options.threads = config.threads;
  require(gamma > 0.0 && gamma < 1.0, "gamma must lie in (0, 1)");
  require(trials >= 1, "trials must be >= 1");
  const FieldPtr field = field_of_order(q);

  ExperimentTable table = make_table("rip_scan");
  std::uint64_t g = 0;
  for (auto kt : ktildes) {
    for (auto k : ks) {
      const auto start = Clock::now();
      TrialSink sink{g, derive_seed(config.seed, g), {}, {}};
      auto params_for = [&](const std::string& rows) {
        return std::vector<std::string>{std::to_string(q), std::to_string(kt), std::to_string(k),
                                        fmt_double(delta), fmt_double(gamma), mode, rows};
      };
      try {
        const auto result = min_rows_for_rip(field, kt, k, delta, trials, sink.seed, options);
        auto probes = result.probes;
        std::sort(probes.begin(), probes.end(), [](const auto& a, const auto& b) { return a.rows < b.rows; });
        const std::string method = to_string(result.method);
        for (const auto& probe : probes) {
          sink.params = params_for(std::to_string(probe.rows));
          sink.add("success_prob", probe.success_prob, method);
        }
        sink.params = params_for(std::to_string(result.m_star));
        sink.add("m_star", static_cast<double>(result.m_star), method);
      } catch (const BudgetError& e) {
        sink.params = params_for("na");
        sink.error(e);
      } catch (const InputError& e) {
        sink.params = params_for("na");
        sink.error(e);
      }
      if (config.timing) sink.stamp(elapsed_ms(start));
      for (auto& r : sink.records) table.records.push_back(std::move(r));
      ++g;
    }
  }
  return table;
}

ExperimentTable run_reduction_chain(const ExperimentConfig& config) {
  const Params p(config.params, "reduction_chain", {"q", "ktilde", "n", "L", "trials", "rank_deficient"});
  const auto q = static_cast<unsigned>(p.integer("q", 2));
  const std::size_t kt = p.integer("ktilde", 3);
  const std::size_t n = p.integer("n", 12);
  const std::size_t L = p.integer("L", 3);
  const std::size_t trials = p.integer("trials", 100);
  const bool rank_deficient = p.flag("rank_deficient", false);
  const FieldPtr field = field_of_order(q);
  require(kt >= 1 && n >= 1, "ktilde and n must be >= 1");
  require(L >= 3, "the reduction chain needs L >= 3");
  require_budget(L <= 6, "reduction chain limited to L <= 6");
  require_budget(checked_power(q, kt, kCenterBudget + 1) <= (1u << 10), "reduction chain limited to q^ktilde <= 2^10");
  require_budget(checked_power(q, n, kCenterBudget + 1) <= kCenterBudget, "oracle limited to q^n <= 2^24");

  const std::vector<std::string> params = {std::to_string(q), std::to_string(kt), std::to_string(n),
                                           std::to_string(L)};
  std::vector<TrialSink> sinks(trials);
  std::vector<double> ms(trials, 0.0);
  parallel_for(trials, config.threads, [&](std::size_t t) {
    const auto start = Clock::now();
    TrialSink& sink = sinks[t];
    sink = {t, derive_seed(config.seed, t), params, {}};
    try {
      GeneratorMatrix gen = random_generator(field, kt, n, sink.seed);
      if (rank_deficient && kt >= 1) {
        auto entries = gen.entries();
        std::fill(entries.end() - static_cast<std::ptrdiff_t>(n), entries.end(), Symbol{0});
        gen = GeneratorMatrix(field, kt, n, std::move(entries));
      }
      const LinearCode code(gen);
      const ComplexMatrix via_code = phi_code(code);
      const auto T = gen.column_indices();
      const ComplexMatrix via_lin = phi_lin_sub(field, kt, T);
      sink.add("phi_equivalence_maxdiff", via_code.max_abs_diff(via_lin), "entrywise");
      sink.add("duplicate_codewords", code.has_duplicate_codewords() ? 1.0 : 0.0, "exact");

      const DenseGram gram(via_code, std::sqrt(static_cast<double>((q - 1) * n)));
      const RipReport rip = rip_constant_exact(gram, L);
      sink.add("rip_constant", rip.delta, to_string(rip.method));

      const SubsetMinimum sub = min_avg_distance_over_subsets(code, L);
      const double dist = sub.value.to_double();
      sink.add("min_avg_distance", dist, "exact");
      const double floor = rip_distance_floor(q, L);
      sink.add("rip_distance_floor", floor, "closed_form");

      const ListDecodingBound johnson = avg_johnson_bound(q, dist, L);
      sink.add("johnson_radius", johnson.radius, to_string(johnson.provenance));
      const auto johnson_list = list_size_at_radius(code, radius_cutoff(johnson.radius));
      sink.add("johnson_list_max", static_cast<double>(johnson_list.max_count), "exhaustive");

      const ListDecodingBound rip_ld = rip_to_ld_radius(q, L);
      sink.add("rip_to_ld_radius", rip_ld.radius, to_string(rip_ld.provenance));
      const auto rip_list = list_size_at_radius(code, radius_cutoff(rip_ld.radius));
      sink.add("rip_to_ld_list_max", static_cast<double>(rip_list.max_count), "exhaustive");

      const bool rip_ok = rip.delta <= 0.5 + 1e-12;
      const bool dist_ok = dist >= floor - 1e-12;
      sink.add("verdict_rip_implies_distance", (!rip_ok || dist_ok) ? 1.0 : 0.0, verdict_method(rip_ok));
      sink.add("verdict_distance_implies_johnson", (!dist_ok || johnson.radius >= rip_ld.radius - 1e-12) ? 1.0 : 0.0,
               verdict_method(dist_ok));
      sink.add("verdict_johnson_implies_oracle", johnson_list.max_count <= johnson.list_size ? 1.0 : 0.0,
               "checked");
      sink.add("verdict_rip_implies_ld", (!rip_ok || rip_list.max_count <= rip_ld.list_size) ? 1.0 : 0.0,
               verdict_method(rip_ok));
    } catch (const std::invalid_argument& e) {
      sink.error(e);
    } catch (const BudgetError& e) {
      sink.error(e);
    }
    ms[t] = elapsed_ms(start);
  });
  ExperimentTable table = make_table("reduction_chain");
  append(table, sinks, config.timing, ms);
  return table;
}

ExperimentTable run_johnson_audit(const ExperimentConfig& config) {
  const Params p(config.params, "johnson_audit", {"q", "ktilde", "n", "L", "trials"});
  const auto qs = p.integers("q", {2, 3});
  const auto kts = p.integers("ktilde", {1, 2, 3});
  const auto ns = p.integers("n", {2, 3, 4, 5, 6, 7, 8});
  const auto Ls = p.integers("L", {2, 3, 4});
  const std::size_t trials = p.integer("trials", 1000);

  std::vector<TrialSink> sinks(trials);
  std::vector<double> ms(trials, 0.0);
  parallel_for(trials, config.threads, [&](std::size_t t) {
    const auto start = Clock::now();
    TrialSink& sink = sinks[t];
    sink.trial = t;
    sink.seed = derive_seed(config.seed, t);
    Rng rng(sink.seed);
    const auto q = static_cast<unsigned>(qs[rng.uniform_below(qs.size())]);
    const std::size_t kt = kts[rng.uniform_below(kts.size())];
    const std::size_t n = ns[rng.uniform_below(ns.size())];
    const std::size_t L = Ls[rng.uniform_below(Ls.size())];
    sink.params = {std::to_string(q), std::to_string(kt), std::to_string(n), std::to_string(L)};
    try {
      require(L >= 2, "L must be >= 2");
      require_budget(checked_power(q, n, kCenterBudget + 1) <= kCenterBudget, "oracle limited to q^n <= 2^24");
      const LinearCode code(random_generator(field_of_order(q), kt, n, derive_seed(sink.seed, 1)));
      const SubsetMinimum sub = min_avg_distance_over_subsets(code, L);
      const double dist = sub.value.to_double();
      sink.add("min_avg_distance", dist, "exact");
      const ListDecodingBound bound = avg_johnson_bound(q, dist, L);
      sink.add("johnson_radius", bound.radius, to_string(bound.provenance));
      sink.add("list_bound", static_cast<double>(bound.list_size), to_string(bound.provenance));
      const auto oracle = list_size_at_radius(code, radius_cutoff(bound.radius));
      sink.add("oracle_list_max", static_cast<double>(oracle.max_count), "exhaustive");
      sink.add("verdict_johnson_sound", oracle.max_count <= bound.list_size ? 1.0 : 0.0, "checked");
    } catch (const std::invalid_argument& e) {
      sink.error(e);
    } catch (const BudgetError& e) {
      sink.error(e);
    }
    ms[t] = elapsed_ms(start);
  });
  ExperimentTable table = make_table("johnson_audit");
  append(table, sinks, config.timing, ms);
  return table;
}

ExperimentTable run_covering_curve(const ExperimentConfig& config) {
  const Params p(config.params, "covering_curve", {"q", "ktilde", "rows", "k", "s", "m", "trials"});
  const auto q = static_cast<unsigned>(p.integer("q", 2));
  const std::size_t kt = p.integer("ktilde", 8);
  const std::size_t rows = p.integer("rows", 64);
  const std::size_t k = p.integer("k", 8);
  const auto s = static_cast<unsigned>(p.integer("s", 2));
  const auto ms_u = p.integers("m", {8, 16, 32, 64, 128, 256, 512});
  const std::size_t trials = p.integer("trials", 200);
  require(rows >= 1, "rows must be >= 1");
  const FieldPtr field = field_of_order(q);
  const std::uint64_t N = checked_power(q, kt, kLinBudget + 1);
  require_budget(N <= kLinBudget, "covering curve limited to q^ktilde <= 2^13");

  const auto start = Clock::now();
  const std::uint64_t x_seed = derive_seed(config.seed, ~std::uint64_t{0});
  const std::uint64_t t_seed = derive_seed(config.seed, ~std::uint64_t{0} - 1);
  const SparseUnitVector x = random_sparse_unit(N, k, x_seed);
  const SampledRows T = sample_T(field, kt, rows, t_seed);
  const ComplexMatrix m = phi_lin_sub(field, kt, T.rows);
  const std::vector<std::size_t> m_values(ms_u.begin(), ms_u.end());
  const CoveringCurve curve = covering_error_curve(x, m, s, m_values, trials, config.seed, config.threads);
  const double wall = elapsed_ms(start);

  ExperimentTable table = make_table("covering_curve");
  auto base = [&](const std::string& mv) {
    return std::vector<std::string>{std::to_string(q), std::to_string(kt), std::to_string(rows),
                                    std::to_string(k), std::to_string(s), mv};
  };
  std::vector<TrialSink> sinks;
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const auto& pt = curve.points[i];
    TrialSink sink{i, derive_seed(config.seed, i), base(std::to_string(pt.m)), {}};
    sink.add("mean_error", pt.mean_error, "monte_carlo");
    sink.add("std_error", pt.std_error, "monte_carlo");
    sink.add("envelope", pt.envelope, "fitted_largest_m");
    sinks.push_back(std::move(sink));
  }
  const std::size_t last = curve.points.size();
  TrialSink fit{last, derive_seed(config.seed, last), base("all"), {}};
  fit.add("loglog_slope", curve.slope, "least_squares");
  fit.add("envelope_constant", curve.envelope_constant, "fitted_largest_m");
  sinks.push_back(std::move(fit));
  append(table, sinks, config.timing, std::vector<double>(sinks.size(), wall));
  return table;
}

ExperimentTable run_moment_audit(const ExperimentConfig& config) {
  const Params p(config.params, "moment_audit", {"grids", "m_max", "s_max", "K"});
  const std::size_t grids = p.integer("grids", 1000);
  const std::size_t m_max = p.integer("m_max", 10);
  const auto s_max = static_cast<unsigned>(p.integer("s_max", 3));
  const double K = p.real("K", 1.0);
  require(m_max >= 1 && s_max >= 1, "m_max and s_max must be >= 1");
  require(K > 0.0, "K must be positive");
  require_budget(m_max <= kChaosMaxDimension && s_max <= kChaosMaxMoment, "chaos moment limited to m <= 14, s <= 4");

  std::vector<TrialSink> sinks(grids);
  std::vector<double> ms(grids, 0.0);
  parallel_for(grids, config.threads, [&](std::size_t t) {
    const auto start = Clock::now();
    TrialSink& sink = sinks[t];
    sink.trial = t;
    sink.seed = derive_seed(config.seed, t);
    Rng rng(sink.seed);
    const std::size_t m = 1 + rng.uniform_below(m_max);
    const auto s = static_cast<unsigned>(1 + rng.uniform_below(s_max));
    std::vector<double> a(m * m);
    for (auto& v : a) v = rng.uniform(-K, K);
    sink.params = {fmt_double(K), std::to_string(m), std::to_string(s)};
    const ChaosMoment moment = chaos_moment_exact(a, m, s);
    sink.add("chaos_moment", moment.value, "exact_enumeration");
    sink.add("moment_bound", chaos_moment_bound(K, m, s).convert_to<double>(), "closed_form");
    sink.add("verdict_within_bound", chaos_moment_within_bound(moment, K, m, s) ? 1.0 : 0.0, "exact");
    ms[t] = elapsed_ms(start);
  });
  ExperimentTable table = make_table("moment_audit");
  append(table, sinks, config.timing, ms);
  return table;
}

ExperimentTable run_experiment(const ExperimentConfig& config) {
  if (config.experiment == "rip_scan") return run_rip_scan(config);
  if (config.experiment == "reduction_chain") return run_reduction_chain(config);
  if (config.experiment == "johnson_audit") return run_johnson_audit(config);
  if (config.experiment == "covering_curve") return run_covering_curve(config);
  if (config.experiment == "moment_audit") return run_moment_audit(config);
  throw InputError("unknown experiment '" + config.experiment + "'");
}

void write_csv(std::ostream& out, const ExperimentTable& table) {
  out << "experiment,trial,derived_seed";
  for (const auto& c : table.param_columns) out << ',' << c;
  out << ",quantity,value,method,wall_ms\n";
  for (const auto& r : table.records) {
    out << table.experiment << ',' << r.trial << ',' << r.derived_seed;
    for (const auto& v : r.params) out << ',' << v;
    out << ',' << r.quantity << ',' << fmt_value(r.value) << ',' << r.method << ',';
    if (r.wall_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", *r.wall_ms);
      out << buf;
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const ExperimentTable& table) {
  json records = json::array();
  for (const auto& r : table.records) {
    json params = json::object();
    for (std::size_t i = 0; i < table.param_columns.size(); ++i) params[table.param_columns[i]] = r.params[i];
    json rec = {{"trial", r.trial},
                {"derived_seed", r.derived_seed},
                {"params", params},
                {"quantity", r.quantity},
                {"value", fmt_value(r.value)},
                {"method", r.method}};
    rec["wall_ms"] = r.wall_ms ? json(*r.wall_ms) : json(nullptr);
    records.push_back(std::move(rec));
  }
  json doc = {{"experiment", table.experiment}, {"columns", table.param_columns}, {"records", records}};
  out << doc.dump(2) << '\n';
}

std::string summarize(const ExperimentTable& table) {
  std::set<std::uint64_t> trials;
  for (const auto& r : table.records) trials.insert(r.trial);
  return table.experiment + ": " + std::to_string(trials.size()) + " trials, " +
         std::to_string(table.records.size()) + " records, " + std::to_string(table.violation_count()) +
         " violations, " + std::to_string(table.error_count()) + " errors";
}

std::string csv_schema_help() {
  std::string s = "CSV columns: experiment,trial,derived_seed,<params>,quantity,value,method,wall_ms\n";
  for (const auto& name : experiment_names()) {
    s += "  " + name + " params:";
    for (const auto& c : experiment_columns(name)) s += " " + c;
    s += "\n";
  }
  s += "derived_seed = FNV-1a 64 over the little-endian bytes of (seed, trial).\n";
  s += "value uses %.11e; wall_ms is empty unless --timing is given.";
  return s;
}

}  // namespace listdec
