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

#include "listdec/bounds.hpp"
#include "listdec/chaining.hpp"
#include "listdec/codes.hpp"
#include "listdec/error.hpp"
#include "listdec/gf.hpp"
#include "listdec/harness.hpp"
#include "listdec/oracle.hpp"
#include "listdec/parallel.hpp"
#include "listdec/random.hpp"
#include "listdec/rip.hpp"
#include "listdec/simplex.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace listdec;
using nlohmann::json;

namespace {

std::string g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct OutputFlags {
  std::string output;
  bool json = false;
  bool timing = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
  cmd->add_option("--output,-o", f.output, "Write the table to this path instead of stdout");
  cmd->add_flag("--json", f.json, "Emit JSON instead of CSV");
  cmd->add_flag("--timing", f.timing, "Fill the wall_ms column");
}

int emit(ExperimentConfig config, const OutputFlags& f) {
  config.threads = configured_threads();
  config.timing = f.timing;
  if (!f.output.empty()) config.output = f.output;
  const ExperimentTable table = run_experiment(config);
  std::ostringstream body;
  if (f.json) {
    write_json(body, table);
  } else {
    write_csv(body, table);
  }
  if (config.output.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(config.output, std::ios::binary);
    require(static_cast<bool>(out), "cannot open output '" + config.output + "'");
    out << body.str();
  }
  std::cerr << summarize(table) << '\n';
  return 0;
}

/// Inline experiment flags: only options given on the command line enter `params`.
class InlineParams {
 public:
  template <typename T>
  void add(CLI::App* cmd, const std::string& flag, const std::string& key, const std::string& help) {
    auto value = std::make_shared<T>();
    CLI::Option* opt = cmd->add_option(flag, *value, help);
    setters_.push_back([opt, value, key](json& j) {
      if (opt->count() > 0) j[key] = *value;
    });
  }
  void add_flag(CLI::App* cmd, const std::string& flag, const std::string& key, const std::string& help) {
    auto value = std::make_shared<bool>(false);
    CLI::Option* opt = cmd->add_flag(flag, *value, help);
    setters_.push_back([opt, value, key](json& j) {
      if (opt->count() > 0) j[key] = *value;
    });
  }
  json build() const {
    json j = json::object();
    for (const auto& s : setters_) s(j);
    return j;
  }

 private:
  std::vector<std::function<void(json&)>> setters_;
};

using U64 = std::uint64_t;
using U64s = std::vector<std::uint64_t>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"listdec: list decoding, simplex encodings and RIP of DFT-type matrices"};
  app.require_subcommand(1);
  app.footer("\n" + csv_schema_help() +
             "\nExit codes: 0 success, 1 input error, 2 budget exceeded.\n"
             "LISTDEC_THREADS caps the worker count (0 = hardware concurrency).");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Closed-form list-decoding radii");
  unsigned bq = 2;
  std::optional<double> b_johnson, b_avg, b_simplified, b_deletion;
  std::optional<std::vector<double>> b_rate;
  U64 bL = 3, bA = 1;
  bool b_rip = false, b_floor = false;
  bounds->add_option("--q", bq, "Alphabet size")->required();
  bounds->add_option("--johnson", b_johnson, "Print J_q(x)");
  bounds->add_option("--avg-johnson", b_avg, "Bound from average L-subset distance delta");
  bounds->add_option("--simplified", b_simplified, "Bound (1-1/q)(1-sqrt(eps+1/L))");
  bounds->add_option("--deletion", b_deletion, "Bound from eta with multiplicity --A");
  bounds->add_flag("--rip-to-ld", b_rip, "Radius implied by RIP-2 of order L, constant 1/2");
  bounds->add_flag("--rip-floor", b_floor, "Average distance implied by RIP-2 of order L");
  bounds->add_option("--rate", b_rate, "Rate shape for EPS GAMMA")->expected(2);
  bounds->add_option("--L", bL, "List parameter L");
  bounds->add_option("--A", bA, "Neighbour multiplicity A");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Maximum list size at a radius");
  std::string o_gen, o_rho, o_mode = "exhaustive";
  unsigned oq = 2;
  U64 okt = 3, on = 8, o_seed = 0, o_budget = 100000;
  std::optional<U64> o_ell;
  oracle->add_option("--generator", o_gen, "Generator matrix file (q ktilde n, then rows)");
  oracle->add_option("--q", oq, "Alphabet size of a random generator");
  oracle->add_option("--ktilde", okt, "Dimension of a random generator");
  oracle->add_option("--n", on, "Length of a random generator");
  oracle->add_option("--seed", o_seed, "Seed of a random generator and of sampled centers");
  oracle->add_option("--rho", o_rho, "Relative radius (a/b, integer or decimal); balls are strict")->required();
  oracle->add_option("--mode", o_mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  oracle->add_option("--budget", o_budget, "Centers examined in sampled mode");
  oracle->add_option("--ell", o_ell, "Also decide (rho, ell)-list decodability exhaustively");

  // rip
  auto* rip = app.add_subcommand("rip", "RIP-2 constants and row-count scans");
  rip->require_subcommand(1);
  struct RipFlags {
    std::string matrix;
    unsigned q = 2;
    U64 ktilde = 3, rows = 0, seed = 0, k = 2, trials = 8;
    std::optional<double> normalizer;
  };
  RipFlags rf;
  auto add_rip_flags = [&rf](CLI::App* c) {
    c->add_option("--matrix", rf.matrix, "Complex matrix file (rows cols, then re im pairs)");
    c->add_option("--q", rf.q, "Alphabet size for phi(Lin_T)");
    c->add_option("--ktilde", rf.ktilde, "Message length for phi(Lin_T)");
    c->add_option("--rows", rf.rows, "|T| sampled Lin rows; 0 takes every row once");
    c->add_option("--seed", rf.seed, "Seed for T and for sampled supports");
    c->add_option("--k", rf.k, "Sparsity order")->required();
    c->add_option("--normalizer", rf.normalizer, "Column scale; default sqrt(matrix rows)");
  };
  auto* rip_exact = rip->add_subcommand("exact", "Exhaustive over all k-supports");
  add_rip_flags(rip_exact);
  auto* rip_sampled = rip->add_subcommand("sampled", "Local search lower bound");
  add_rip_flags(rip_sampled);
  rip_sampled->add_option("--trials", rf.trials, "Random starts");

  auto* rip_scan = rip->add_subcommand("scan", "min_rows_for_rip over a (ktilde, k) grid");
  InlineParams scan_params;
  U64 scan_seed = 0;
  std::string scan_config;
  OutputFlags scan_out;
  scan_params.add<U64>(rip_scan, "--q", "q", "Alphabet size");
  scan_params.add<U64s>(rip_scan, "--ktilde", "ktilde", "Message lengths");
  scan_params.add<U64s>(rip_scan, "--k", "k", "Sparsity orders");
  scan_params.add<double>(rip_scan, "--delta", "delta_target", "Target RIP constant");
  scan_params.add<U64>(rip_scan, "--trials", "trials", "Draws of T per probe");
  scan_params.add<double>(rip_scan, "--gamma", "gamma", "Allowed failure rate");
  scan_params.add<std::string>(rip_scan, "--mode", "mode", "automatic, exact or sampled");
  scan_params.add<U64>(rip_scan, "--sampled-trials", "sampled_trials", "Random starts per sampled RIP estimate");
  rip_scan->add_option("--seed", scan_seed, "Master seed");
  rip_scan->add_option("--config", scan_config, "JSON config (overrides inline flags)");
  add_output_flags(rip_scan, scan_out);

  // chain
  auto* chain = app.add_subcommand("chain", "RIP => distance => list decoding, per random code");
  InlineParams chain_params;
  U64 chain_seed = 0;
  std::string chain_config;
  OutputFlags chain_out;
  chain_params.add<U64>(chain, "--q", "q", "Alphabet size");
  chain_params.add<U64>(chain, "--ktilde", "ktilde", "Message length");
  chain_params.add<U64>(chain, "--n", "n", "Block length");
  chain_params.add<U64>(chain, "--L", "L", "List parameter (3..6)");
  chain_params.add<U64>(chain, "--trials", "trials", "Number of random codes");
  chain_params.add_flag(chain, "--rank-deficient", "rank_deficient", "Zero the last generator row");
  chain->add_option("--seed", chain_seed, "Master seed");
  chain->add_option("--config", chain_config, "JSON config (overrides inline flags)");
  add_output_flags(chain, chain_out);

  // scan
  auto* scan = app.add_subcommand("scan", "Run any experiment from a JSON config");
  std::string config_path;
  OutputFlags cfg_out;
  scan->add_option("--config", config_path, "JSON config")->required();
  add_output_flags(scan, cfg_out);

  // moment
  auto* moment = app.add_subcommand("moment", "Exact Rademacher chaos moment");
  U64 mm = 2, m_seed = 0;
  unsigned ms = 2;
  double mK = 1.0;
  bool m_ones = false;
  moment->add_option("--m", mm, "Number of signs (<= 14)")->required();
  moment->add_option("--s", ms, "Moment order (<= 4)")->required();
  moment->add_flag("--all-ones", m_ones, "All coefficients 1 (otherwise uniform in [-K, K])");
  moment->add_option("--K", mK, "Coefficient bound");
  moment->add_option("--seed", m_seed, "Seed for random coefficients");

  // covering
  auto* covering = app.add_subcommand("covering", "Maurey sampling error in the X' seminorm");
  InlineParams cov_params;
  U64 cov_seed = 0;
  std::string cov_config;
  OutputFlags cov_out;
  cov_params.add<U64>(covering, "--q", "q", "Alphabet size");
  cov_params.add<U64>(covering, "--ktilde", "ktilde", "N = q^ktilde");
  cov_params.add<U64>(covering, "--rows", "rows", "|T|");
  cov_params.add<U64>(covering, "--k", "k", "Sparsity");
  cov_params.add<U64>(covering, "--s", "s", "X' exponent");
  cov_params.add<U64s>(covering, "--m", "m", "Sample counts");
  cov_params.add<U64>(covering, "--trials", "trials", "Draws per sample count");
  covering->add_option("--seed", cov_seed, "Master seed");
  covering->add_option("--config", cov_config, "JSON config (overrides inline flags)");
  add_output_flags(covering, cov_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 1;
  }

  auto inline_config = [](const std::string& experiment, const InlineParams& params, U64 seed,
                          const std::string& path) {
    if (!path.empty()) {
      ExperimentConfig c = load_config(path);
      require(c.experiment == experiment, "config is for experiment " + c.experiment);
      return c;
    }
    ExperimentConfig c;
    c.experiment = experiment;
    c.params = params.build();
    c.seed = seed;
    return c;
  };

  try {
    if (*bounds) {
      const int queries = (b_johnson ? 1 : 0) + (b_avg ? 1 : 0) + (b_simplified ? 1 : 0) + (b_deletion ? 1 : 0) +
                          (b_rip ? 1 : 0) + (b_floor ? 1 : 0) + (b_rate ? 1 : 0);
      require(queries == 1, "bounds needs exactly one query flag");
      auto show = [](const ListDecodingBound& b) {
        std::cout << g12(b.radius) << ' ' << b.list_size << ' ' << to_string(b.provenance) << '\n';
      };
      if (b_johnson) std::cout << g12(johnson_radius(bq, *b_johnson)) << '\n';
      if (b_avg) show(avg_johnson_bound(bq, *b_avg, bL));
      if (b_simplified) show(simplified_johnson(bq, *b_simplified, bL));
      if (b_deletion) show(deletion_bound(bq, *b_deletion, bA, bL));
      if (b_rip) show(rip_to_ld_radius(bq, bL));
      if (b_floor) std::cout << g12(rip_distance_floor(bq, bL)) << '\n';
      if (b_rate) std::cout << g12(main_rate_bound(bq, (*b_rate)[0], (*b_rate)[1])) << '\n';
      return 0;
    }
    if (*oracle) {
      auto gen = [&] {
        if (o_gen.empty()) return random_generator(field_of_order(oq), okt, on, o_seed);
        std::ifstream in(o_gen);
        require(static_cast<bool>(in), "cannot open generator '" + o_gen + "'");
        return parse_generator(in);
      }();
      const LinearCode code(std::move(gen));
      const Rational rho = Rational::parse(o_rho);
      OracleOptions opt;
      opt.mode = o_mode == "sampled" ? CenterMode::sampled : CenterMode::exhaustive;
      opt.budget = o_budget;
      opt.seed = o_seed;
      opt.threads = configured_threads();
      const auto r = list_size_at_radius(code, rho, opt);
      std::cout << "max_count " << r.max_count << "\ncenter";
      for (auto s : r.witness_center) std::cout << ' ' << static_cast<unsigned>(s);
      std::cout << "\nmode " << to_string(r.mode) << "\ncenters_examined " << r.centers_examined << '\n';
      if (o_ell) {
        const auto v = verify_list_decodable(code, rho, *o_ell, opt.threads);
        std::cout << "list_decodable " << (v.ok ? "yes" : "no") << '\n';
      }
      return 0;
    }
    if (*rip_exact || *rip_sampled) {
      std::optional<ComplexMatrix> dense;
      std::unique_ptr<GramSource> gram;
      if (!rf.matrix.empty()) {
        std::ifstream in(rf.matrix);
        require(static_cast<bool>(in), "cannot open matrix '" + rf.matrix + "'");
        dense = read_complex_matrix(in);
        const double norm = rf.normalizer.value_or(std::sqrt(static_cast<double>(dense->rows())));
        gram = std::make_unique<DenseGram>(*dense, norm);
      } else {
        const FieldPtr field = field_of_order(rf.q);
        const std::uint64_t N = checked_power(rf.q, rf.ktilde, kLinBudget + 1);
        require_budget(N <= kLinBudget, "Lin limited to q^ktilde <= 2^13");
        std::vector<std::uint32_t> T;
        if (rf.rows == 0) {
          for (std::uint32_t t = 0; t < N; ++t) T.push_back(t);
        } else {
          T = sample_T(field, rf.ktilde, rf.rows, rf.seed).rows;
        }
        require(!rf.normalizer, "--normalizer applies to --matrix input only");
        gram = std::make_unique<LinGram>(field, rf.ktilde, T);
      }
      const RipReport r = *rip_exact ? rip_constant_exact(*gram, rf.k)
                                     : rip_constant_sampled(*gram, rf.k, rf.trials, rf.seed);
      std::cout << "k " << r.k << "\ndelta " << g12(r.delta) << "\nmethod " << to_string(r.method)
                << "\nsupports_examined " << r.supports_examined << "\nwitness";
      for (auto c : r.witness_support) std::cout << ' ' << c;
      std::cout << '\n';
      return 0;
    }
    if (*rip_scan) return emit(inline_config("rip_scan", scan_params, scan_seed, scan_config), scan_out);
    if (*chain) return emit(inline_config("reduction_chain", chain_params, chain_seed, chain_config), chain_out);
    if (*covering) return emit(inline_config("covering_curve", cov_params, cov_seed, cov_config), cov_out);
    if (*scan) return emit(load_config(config_path), cfg_out);
    if (*moment) {
      require_budget(mm <= kChaosMaxDimension && ms <= kChaosMaxMoment, "chaos moment limited to m <= 14, s <= 4");
      std::vector<double> a(mm * mm, 1.0);
      if (!m_ones) {
        Rng rng(m_seed);
        for (auto& v : a) v = rng.uniform(-mK, mK);
      }
      const ChaosMoment c = chaos_moment_exact(a, mm, ms);
      std::cout << "moment " << c.exact.str() << "\nbound " << chaos_moment_bound(mK, mm, ms).str()
                << "\nwithin_bound " << (chaos_moment_within_bound(c, mK, mm, ms) ? "true" : "false") << '\n';
      return 0;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cerr << app.help();
  return 1;
}
