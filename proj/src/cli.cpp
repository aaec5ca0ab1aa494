// Copyright 2026 The sumset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "sumset/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sumset/expr.hpp"
#include "sumset/families.hpp"
#include "sumset/oracle.hpp"
#include "sumset/report.hpp"
#include "sumset/verify.hpp"

namespace sumset {

namespace {

std::pair<Int, Int> parse_window(std::string_view text) {
  std::size_t sep = text.find("..");
  std::size_t width = 2;
  if (sep == std::string_view::npos) {
    sep = text.find(':');
    width = 1;
  }
  if (sep == std::string_view::npos) throw InvalidParameters("window must look like lo:hi");
  const Int lo = parse_int(text.substr(0, sep));
  const Int hi = parse_int(text.substr(sep + width));
  if (lo > hi) throw InvalidParameters("window needs lo <= hi");
  return {lo, hi};
}

std::string join(const std::vector<Int>& xs) {
  std::string out;
  for (const Int& x : xs) out += (out.empty() ? "" : ",") + x.str();
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameters("cannot read config file `" + path + "`");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct EvalArgs {
  std::string expression;
  std::string window;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const LinearSet s = evaluate(a.expression);
  out << to_string(s) << "\n";
  if (!a.window.empty()) {
    const auto [lo, hi] = parse_window(a.window);
    out << "window " << lo << ".." << hi << ": " << join(s.window(lo, hi)) << "\n";
  }
  return 0;
}

struct WindowArgs {
  std::string expression;
  std::string window;
  std::uint64_t hfold = 0;
};

int cmd_window(const WindowArgs& a, std::ostream& out) {
  const LinearSet s = evaluate(a.expression);
  const auto [lo, hi] = parse_window(a.window);
  out << oracle::to_string(oracle::sample(s, lo, hi)) << "\n";
  if (a.hfold == 0) return 0;

  const auto shape = oracle::sample(s, lo, hi).provenance;
  const Int reach = std::max(abs(lo), abs(hi)) + oracle::hfold_margin(*shape, a.hfold);
  const Int margin = std::max<Int>({Int(0), Int(reach + lo), Int(reach - hi)});
  const oracle::WindowSample brute = oracle::brute_hfold(oracle::sample(s, lo, hi, margin), a.hfold,
                                                         lo, hi);
  out << "brute " << a.hfold << "-fold: " << oracle::to_string(brute) << "\n";
  const oracle::CrossCheck cc = oracle::cross_validate(h_fold_sum(s, a.hfold), brute);
  if (!brute.valid) {
    out << "cross-check: margin insufficient\n";
    return 1;
  }
  if (cc.pass) {
    out << "cross-check: pass\n";
    return 0;
  }
  out << "cross-check: FAIL at " << *cc.first_discrepancy << "\n";
  return 1;
}

// Flag name -> config key.
const std::vector<std::pair<std::string, std::string>> kHsetFlags = {
    {"schema", "schema"},
    {"s", "s"},
    {"h0", "h0"},
    {"d", "d"},
    {"generators", "generators"},
    {"core", "core"},
    {"m0", "m0"},
    {"drift-residue", "drift_residue"},
    {"drift-modulus", "drift_modulus"},
    {"prefix", "prefix"},
    {"limit", "limit"},
    {"hmin", "hmin"},
    {"hmax", "hmax"},
    {"qmax", "qmax"},
    {"window", "window"},
    {"format", "format"},
};

struct HsetArgs {
  std::string config_path;
  std::map<std::string, std::string> flags;
  bool allow_window = false;
  bool force_window = false;
};

std::uint64_t positive(const ConfigMap& config, const char* key, std::uint64_t fallback) {
  const auto it = config.find(key);
  if (it == config.end()) return fallback;
  const Int v = parse_int(it->second);
  if (v < 1 || v > 100000) throw InvalidParameters(std::string(key) + " must be in [1, 100000]");
  return v.convert_to<std::uint64_t>();
}

int cmd_hset(const HsetArgs& a, std::ostream& out) {
  ConfigMap config;
  if (!a.config_path.empty()) config = parse_config(read_file(a.config_path));
  for (const auto& [key, value] : a.flags) config[key] = value;

  const FamilySchema schema = schema_from_config(config);
  AnalysisOptions options;
  options.qmax = positive(config, "qmax", options.qmax);
  if (const auto it = config.find("window"); it != config.end()) {
    std::tie(options.window_lo, options.window_hi) = parse_window(it->second);
  }
  const auto flag = config.find("allow_window");
  options.allow_window =
      a.allow_window || (flag != config.end() && (flag->second == "true" || flag->second == "1"));
  options.force_window = a.force_window;

  const std::uint64_t hmin = positive(config, "hmin", 1);
  const std::uint64_t hmax = positive(config, "hmax", std::max(hmin, default_hmax(schema)));
  const HSetReport report = analyze(schema, hmin, hmax, options);

  const auto format = config.count("format") ? config.at("format") : std::string("table");
  if (format == "json") {
    out << format_json(report);
  } else if (format == "table") {
    out << format_table(report);
  } else {
    throw InvalidParameters("format must be table or json");
  }
  return 0;
}

struct VerifyArgs {
  verify::Options options;
  std::vector<std::string> suites;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const std::vector<std::string>& names = a.suites.empty() ? verify::suite_names() : a.suites;
  bool all_pass = true;
  for (const std::string& name : names) {
    const verify::Result r = verify::run_suite(name, a.options);
    out << verify::format(r) << "\n";
    all_pass = all_pass && r.pass;
  }
  out << (all_pass ? "all suites passed" : "some suites FAILED") << " (seed " << a.options.seed
      << ", cases " << a.options.cases << ")\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic on eventually periodic integer sets", "sumset"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a set expression to canonical form");
  eval->add_option("expression", eval_args.expression, "Set expression")->required();
  eval->add_option("--window", eval_args.window, "Also list members in lo:hi");

  WindowArgs window_args;
  auto* window = app.add_subcommand("window", "List a set on a window, optionally brute-forcing hA");
  window->add_option("expression", window_args.expression, "Set expression")->required();
  window->add_option("--window", window_args.window, "Window lo:hi")->required();
  window->add_option("--hfold", window_args.hfold, "Cross-check hA against brute force");

  HsetArgs hset_args;
  auto* hset = app.add_subcommand("hset", "Decide which h satisfy hA = n_q hA_q");
  hset->add_option("--config", hset_args.config_path, "Key-value family configuration");
  std::map<std::string, std::string> raw;
  for (const auto& [flag, key] : kHsetFlags) {
    hset->add_option("--" + flag, raw[key], "Family or analysis parameter `" + key + "`");
  }
  hset->add_flag("--allow-window", hset_args.allow_window, "Permit non-certified window answers");
  hset->add_flag("--force-window", hset_args.force_window,
                 "Answer from the window oracle only (needs --allow-window)");

  VerifyArgs verify_args;
  auto* ver = app.add_subcommand("verify", "Run the property and reproduction suites");
  ver->add_option("--seed", verify_args.options.seed, "Random seed");
  ver->add_option("--cases", verify_args.options.cases, "Random cases per property");
  ver->add_option("--suite", verify_args.suites, "Run only these suites")
      ->check(CLI::IsMember(verify::suite_names()));
  ver->add_flag("--inject-fault", verify_args.options.inject_fault,
                "Corrupt one symbolic sum to exercise failure reporting");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_args, out);
    if (window->parsed()) return cmd_window(window_args, out);
    if (hset->parsed()) {
      for (const auto& [flag, key] : kHsetFlags) {
        if (hset->count("--" + flag)) hset_args.flags[key] = raw[key];
      }
      return cmd_hset(hset_args, out);
    }
    if (ver->parsed()) return cmd_verify(verify_args, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace sumset
