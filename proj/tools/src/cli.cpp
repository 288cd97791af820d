// Copyright 2026 The nilcone Authors.
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

#include "nilcone_tools/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilcone/chains.hpp"
#include "nilcone/jordan_json.hpp"
#include "nilcone/kac.hpp"
#include "nilcone/polytope.hpp"
#include "nilcone/semistability.hpp"
#include "nilcone_tools/cache.hpp"
#include "nilcone_tools/report.hpp"
#include "nilcone_tools/verify.hpp"

namespace nilcone::tools {

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

std::vector<std::int64_t> parse_rvec(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw Error(ErrorCode::ParseError, "--rvec expects comma-separated integers");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "--rvec is empty");
  return out;
}

void usage_error(const std::string& message) { throw Error(ErrorCode::ParseError, message); }

struct CensusArgs {
  int g = 0;
  std::int64_t r = 0;
  std::int64_t d = 0;
  bool points = false;
  bool no_cache = false;
  std::string format = "json";
};

int cmd_census(const CensusArgs& a, std::ostream& out, std::ostream& err) {
  GenusContext(a.g).require_higher_genus();
  if (a.r < 1) throw Error(ErrorCode::ZeroRank, "--r must be positive");
  if (a.points && a.format == "csv") usage_error("--points requires --format json");
  const CacheKey key{a.g, a.r, a.d, a.points ? "census-points" : "census", kCacheSchemaVersion};
  std::optional<Json> payload;
  std::optional<ResultCache> cache;
  if (!a.no_cache) {
    cache.emplace(ResultCache::default_path());
    payload = cache->lookup(key);
  }
  if (!payload) {
    payload = census_payload(a.g, a.r, a.d, a.points);
    if (cache && !cache->append(key, *payload)) err << "warning: cannot write cache " << cache->path() << "\n";
  }
  if (a.format == "csv") {
    out << census_csv(*payload);
  } else {
    out << payload->dump() << "\n";
  }
  return kExitOk;
}

int cmd_check_type(const std::string& input, std::ostream& out) {
  const JordanType jt = jordan_type_from_json(read_input(input));
  const auto regions = is_semistable_regions(jt);
  const auto inequalities = is_semistable_inequalities(jt);
  if (regions.semistable != inequalities.semistable) {
    throw Error(ErrorCode::InvariantViolation, "semistability tests disagree");
  }
  out << verdict_json(regions).dump() << "\n";
  return kExitOk;
}

int cmd_kappa(const std::string& input, std::ostream& out) {
  const JordanType jt = jordan_type_from_json(read_input(input));
  out << kappa_json(kappa(jt)).dump() << "\n";
  return kExitOk;
}

struct PolytopeArgs {
  int g = 0;
  std::string rvec;
  std::int64_t d = 0;
  std::string mode = "count";
  std::string format = "json";
};

int cmd_polytope(const PolytopeArgs& a, std::ostream& out) {
  const GenusContext ctx(a.g);
  const auto ranks = parse_rvec(a.rvec);
  const InequalitySystem sys = build_system(ctx, ranks, a.d);
  if (a.format == "csv" && a.mode != "count") usage_error("--format csv is only available for count");
  Json j;
  j["g"] = a.g;
  j["r"] = ranks;
  j["d"] = a.d;
  if (a.mode == "bounds") {
    out << bounds_json(sys, variable_bounds(sys)).dump() << "\n";
    return kExitOk;
  }
  const auto points = enumerate_lattice_points(sys);
  if (a.mode == "points") {
    j["points"] = points;
    out << j.dump() << "\n";
  } else if (a.format == "csv") {
    out << "partition,count\n\"" << join(ranks) << "\"," << points.size() << "\n";
  } else {
    j["count"] = points.size();
    out << j.dump() << "\n";
  }
  return kExitOk;
}

struct KacArgs {
  int g = 0;
  int r = 0;
  bool at_one = false;
  std::optional<int> oracle;
};

int cmd_kac(const KacArgs& a, std::ostream& out) {
  const KacPolynomial poly = kac_polynomial(a.g, a.r);
  if (a.oracle) {
    const Integer brute = count_abs_indec(a.g, a.r, *a.oracle);
    const Integer hua = poly.evaluate(*a.oracle);
    Json j;
    j["g"] = a.g;
    j["r"] = a.r;
    j["q"] = *a.oracle;
    j["oracle"] = integer_json(brute);
    j["hua"] = integer_json(hua);
    j["match"] = brute == hua;
    out << j.dump() << "\n";
    return brute == hua ? kExitOk : kExitInternal;
  }
  if (a.at_one) {
    Json j;
    j["g"] = a.g;
    j["r"] = a.r;
    j["at_one"] = integer_json(poly.at_one());
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << kac_json(poly).dump() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, bool inject_fault, std::ostream& out) {
  VerifyOptions options;
  options.inject_fault = inject_fault;
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  Json summary;
  summary["pass"] = true;
  summary["suites"] = Json::array();
  for (const auto& name : names) {
    const SuiteResult result = run_suite(name, options);
    Json line;
    line["suite"] = result.suite;
    line["pass"] = result.pass;
    if (!result.pass) line["first_failure"] = result.first_failure;
    line["details"] = result.details;
    out << line.dump() << "\n";
    summary["suites"].push_back(name);
    if (!result.pass && summary["pass"].get<bool>()) {
      summary["pass"] = false;
      summary["first_failure"] = result.first_failure;
    }
  }
  out << summary.dump() << "\n";
  return summary["pass"].get<bool>() ? kExitOk : kExitInternal;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Components of the global nilpotent cone of Higgs sheaves"};
  app.name("nilcone");
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv"};

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "Semistable components of rank r and degree d");
  census->add_option("--g", census_args.g, "Genus (>= 2)")->required();
  census->add_option("--r", census_args.r, "Rank")->required();
  census->add_option("--d", census_args.d, "Degree")->required();
  census->add_flag("--points", census_args.points, "List the semistable Jordan types");
  census->add_flag("--no-cache", census_args.no_cache, "Neither read nor write the result cache");
  census->add_option("--format", census_args.format, "Output format")->check(CLI::IsMember(formats));

  std::string check_input;
  auto* check = app.add_subcommand("check-type", "Decide semistability of a Jordan type");
  check->add_option("--input", check_input, "Jordan-type JSON file, - for stdin")->required();

  std::string kappa_input;
  auto* kappa_cmd = app.add_subcommand("kappa", "Semistable chain type of a semistable Jordan type");
  kappa_cmd->add_option("--input", kappa_input, "Jordan-type JSON file, - for stdin")->required();

  PolytopeArgs poly_args;
  auto* poly = app.add_subcommand("polytope", "Inequality system and lattice points of one partition");
  poly->add_option("--g", poly_args.g, "Genus (>= 2)")->required();
  poly->add_option("--rvec", poly_args.rvec, "Multiplicities r_1,...,r_s")->required();
  poly->add_option("--d", poly_args.d, "Total degree")->required();
  poly->add_option("mode", poly_args.mode, "bounds, count or points")
      ->check(CLI::IsMember({"bounds", "count", "points"}));
  poly->add_option("--format", poly_args.format, "Output format")->check(CLI::IsMember(formats));

  KacArgs kac_args;
  auto* kac = app.add_subcommand("kac", "Kac polynomial of the g-loop quiver");
  kac->add_option("--g", kac_args.g, "Number of loops")->required();
  kac->add_option("--r", kac_args.r, "Dimension")->required();
  kac->add_flag("--at-one", kac_args.at_one, "Print A(1) only");
  kac->add_option("--oracle", kac_args.oracle, "Compare with a brute-force count over F_q");

  std::string suite = "all";
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  std::vector<std::string> suites = suite_names();
  suites.emplace_back("all");
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suites));
  verify->add_flag("--inject-fault", inject_fault, "Corrupt one library result per suite (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (census->parsed()) return cmd_census(census_args, out, err);
    if (check->parsed()) return cmd_check_type(check_input, out);
    if (kappa_cmd->parsed()) return cmd_kappa(kappa_input, out);
    if (poly->parsed()) return cmd_polytope(poly_args, out);
    if (kac->parsed()) return cmd_kac(kac_args, out);
    if (verify->parsed()) return cmd_verify(suite, inject_fault, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.internal() ? kExitInternal : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace nilcone::tools
