#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "taumackey/jobs.hpp"

namespace {

using namespace taumackey;

struct CommonOptions {
  std::string group, tau, subgroup, sigma, format = "json", out;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> budget_pairs;
  bool timing = false;
};

void add_common(CLI::App* sub, CommonOptions& o, const std::string& command) {
  const bool needs_group = command != "clifford-battery";
  auto* g = sub->add_option("--group", o.group, "Group spec: inline JSON or @file");
  if (needs_group) g->required();
  if (command != "char-table" && command != "condition-star")
    sub->add_option("--tau", o.tau, "Involutive (anti-)automorphism: inverse, identity, clifford, JSON or @file");
  if (command == "gelfand") sub->add_option("--subgroup", o.subgroup, "Subgroup spec")->required();
  if (command == "condition-star") sub->add_option("--sigma", o.sigma, "Automorphism spec")->required();
  if (command == "power-sums") sub->add_option("--n", o.n, "Exponent n >= 1")->required()->check(CLI::PositiveNumber);
  if (command == "clifford-battery") sub->add_option("--n", o.n, "Largest Clifford rank (default 5)")->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "Seed for the character table solver (default TAUMACKEY_SEED)");
  sub->add_option("--budget-pairs", o.budget_pairs, "Upper bound on pair scans");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", o.out, "Write the report to this file");
  sub->add_flag("--timing", o.timing, "Include wall time in the report");
}

JobSpec make_job(const std::string& command, const CommonOptions& o) {
  JobSpec job;
  job.command = command;
  if (!o.group.empty()) job.group = parse_json_argument(o.group);
  if (!o.tau.empty()) job.tau = parse_json_argument(o.tau);
  if (!o.subgroup.empty()) job.subgroup = parse_json_argument(o.subgroup);
  if (!o.sigma.empty()) job.sigma = parse_json_argument(o.sigma);
  job.n = o.n;
  job.seed = o.seed.value_or(default_seed());
  if (o.budget_pairs) job.budget.max_pairs = *o.budget_pairs;
  job.timing = o.timing;
  return job;
}

int emit(const Json& report, const std::string& format, const std::string& out) {
  const std::string text = format == "text" ? render_text(report) : report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out);
  if (!file) {
    std::cerr << "error: cannot write " << out << "\n";
    return kExitUsage;
  }
  file << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Frobenius-Schur indicators, simple reducibility and Gelfand pair checks"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  const std::map<std::string, std::string> descriptions = {
      {"char-table", "Character table with quality residuals"},
      {"fs", "Classical and twisted indicators, zeta values and the self-conjugate census"},
      {"simply-reducible", "Three-route simple reducibility verdict plus the ambivalence and abelian checks"},
      {"gelfand", "Gelfand-pair criteria, spherical functions and twisted identities for G/K"},
      {"clifford-battery", "Simple reducibility of the Clifford groups CL(1..n)"},
      {"condition-star", "Condition (star) for an automorphism and its fixed subgroup"},
      {"power-sums", "Exact sums of centralizer orders and zeta powers"}};
  std::map<std::string, CommonOptions> options;
  for (const auto& command : known_commands()) {
    auto* sub = app.add_subcommand(command, descriptions.at(command));
    add_common(sub, options[command], command);
  }

  std::string manifest, cache_dir, batch_out, batch_format = "json";
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  auto* batch = app.add_subcommand("batch", "Run a manifest of jobs");
  batch->add_option("manifest", manifest, "Manifest JSON file")->required()->check(CLI::ExistingFile);
  batch->add_option("--cache-dir", cache_dir, "Content-addressed result cache");
  batch->add_option("--jobs", workers, "Worker threads")->check(CLI::PositiveNumber);
  batch->add_option("--out", batch_out, "Write the aggregate report to this file");
  batch->add_option("--format", batch_format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (batch->parsed()) {
      BatchOptions bo;
      if (!cache_dir.empty()) bo.cache_dir = cache_dir;
      bo.workers = workers;
      const BatchResult r = run_batch(parse_json_argument("@" + manifest), bo);
      std::cerr << "cache: " << r.cache_hits << " hits, " << r.cache_misses << " misses\n";
      const int io = emit(r.report, batch_format, batch_out);
      return io ? io : r.exit_code;
    }
    for (auto& [command, o] : options) {
      if (!app.got_subcommand(command)) continue;
      const JobResult r = run_job(make_job(command, o));
      if (r.report.contains("error")) std::cerr << "error: " << r.report["error"]["message"].get<std::string>() << "\n";
      const int io = emit(r.report, o.format, o.out);
      return io ? io : r.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
