#include "taumackey/jobs.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "taumackey/criteria.hpp"
#include "taumackey/gelfand.hpp"

namespace taumackey {
namespace {

constexpr double kTolerance = 1e-6;

// Status accumulated while a payload is built.
struct Run {
  const JobSpec& job;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Json big(const BigInt& x) { return x.str(); }

double snap(double x) {
  if (std::abs(x) < 1e-12) return 0.0;
  return std::round(x * 1e10) / 1e10;
}

Json complex_json(Complex z) { return Json::array({snap(z.real()), snap(z.imag())}); }

Json labels(const GroupTable& g, const std::vector<ElementId>& ids) {
  Json out = Json::array();
  for (ElementId x : ids) out.push_back(g.label(x));
  return out;
}

Json group_summary(const GroupTable& g) {
  return {{"order", g.order()}, {"family", g.family_tag()}, {"generators", labels(g, g.generators())}};
}

Json map_summary(const GroupMap& m) {
  std::size_t fixed = 0;
  for (ElementId x = 0; x < m.group().order(); ++x) fixed += m(x) == x ? 1 : 0;
  return {{"kind", std::string(to_string(m.kind()))},
          {"involutory", m.involutory()},
          {"checked", m.exhaustive() ? "exhaustive" : "sampled"},
          {"fixed_points", fixed}};
}

Json class_list(const GroupTable& g, const ConjugacyData& cd) {
  Json out = Json::array();
  for (std::size_t c = 0; c < cd.class_count(); ++c) {
    const ElementId rep = cd.representatives[c];
    out.push_back({{"representative", g.label(rep)}, {"size", cd.class_size(c)},
                   {"centralizer", cd.centralizer_order[rep]}});
  }
  return out;
}

Json table_json(const CharacterTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (Complex v : row.values) r.push_back(complex_json(v));
    rows.push_back(std::move(r));
  }
  return {{"classes", class_list(*t.group, t.classes)},
          {"degrees", t.degrees},
          {"rows", rows},
          {"quality",
           {{"orthogonality_residual", t.quality.orthogonality_residual},
            {"orthogonality_gate", 1e-8 * static_cast<double>(t.size())},
            {"integrality_residual", t.quality.integrality_residual},
            {"integrality_gate", kIntegralityTolerance},
            {"attempts", t.quality.attempts}}}};
}

GroupPtr job_group(const JobSpec& job) {
  if (job.group.is_null()) throw Error(ErrorKind::InvalidSpec, "--group is required for " + job.command);
  return group_from_json(job.group, job.budget);
}

GroupMap job_tau(const JobSpec& job, const GroupPtr& g) {
  return tau_from_json(g, job.tau.is_null() ? Json("inverse") : job.tau);
}

Json definition_json(const DefinitionCheck& d, const std::vector<std::size_t>& partner) {
  Json out = {{"multiplicity_free", d.multiplicity_free}, {"self_conjugate", d.self_conjugate}};
  out["tensor_witness"] = d.tensor_witness
                              ? Json{{"rows", *d.tensor_witness}, {"multiplicity", d.witness_multiplicity}}
                              : Json(nullptr);
  out["row_witness"] = d.row_witness ? Json{{"row", *d.row_witness}, {"tau_conjugate", partner[*d.row_witness]}}
                                     : Json(nullptr);
  return out;
}

Json sr_json(Run& run, const CharacterTable& table, const GroupMap& tau, const TwistedCounts& zeta) {
  const SRVerdict v = simply_reducible(table, tau, zeta, run.job.budget);
  Json cosets;
  if (v.mackey_cosets.holds)
    cosets = {{"holds", *v.mackey_cosets.holds},
              {"orbit_count", v.mackey_cosets.orbit_count},
              {"invariant_orbit_count", v.mackey_cosets.invariant_orbit_count}};
  else
    cosets = {{"holds", v.mackey_cosets.skipped}};
  run.check(v.consistent, "simple-reducibility routes disagree");
  return {{"definition", definition_json(v.definition, tau_conjugate_rows(table, tau))},
          {"mackey_cosets", cosets},
          {"mackey_wigner",
           {{"holds", v.mackey_wigner.holds},
            {"sum_zeta_cubed", big(v.mackey_wigner.sum_zeta_cubed)},
            {"sum_v_squared", big(v.mackey_wigner.sum_v_squared)}}},
          {"consistent", v.consistent},
          {"partially_verified", v.partially_verified},
          {"simply_reducible", v.consistent ? Json(v.simply_reducible) : Json(nullptr)}};
}

// ------------------------------------------------------------ commands

Json cmd_char_table(Run& run) {
  const GroupPtr g = job_group(run.job);
  const CharacterTable t = compute_character_table(g, run.job.budget, run.job.seed);
  Json out = {{"group", group_summary(*g)}};
  out.update(table_json(t));
  return out;
}

Json cmd_fs(Run& run) {
  const GroupPtr g = job_group(run.job);
  const GroupMap tau = job_tau(run.job, g);
  const CharacterTable t = compute_character_table(g, run.job.budget, run.job.seed);
  const TwistedCounts zeta = zeta_tau(*g, tau);
  const auto twisted = twisted_fs_indicators(t, tau);
  const auto partner = tau_conjugate_rows(t, tau);
  Json rows = Json::array();
  for (std::size_t r = 0; r < t.size(); ++r) {
    const Indicator fs = fs_indicator(t, r);
    rows.push_back({{"row", r},
                    {"degree", t.degrees[r]},
                    {"fs_indicator", fs.value},
                    {"twisted_indicator", twisted[r].value},
                    {"residual", twisted[r].residual},
                    {"route_gap", twisted[r].route_gap},
                    {"tau_conjugate_row", partner[r]}});
  }
  Json zeta_json = Json::array();
  for (std::size_t c = 0; c < t.classes.class_count(); ++c) {
    const ElementId rep = t.classes.representatives[c];
    zeta_json.push_back({{"class", g->label(rep)}, {"zeta", std::to_string(zeta.zeta[rep])}});
  }
  const SelfConjugateCensus census = self_conjugate_census(t, tau, zeta);
  const double expansion = zeta_expansion_check(t, tau, zeta);
  run.check(expansion < kTolerance, "zeta expansion residual exceeds tolerance");
  return {{"group", group_summary(*g)},
          {"tau", map_summary(tau)},
          {"rows", rows},
          {"zeta", zeta_json},
          {"census",
           {{"self_conjugate_rows", census.count},
            {"tau_invariant_classes", census.invariant_classes},
            {"zeta_square_average", std::to_string(census.zeta_square_average)},
            {"agree", "exact"}}},
          {"zeta_expansion", {{"max_residual", expansion}, {"tolerance", kTolerance}}}};
}

Json cmd_simply_reducible(Run& run) {
  const GroupPtr g = job_group(run.job);
  const GroupMap tau = job_tau(run.job, g);
  const CharacterTable t = compute_character_table(g, run.job.budget, run.job.seed);
  const TwistedCounts zeta = zeta_tau(*g, tau);
  Json out = {{"group", group_summary(*g)}, {"tau", map_summary(tau)}};
  out.update(sr_json(run, t, tau, zeta));

  const AmbivalenceCheck amb = tau_ambivalence_check(t, tau, zeta);
  run.check(amb.all_equal, "tau-ambivalence conditions disagree");
  out["tau_ambivalence"] = {{"sum_equality", amb.sum_equality},
                            {"sum_zeta_squared", big(amb.sum_zeta_squared)},
                            {"sum_v", big(amb.sum_v)},
                            {"classes_invariant", amb.classes_invariant},
                            {"all_rows_tau_selfconj", amb.all_rows_tau_selfconj},
                            {"all_equal", amb.all_equal}};
  const AbelianCheck ab = abelian_characterization(*g, t.classes, tau, zeta);
  run.check(ab.agrees, "abelian characterization biconditional fails");
  out["abelian_characterization"] = {{"equality_at_3", ab.equality_at_3},
                                     {"sum_zeta_fourth", big(ab.sum_zeta_fourth)},
                                     {"sum_v_cubed", big(ab.sum_v_cubed)},
                                     {"is_abelian_and_tau_identity", ab.is_abelian_and_tau_identity},
                                     {"agrees", ab.agrees}};
  const EqualityChain chain = equality_chain(t.classes, zeta, 3);
  run.check(chain.downward_closed, "equality chain is not downward closed");
  out["equality_chain"] = {{"equal_at_n", chain.equal}, {"downward_closed", chain.downward_closed}};
  return out;
}

Json cmd_power_sums(Run& run) {
  const GroupPtr g = job_group(run.job);
  const GroupMap tau = job_tau(run.job, g);
  if (!run.job.n) throw Error(ErrorKind::InvalidSpec, "--n is required for power-sums");
  const ConjugacyData cd = conjugacy_classes(*g);
  const TwistedCounts zeta = zeta_tau(*g, tau);
  const PowerSumReport r = power_sum_report(*g, cd, zeta, tau, *run.job.n, run.job.budget);
  Json out = {{"group", group_summary(*g)},
              {"tau", map_summary(tau)},
              {"n", r.n},
              {"sum_v_n", big(r.sum_v_n)},
              {"sum_zeta_n1", big(r.sum_zeta_n1)},
              {"equal", r.equal}};
  if (r.verified_against_orbits) {
    out["verified_against_orbits"] = *r.verified_against_orbits;
    out["orbit_scan"] = {{"orbit_count", r.scan->orbit_count},
                         {"tau_invariant_orbit_count", r.scan->tau_invariant_orbit_count}};
  } else {
    out["verified_against_orbits"] =
        r.n > 2 ? "skipped: orbit scans cover n <= 2" : "skipped: G^n scan exceeds the pair budget";
  }
  return out;
}

Json cmd_gelfand(Run& run) {
  const GroupPtr g = job_group(run.job);
  const GroupMap tau = job_tau(run.job, g);
  if (run.job.subgroup.is_null()) throw Error(ErrorKind::InvalidSpec, "--subgroup is required for gelfand");
  const Subgroup k = subgroup_from_json(g, run.job.subgroup);
  const CharacterTable t = compute_character_table(g, run.job.budget, run.job.seed);
  const CosetSpace space = build_coset_space(k);
  const GelfandReport r = gelfand_criteria_report(space, t, tau, run.job.budget);
  for (const auto& f : r.failures) run.check(false, f);

  Json reps = labels(*g, r.orbits.coset_reps);
  Json out = {{"group", group_summary(*g)},
              {"tau", map_summary(tau)},
              {"subgroup", {{"order", k.order()}, {"generators", labels(*g, [&] {
                              std::vector<ElementId> v;
                              for (ElementId s : k.group->generators()) v.push_back(k.elements[s]);
                              return v;
                            }())}}},
              {"coset_space_size", space.size()},
              {"orbits",
               {{"orbit_count", r.orbits.orbit_count},
                {"m1", r.orbits.m1},
                {"m2", r.orbits.m2},
                {"hom_sym_dim", r.orbits.hom_sym_dim},
                {"hom_skew_dim", r.orbits.hom_skew_dim},
                {"double_coset_reps", reps},
                {"rep_invariant", r.orbits.rep_invariant}}},
              {"permutation_multiplicities", r.multiplicities},
              {"constituents", r.constituents},
              {"constituent_indicators", r.constituent_indicators},
              {"gelfand_pair", r.gelfand_pair},
              {"rank", r.rank},
              {"k_double_cosets", r.k_double_cosets},
              {"tau_k_invariant", r.tau_k_invariant},
              {"hypothesis", r.hypothesis},
              {"conditions", {{"a", r.cond_a}, {"b", r.cond_b}, {"c", r.cond_c}, {"d", r.cond_d}}},
              {"equivalence", r.hypothesis ? Json("asserted")
                                           : Json("skipped: HypothesisFailed, permutation character not tau-invariant")},
              {"weakly_symmetric", r.weakly_symmetric},
              {"weak_witness", r.weak_witness ? Json(g->label(*r.weak_witness)) : Json(nullptr)},
              {"garsia", {{"orbits_symmetric", r.garsia_orbits},
                          {"cosets_invariant", r.garsia_cosets},
                          {"constituents_real", r.garsia_characters}}},
              {"consistent", r.consistent}};

  if (!r.gelfand_pair) {
    out["spherical_functions"] = "skipped: NotGelfand";
    out["twisted_fs"] = "skipped: NotGelfand";
    return out;
  }
  const SphericalFunctions sph = spherical_functions(space, t);
  Json funcs = Json::array();
  for (std::size_t i = 0; i < sph.constituents.size(); ++i) {
    Json vals = Json::array();
    for (ElementId rep : sph.double_coset_reps) vals.push_back(complex_json(sph.values[i][rep]));
    funcs.push_back({{"row", sph.constituents[i]}, {"values", vals}});
  }
  const bool sph_ok = sph.normalization_residual < kTolerance && sph.bi_invariance_residual < kTolerance &&
                      sph.inversion_residual < kTolerance && sph.orthogonality_residual < kTolerance;
  run.check(sph_ok, "spherical function residuals exceed tolerance");
  out["spherical_functions"] = {{"double_coset_reps", labels(*g, sph.double_coset_reps)},
                                {"functions", funcs},
                                {"normalization_residual", sph.normalization_residual},
                                {"bi_invariance_residual", sph.bi_invariance_residual},
                                {"inversion_residual", sph.inversion_residual},
                                {"orthogonality_residual", sph.orthogonality_residual}};
  const TwistedGelfandReport tw = twisted_fs_gelfand(space, t, tau);
  run.check(tw.consistent, "twisted indicator identities for the pair fail");
  Json twj = {{"constituents", tw.constituents},
              {"indicators", tw.indicators},
              {"identity1_residuals", tw.identity1_residuals},
              {"identity2", {{"lhs", tw.identity2_lhs}, {"rhs", tw.identity2_rhs}, {"holds", tw.identity2_exact},
                             {"arithmetic", "exact"}}},
              {"fourier_residual", tw.fourier_residual},
              {"self_conjugate_constituents", tw.self_conjugate_constituents},
              {"consistent", tw.consistent}};
  if (tw.k_orbit_match) {
    twj["k_orbit_comparison"] = {{"tau_invariant_k_orbits", tw.tau_invariant_k_orbits},
                                 {"match", *tw.k_orbit_match},
                                 {"self_conjugate_indicators_one", tw.self_conjugate_indicators_one}};
  } else {
    twj["k_orbit_comparison"] = "skipped: KNotTauInvariant";
  }
  out["twisted_fs"] = twj;
  return out;
}

Json cmd_clifford_battery(Run& run) {
  const std::size_t max_n = run.job.n.value_or(5);
  Json battery = Json::array();
  for (std::size_t n = 1; n <= max_n; ++n) {
    const GroupPtr g = make_clifford(n, run.job.budget.max_order);
    const GroupMap tau = tau_clifford(g);
    const CharacterTable t = compute_character_table(g, run.job.budget, run.job.seed);
    const TwistedCounts zeta = zeta_tau(*g, tau);
    Json row = {{"n", n}, {"order", g->order()}, {"tau", map_summary(tau)}};
    row.update(sr_json(run, t, tau, zeta));
    const BigInt closed = BigInt(1) << (3 * n + 1);
    const BigInt computed = sum_zeta_powers(zeta, 3);
    row["closed_form"] = {{"formula", "2^(3n+1)"},
                          {"value", big(closed)},
                          {"matches_computed", closed == computed},
                          {"zeta_at_identity", std::to_string(zeta.zeta[kIdentity])}};
    battery.push_back(std::move(row));
  }
  Json out = {{"battery", battery}};
  if (!run.job.group.is_null()) {
    const GroupPtr base = job_group(run.job);
    const GroupMap tau = job_tau(run.job, base);
    const CliffordTheoryReport r = clifford_theory_check(tau, run.job.budget, run.job.seed);
    Json cases = Json::array();
    for (const auto& c : r.cases)
      cases.push_back({{"sigma", c.sigma}, {"case", c.which}, {"h_conjugate", c.h_conjugate},
                       {"constituents", c.constituents}});
    out["clifford_theory"] = {{"base", group_summary(*base)},
                              {"extension", group_summary(*r.extension)},
                              {"extension_abelian", r.extension->is_abelian()},
                              {"cases", cases},
                              {"orbits_on_base", r.n_orbits},
                              {"orbits_on_extension", r.g_orbits},
                              {"reciprocity_residual", r.max_residual}};
  }
  return out;
}

Json cmd_condition_star(Run& run) {
  const GroupPtr g = job_group(run.job);
  if (run.job.sigma.is_null()) throw Error(ErrorKind::InvalidSpec, "--sigma is required for condition-star");
  const GroupMap sigma = sigma_from_json(g, run.job.sigma);
  const ConditionStarReport r = condition_star(sigma, run.job.budget, run.job.seed);
  run.check(r.consistent, "condition (star) holds for an involution but the pair is not Gelfand");
  return {{"group", group_summary(*g)},
          {"sigma", map_summary(sigma)},
          {"fixed_subgroup_order", r.fixed_subgroup.size()},
          {"omega_size", r.omega_size},
          {"omega_classes_in_g", r.omega_classes_in_g},
          {"omega_classes_in_k", r.omega_classes_in_k},
          {"holds", r.holds},
          {"involutive", r.involutive},
          {"gelfand_pair", r.gelfand ? Json(*r.gelfand) : Json("skipped: sigma is not an involution")},
          {"rank", r.involutive ? Json(r.rank) : Json(nullptr)},
          {"consistent", r.consistent}};
}

using Command = Json (*)(Run&);

const std::vector<std::pair<std::string, Command>>& command_table() {
  static const std::vector<std::pair<std::string, Command>> table = {
      {"char-table", cmd_char_table},           {"fs", cmd_fs},
      {"simply-reducible", cmd_simply_reducible}, {"gelfand", cmd_gelfand},
      {"clifford-battery", cmd_clifford_battery}, {"condition-star", cmd_condition_star},
      {"power-sums", cmd_power_sums}};
  return table;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

}  // namespace

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TAUMACKEY_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env) return v;
  }
  return kDefaultTableSeed;
}

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : command_table()) v.push_back(name);
    return v;
  }();
  return names;
}

Json JobSpec::to_json() const {
  Json j = {{"command", command}, {"seed", std::to_string(seed)}};
  if (!group.is_null()) j["group"] = group;
  if (!tau.is_null()) j["tau"] = tau;
  if (!subgroup.is_null()) j["subgroup"] = subgroup;
  if (!sigma.is_null()) j["sigma"] = sigma;
  if (n) j["n"] = *n;
  j["budget"] = {{"max_order", budget.max_order}, {"max_pairs", budget.max_pairs},
                 {"max_classes", budget.max_classes}};
  if (timing) j["timing"] = true;
  return j;
}

JobSpec JobSpec::from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidSpec, "job: expected an object");
  JobSpec job;
  if (!j.contains("command") || !j.at("command").is_string())
    throw Error(ErrorKind::InvalidSpec, "job.command: missing or not a string");
  job.command = j.at("command").get<std::string>();
  auto opt = [&](const char* key) { return j.contains(key) ? j.at(key) : Json(nullptr); };
  job.group = opt("group");
  job.tau = opt("tau");
  job.subgroup = opt("subgroup");
  job.sigma = opt("sigma");
  if (j.contains("n")) {
    if (!j.at("n").is_number_unsigned()) throw Error(ErrorKind::InvalidSpec, "job.n: expected a positive integer");
    job.n = j.at("n").get<std::size_t>();
  }
  job.seed = default_seed();
  if (j.contains("seed")) {
    const Json& s = j.at("seed");
    if (s.is_number_unsigned())
      job.seed = s.get<std::uint64_t>();
    else if (s.is_string())
      job.seed = std::stoull(s.get<std::string>());
    else
      throw Error(ErrorKind::InvalidSpec, "job.seed: expected an unsigned integer");
  }
  if (j.contains("budget")) {
    const Json& b = j.at("budget");
    if (!b.is_object()) throw Error(ErrorKind::InvalidSpec, "job.budget: expected an object");
    if (b.contains("max_order")) job.budget.max_order = b.at("max_order").get<std::size_t>();
    if (b.contains("max_pairs")) job.budget.max_pairs = b.at("max_pairs").get<std::size_t>();
    if (b.contains("max_classes")) job.budget.max_classes = b.at("max_classes").get<std::size_t>();
  }
  job.timing = j.value("timing", false);
  return job;
}

JobResult run_job(const JobSpec& job) {
  JobResult result;
  Json& report = result.report;
  report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  report["input"] = job.to_json();
  const auto start = std::chrono::steady_clock::now();
  Run run{job, {}};
  try {
    const auto& table = command_table();
    const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == job.command; });
    if (it == table.end()) throw Error(ErrorKind::InvalidSpec, "unknown command \"" + job.command + "\"");
    report["payload"] = it->second(run);
    if (run.failures.empty()) {
      report["status"] = "ok";
    } else {
      report["status"] = "cross_check_failed";
      report["failures"] = run.failures;
      result.exit_code = kExitCrossCheck;
    }
  } catch (const Error& e) {
    const bool cross = is_cross_check_failure(e.kind());
    report["status"] = cross ? "cross_check_failed" : "error";
    report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    result.exit_code = cross ? kExitCrossCheck : kExitUsage;
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "InvalidSpec"}, {"message", e.what()}};
    result.exit_code = kExitUsage;
  }
  if (job.timing)
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string job_cache_key(const JobSpec& job) {
  return sha256_hex(job.to_json().dump() + "|" + kToolVersion);
}

BatchResult run_batch(const Json& manifest, const BatchOptions& options) {
  const Json* list = &manifest;
  if (manifest.is_object() && manifest.contains("jobs")) list = &manifest.at("jobs");
  if (!list->is_array()) throw Error(ErrorKind::InvalidSpec, "manifest: expected an array of jobs or {\"jobs\": [...]}");

  const std::size_t count = list->size();
  std::vector<Json> entries(count);
  std::vector<int> codes(count, kExitOk);
  std::vector<char> hit(count, 0);
  if (options.cache_dir) std::filesystem::create_directories(*options.cache_dir);

  auto work = [&](std::size_t i) {
    std::string key;
    JobResult r;
    try {
      const JobSpec job = JobSpec::from_json((*list)[i]);
      key = job_cache_key(job);
      std::optional<std::filesystem::path> file;
      if (options.cache_dir) file = *options.cache_dir / (key + ".json");
      if (file && std::filesystem::exists(*file)) {
        std::ifstream in(*file);
        const Json cached = Json::parse(in, nullptr, false);
        if (!cached.is_discarded() && cached.contains("report") && cached.contains("exit_code")) {
          entries[i] = {{"key", key}, {"exit_code", cached.at("exit_code")}, {"report", cached.at("report")}};
          codes[i] = cached.at("exit_code").get<int>();
          hit[i] = 1;
          return;
        }
      }
      r = run_job(job);
      if (file) {
        const std::filesystem::path tmp = file->string() + ".tmp" + std::to_string(i);
        std::ofstream(tmp) << Json{{"exit_code", r.exit_code}, {"report", r.report}}.dump();
        std::filesystem::rename(tmp, *file);
      }
    } catch (const std::exception& e) {
      r.report = {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                  {"input", (*list)[i]},
                  {"status", "error"},
                  {"error", {{"kind", "InvalidSpec"}, {"message", e.what()}}}};
      r.exit_code = kExitUsage;
    }
    entries[i] = {{"key", key}, {"exit_code", r.exit_code}, {"report", std::move(r.report)}};
    codes[i] = r.exit_code;
  };

  std::atomic<std::size_t> next{0};
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, count));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
  for (auto& t : pool) t.join();

  BatchResult out;
  std::size_t ok = 0, cross = 0, errors = 0;
  for (std::size_t i = 0; i < count; ++i) {
    out.exit_code = std::max(out.exit_code, codes[i]);
    (codes[i] == kExitOk ? ok : codes[i] == kExitCrossCheck ? cross : errors) += 1;
    (hit[i] ? out.cache_hits : out.cache_misses) += 1;
  }
  out.report = {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                {"jobs", entries.empty() ? Json::array() : Json(entries)},
                {"summary", {{"total", count}, {"ok", ok}, {"cross_check_failed", cross}, {"errors", errors}}},
                {"exit_code", out.exit_code}};
  return out;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  auto emit = [&](auto&& self, const Json& j, const std::string& indent, const std::string& key) -> void {
    const bool scalar_array = j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) {
                                return e.is_primitive() || (e.is_array() && e.size() == 2 && e[0].is_number());
                              });
    if (j.is_object()) {
      if (!key.empty()) os << indent << key << ":\n";
      const std::string inner = key.empty() ? indent : indent + "  ";
      for (const auto& [k, v] : j.items()) self(self, v, inner, k);
    } else if (j.is_array() && !scalar_array) {
      os << indent << key << ":\n";
      std::size_t i = 0;
      for (const auto& v : j) self(self, v, indent + "  ", "[" + std::to_string(i++) + "]");
    } else {
      os << indent << key << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
  };
  emit(emit, report, "", "");
  return os.str();
}

}  // namespace taumackey
