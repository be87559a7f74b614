#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "taumackey/spec_io.hpp"

namespace taumackey {

inline constexpr const char* kToolName = "taumackey";
inline constexpr const char* kToolVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCrossCheck = 2;

/// Seed used when neither the job nor TAUMACKEY_SEED provides one.
std::uint64_t default_seed();

struct JobSpec {
  std::string command;
  Json group;
  Json tau;
  Json subgroup;
  Json sigma;
  std::optional<std::size_t> n;
  std::uint64_t seed = 0;
  Budget budget;
  bool timing = false;

  Json to_json() const;
  /// Missing seed falls back to default_seed(). Throws InvalidSpec.
  static JobSpec from_json(const Json& j);
};

const std::vector<std::string>& known_commands();

struct JobResult {
  Json report;
  int exit_code = kExitOk;
};

/// Never throws: errors become a report with status "error" (exit 1) or
/// "cross_check_failed" (exit 2).
JobResult run_job(const JobSpec& job);

/// SHA-256 over the canonical job JSON and the tool version.
std::string job_cache_key(const JobSpec& job);

struct BatchOptions {
  std::optional<std::filesystem::path> cache_dir;
  std::size_t workers = 1;
};

struct BatchResult {
  Json report;
  int exit_code = kExitOk;
  std::size_t cache_hits = 0;
  std::size_t cache_misses = 0;
};

/// Manifest: an array of job objects, or {"jobs": [...]}. Per-job failures
/// are isolated; the exit code is the largest job code.
BatchResult run_batch(const Json& manifest, const BatchOptions& options);

/// Indented key: value rendering of a report.
std::string render_text(const Json& report);

}  // namespace taumackey
