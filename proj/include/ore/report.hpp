#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ore/spec_file.hpp"

namespace ore {

using Json = nlohmann::ordered_json;

struct RunOptions {
  std::optional<CapProfile> caps;  // replaces the file's caps when set
  std::uint64_t seed = 1;          // randomized axiom samples
};

struct TaskResult {
  TaskKind kind = TaskKind::mul;
  bool ok = true;
  std::string error;  // set when !ok
  Json result;        // task payload; null when !ok
  double seconds = 0;
};

/// Output of run(). `payload` is everything but timing; `hash` is its SHA-256.
struct Report {
  Json header;
  std::vector<TaskResult> tasks;
  Json payload;
  std::string hash;

  /// 0 when every task succeeded, 1 otherwise. Verdicts never count as errors.
  int exit_status() const;
};

/// Runs the tasks in file order. Module errors are captured per task.
Report run(const RingSpecFile& spec, const RunOptions& options = {});

enum class ReportFormat { text, structured };

/// Structured output is the payload plus its hash, schema tag "ore-report/1",
/// byte-identical across runs. Text adds per-task wall time.
std::string render_report(const Report& report, ReportFormat format);

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace ore
