#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mixedbody/harness/config.hpp"
#include "mixedbody/report.hpp"

namespace mixedbody::harness {

struct RunOutput {
  RunConfig config;
  Report report;
  std::chrono::nanoseconds elapsed{0};

  // 0 when every check passes, 1 otherwise.
  int exit_code() const { return report.passed() ? 0 : 1; }
};

// Evaluates the cases on a worker pool and merges the reports in index
// order, prefixing case names with "<label>[i]:". The first exception in
// index order is rethrown after all workers finish.
Report run_cases(const std::string& label, std::vector<std::function<Report()>> cases, unsigned threads = 0);

// Dispatches config.command over file-supplied or generated instances.
// Throws ParseError / ValidityError / InternalError; the CLI maps them to
// exit codes 2 / 3 / 4.
RunOutput run(const RunConfig& config);

// Invariant suites shared by run() and the acceptance binary.
Report fuzz_ssz(const RunConfig& config);
Report fuzz_properties(const RunConfig& config);

// JSON keeps everything except wall time byte-stable; elapsed time lives
// under the separate "timing" key. CSV is one flat row per check.
std::string render(const RunOutput& out, OutputFormat format);
nlohmann::json report_to_json(const RunOutput& out);

}  // namespace mixedbody::harness
