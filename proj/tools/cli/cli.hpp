#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace symtrace::cli {

enum class Scale { small, standard };

// Throws InvalidInput for anything other than "small" or "standard".
Scale parse_scale(const std::string& name);

struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::size_t cases_run = 0;
  std::size_t failures = 0;
  nlohmann::json details = nlohmann::json::array();
  double elapsed_ms = 0;
  std::string instance_hash;  // empty for the self-test
};

// With timing off the report is a pure function of the inputs.
nlohmann::json to_json(const RunReport& report, bool timing = true);

// 0 when nothing failed, 1 otherwise.
int exit_code(const RunReport& report);

// Deterministic invariant suites over all modules. Failures (including
// exceptions inside a case) are counted, never thrown.
RunReport run_selftest(std::uint64_t seed, Scale scale, unsigned parallel = 1);

// One of verify-trace, certify, check-zeros, nu, phi-check on a parsed input
// document. Malformed input throws InvalidInput; a failed identity shows up as
// failures > 0.
RunReport run_instance(const std::string& command, const nlohmann::json& input, unsigned parallel = 1);

}  // namespace symtrace::cli
