#pragma once

// The `vkt` commands as library calls returning JSON reports.

#include <exception>
#include <string>

#include "json.hpp"
#include "vkt/cli/jobspec.hpp"
#include "vkt/verify.hpp"

namespace vkt::cli {

inline constexpr const char* kToolName = "vkt";
inline constexpr const char* kVersion = "0.1.0";

struct RunOptions {
  bool numeric_shadow = false;  // floating-point character values in `classes`
  VerifyOptions verify;
};

struct Outcome {
  nlohmann::json report;
  int exit_code = 0;  // 0 ok, 1 a verification suite failed
};

/// Commands: info, basis, classes, fuse, table, verify, example.
/// Throws vkt::Error on bad input.
Outcome run_job(const JobSpec& spec, const RunOptions& opt = {});

/// {"tool", "version", "error": {"kind", "message", ["line", "column"]}}.
nlohmann::json error_report(const std::exception& e);

/// One `path<TAB>value` line per leaf.
std::string to_tsv(const nlohmann::json& j);

}  // namespace vkt::cli
