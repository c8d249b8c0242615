#pragma once

// Property suites run by `vkt verify`: each checks one identity of the
// Verlinde ring on a concrete twisting and reports counterexamples.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vkt/fusion.hpp"

namespace vkt {

enum class SuiteStatus { Pass, Fail, Skipped };

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::Pass;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;  // at most a handful
  std::string note;
};

struct VerifyOptions {
  std::int64_t height = 6;  // dominant weights searched for ideal elements
  int trials = 100;         // random (f, g) pairs and torus points
  std::uint64_t seed = 1;
};

/// Structure constants from characters at the Verlinde classes, solved over Q.
/// nullopt when the character table is not square and invertible or the
/// solution is not integral.
std::optional<std::vector<std::vector<std::vector<std::int64_t>>>> character_table_constants(
    const FusionRing& ring);

std::vector<SuiteResult> run_verification(const FusionRing& ring, const VerifyOptions& opt = {});

std::string to_string(SuiteStatus s);

}  // namespace vkt
