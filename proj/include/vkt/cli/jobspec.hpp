#pragma once

// Job files: `key = value` lines, `#` comments, values continue across lines
// while brackets are open.
//
//   group = "SU(2) x U(1)"
//   twist = { levels = [5, 4], shift = "none", epsilon = [0, 1] }
//   command = "fuse"
//   args = ["2,0", "1,0"]

#include <string>
#include <string_view>
#include <vector>

#include "vkt/rootdata.hpp"
#include "vkt/twist.hpp"

namespace vkt::cli {

struct JobSpec {
  GroupSpec group;
  TwistSpec twist;
  std::string command;
  std::vector<std::string> args;
  std::string format = "json";

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// Throws ParseError with the line and column of the offending token.
JobSpec parse_jobspec(std::string_view text);
std::string emit_jobspec(const JobSpec& spec);

/// Only the twist line, `{ levels = [...], ... }`.
std::string emit_twist(const TwistSpec& t);

}  // namespace vkt::cli
