// One job per invocation: parse the input, dispatch on command and field,
// and render a deterministic report.  Timing never reaches the report; it
// would break byte-for-byte reproducibility.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace k2ws {

struct RunOptions {
  std::optional<int> bound;
  std::optional<int> nmax;
  std::optional<std::string> field;  // "QQ" or "GF(p)", overrides the file
  bool json = false;
  bool search_orderings = false;
};

struct Outcome {
  int exit_code = 0;  // 0 decided, 2 inconclusive at bound, 1 input error
  std::string text;   // full report, human or json
};

// Never throws: input problems come back as exit code 1 with a message.
Outcome run_job(const std::string& command, std::string_view input,
                const RunOptions& opts);

std::uint64_t fnv1a(std::string_view s);
std::string fnv1a_hex(std::string_view s);

}  // namespace k2ws
