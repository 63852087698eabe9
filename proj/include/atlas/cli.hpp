#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace atlas {

struct RunConfig {
  // cohomology, lagrangian1, etale1, lagrangian2, etale2rep, etale2,
  // center, transgress
  std::string command;
  std::string group_path;
  std::optional<std::string> cocycle_path;
  std::vector<std::string> metric_paths;
  std::optional<std::size_t> degree;
  std::optional<std::uint32_t> element;
  std::optional<std::string> output_path;  // standard output when absent
  int verbosity = 0;
  // cohomology only: runs a randomized coboundary self-check
  std::optional<std::uint64_t> seed;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitInputError = 2;

// Executes one command.  The report goes to `out` (or the output file),
// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace atlas
