#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bimehler::cli {

/// Process exit codes of the `bimehler` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // verification mismatch or enumeration disagreement
  kExitUsage = 2,   // bad arguments or malformed input
  kExitLimit = 3,   // enumeration limit exceeded
  kExitInvalidProfile = 4,
};

enum class OutputFormat { kText, kJson };

struct OutputConfig {
  OutputFormat format = OutputFormat::kText;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> limit;
};

int cmd_hermite(unsigned m, unsigned n, const OutputConfig& config, std::ostream& out);

int cmd_enumerate(unsigned m, unsigned n, bool full, const OutputConfig& config,
                  std::ostream& out, std::ostream& err);

int cmd_verify(unsigned max_m, unsigned max_n, const OutputConfig& config,
               std::ostream& out);

/// Reads a profile from `profile_json` (already loaded from a file or stdin).
int cmd_decompose(const std::string& profile_json, const OutputConfig& config,
                  std::ostream& out, std::ostream& err);

/// Decomposes a random profile on m men and n women; requires config.seed.
int cmd_decompose_random(unsigned m, unsigned n, const OutputConfig& config,
                         std::ostream& out, std::ostream& err);

int cmd_case_series(const std::string& tag, unsigned max_m, unsigned max_n,
                    const OutputConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches to a command.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bimehler::cli
