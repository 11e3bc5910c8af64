#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mstep::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitDiverged = 2;  // analyze
inline constexpr int kExitFailed = 2;    // verify: some instance disagreed

struct AnalyzeOptions {
  bool simulate_fallback = false;
};

struct Range {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

/// "a..b" or a single number.
Range parse_range(const std::string& text);

struct CampaignOptions {
  std::size_t count = 100;
  std::uint64_t seed = 1;
  Range eta{1, 4};
  Range sizes{2, 5};
  bool allow_trivial = false;
  std::size_t max_vertices = 0;
  bool shrink = true;
};

struct GenerateOptions {
  std::size_t eta = 2;
  Range sizes{2, 5};
  bool allow_trivial = false;
  std::size_t max_vertices = 0;
  std::uint64_t seed = 1;
};

int cmd_analyze(const std::string& text, const AnalyzeOptions& options,
                std::ostream& out, std::ostream& err);
int cmd_verify(const CampaignOptions& options, std::ostream& out,
               std::ostream& err);
/// what: "cs-graph", "limit" or "competition" (with m >= 1).
int cmd_export(const std::string& text, const std::string& what,
               std::size_t m, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateOptions& options, std::ostream& out,
                 std::ostream& err);

/// Full command line, args[0] being the program name. "-" as an input path
/// reads `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace mstep::cli
