#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigidkit/constructions.hpp"
#include "rigidkit/document.hpp"

namespace rigidkit {

enum class OutputFormat { Text, Json };

inline constexpr std::uint64_t kDefaultSeed = 20190309;
inline constexpr int kDefaultTrials = 32;

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandOutput {
  int exit_code = kExitOk;
  std::string text;  // the rendered report
  std::optional<FrameworkDocument> witness;
};

/// Full reproduction of the affine counterexample at dimension `dim`.
/// Exit code 0 iff every check passes, 2 if dim is outside [2, max_dim].
CommandOutput paper_verify(int dim, OutputFormat format, int max_dim = configured_max_dim());

/// G_d with the labelled configuration; base is set to the complete part.
/// With `contract` the coordinates of p or q are contracted first; r, s
/// and t are already contracted and reject the flag (InvalidArgument).
FrameworkDocument generate_document(int dim, PaperConfig label, bool contract);

enum class Check { EquivalenceVs, CongruenceVs, Infinitesimal, GenericGlobal, Enumerate, Decide };

const char* check_name(Check c);
/// Comma-separated names; throws InvalidArgument on an unknown name.
std::vector<Check> parse_checks(std::string_view list);

struct AnalyzeOptions {
  std::vector<Check> checks;
  std::optional<Framework> versus;
  std::optional<std::vector<VertexId>> base;  // falls back to the document's base
  int trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  OutputFormat format = OutputFormat::Text;
};

/// Runs each requested check; exit code 1 if any of them raised an error.
CommandOutput analyze(const FrameworkDocument& doc, const AnalyzeOptions& options);

}  // namespace rigidkit
