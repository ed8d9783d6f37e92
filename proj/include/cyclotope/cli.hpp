#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "cyclotope/oracle.hpp"
#include "cyclotope/statistics.hpp"

namespace cyclotope::cli {

enum class Subcommand { Decompose, Stats, Verify, Equinum, Cycle, Bench };
enum class Method { Dense, Fast, Intervals, All };
enum class Format { Csv, Json, Text };
enum class CycleView { Vertices, Matrix, Inverse, Omega, Gram };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct CommandConfig {
  Subcommand subcommand = Subcommand::Verify;
  int t = 0;
  std::string tope;
  std::string subset;
  Method method = Method::Fast;
  Format format = Format::Csv;
  std::string output;  ///< empty: standard output
  bool enumerate = false;
  bool oracle = false;
  CycleView view = CycleView::Vertices;
  int enumeration_cap = kDefaultEnumerationCap;
  int oracle_max = 7;
  int reps = 9;
  std::uint64_t seed = 1;
};

/// Throws Error(InvalidArgument) on an invariant violation.
void validate(const CommandConfig& config);

/// Either a parsed config, or the exit status to return (help, usage error).
using ParseOutcome = std::variant<CommandConfig, int>;
ParseOutcome parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs a validated config; output goes to `out` unless config.output names a file.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// parse + validate + run, mapping library errors to kExitUsage.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs every invariant suite that is affordable at dimension t and writes one
/// line per check. Returns true iff all checks pass.
bool verify_all(int t, int oracle_max, int enumeration_cap, std::ostream& out);

}  // namespace cyclotope::cli
