#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace junior {

enum class Command { Info, Sectors, Hilb, Quiver, Deform, Sweep, Verify };
enum class Format { Default, Json, Dot, Tikz, Text };

struct RunConfig {
  Command command = Command::Info;
  std::vector<std::int64_t> action;  // r w1 w2 w3, empty when taken from a file
  Format format = Format::Default;
  bool hilb = false;
  std::optional<std::string> triangulation_file;
  bool ext = false;  // quiver: Ext-quiver instead of the singlet quiver
  std::int64_t rmax = 31;
  std::int64_t minimality_rmax = 13;
  std::optional<std::int64_t> bound;
  std::optional<std::size_t> term_cap;
  std::optional<std::size_t> triangulation_cap;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command. Errors are reported on `err`; the return value is the
/// process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace junior
