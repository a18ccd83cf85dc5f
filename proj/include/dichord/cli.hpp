#ifndef DICHORD_CLI_HPP
#define DICHORD_CLI_HPP

#include <iosfwd>

namespace dichord {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  /// The property fails, or the input is outside the class a command needs.
  kExitProperty = 1,
  /// Bad flags, unreadable or malformed input, unsupported ranges.
  kExitUsage = 2,
  /// An internal consistency check failed. Always a bug.
  kExitInternal = 3,
};

/// Entry point of the `dichord` tool. `in` stands for `--input -`.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace dichord

#endif  // DICHORD_CLI_HPP
