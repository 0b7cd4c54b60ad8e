#ifndef MIRROR_CLI_HPP
#define MIRROR_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace mirror {

enum class Command { Parse, Step, Trace, Classify, Complete, Check };

enum class OutputMode { Plain, Structured };

struct CliConfig {
  Command command = Command::Parse;
  std::string term_text;
  std::size_t fuel = 100;
  OutputMode output_mode = OutputMode::Plain;
  std::size_t check_max_size = 7;
  std::vector<std::string> check_labels = {"a", "b"};
};

/// Executes one command. Exit codes: 0 success, 1 failed check suite,
/// 2 parse error.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point: argv parsing, stdin fallback for the term
/// argument, then run(). Usage errors exit 2.
int main_with_args(int argc, const char* const* argv, std::istream& in,
                   std::ostream& out, std::ostream& err);

}  // namespace mirror

#endif  // MIRROR_CLI_HPP
