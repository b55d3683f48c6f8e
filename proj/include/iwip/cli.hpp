#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "iwip/inp.hpp"
#include "iwip/realize.hpp"

namespace iwip {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input_error = 2;
inline constexpr int certification_failed = 3;
inline constexpr int io_error = 4;
}  // namespace exit_code

enum class Verb { Realize, Certify, Experiment, Enumerate };
enum class OutputFormat { Json, Text };

struct Command {
  Verb verb = Verb::Realize;
  int rank = 0;
  std::vector<int> index_list;  // doubled, in the given order
  std::string input;
  std::string output;  // empty: standard output
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 1;
  int samples = 100;
  int length = 26;
  unsigned threads = 0;
  bool timing = false;
  InpOptions inp;
  LegalizingSearchOptions legalizing;
};

// Result of parsing: a command, or an exit code with the text to print
// (help, version or a usage error).
struct ParsedCommand {
  std::optional<Command> command;
  int exit_code = exit_code::ok;
  std::string message;
};

ParsedCommand parse_command(const std::vector<std::string>& args);

int execute_command(const Command& cmd, std::ostream& out, std::ostream& err);

// parse_command then execute_command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iwip
