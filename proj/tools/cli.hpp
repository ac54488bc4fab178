#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace homflytop::cli {

enum ExitCode : int { Pass = 0, InvariantFailure = 1, InputFailure = 2 };

struct RunConfig {
  std::string command;
  std::string input;
  std::optional<int> r0;  // face id
  std::optional<int> kappa;
  int cap = 14;
  std::string format = "text";  // json | text | dot (csv for parking)
  std::uint64_t seed = 1;
  bool all_roots = false;
  int count = 1;       // gen
  int max_edges = 10;  // gen
  bool coordinates = false;
};

const std::vector<std::string>& commands();

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs.
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homflytop::cli
