#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "voa/core/json_io.hpp"

namespace voa::cli {

/// One leaf of the subcommand tree and the library operations it reaches.
struct CommandInfo {
  std::string group;
  std::string name;
  std::string summary;
  std::vector<std::string> operations;
};

const std::vector<CommandInfo>& command_registry();

/// Renders a report as "json", "csv" (path,value rows) or "pretty".
std::string render(const Json& report, const std::string& format);

/// Parses argv (without the program name) and runs one subcommand.
/// Exit codes: 0 success, 1 domain error (error object on `out`), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace voa::cli
