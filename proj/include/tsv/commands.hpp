#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsv/session.hpp"

namespace tsv {

enum ExitCode : int { kExitOk = 0, kExitFalse = 1, kExitViolation = 2, kExitUsage = 3 };

struct CommandOptions {
  std::optional<long> bound;
};

struct Report {
  int exit_code = kExitOk;
  std::vector<std::string> lines;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  /// Plain text, one line per entry, or the JSON document.
  std::string render(bool as_json) const;
};

const std::vector<std::string>& command_names();

/// Dispatches one subcommand against a loaded session. Never throws for
/// mathematical outcomes; they are folded into the exit code.
Report run(const Session& session, const std::string& command, const std::vector<std::string>& args,
           const CommandOptions& options = {});

}  // namespace tsv
