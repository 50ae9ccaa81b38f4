// tsv: command-line front end over a session file.
#include <iostream>

#include <CLI11.hpp>

#include "tsv/commands.hpp"
#include "tsv/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with complex tori and their symplectic pairs"};
  std::string command;
  std::vector<std::string> args;
  std::string session_path;
  bool as_json = false;
  std::optional<long> bound;

  std::string commands;
  for (const auto& name : tsv::command_names()) commands += (commands.empty() ? "" : ", ") + name;
  app.add_option("command", command, "one of: " + commands)->required();
  app.add_option("args", args, "command arguments");
  app.add_option("--session,-s", session_path, "session JSON file")->required();
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--bound", bound, "coefficient bound for searches")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return tsv::kExitUsage;
  }

  tsv::Session session;
  try {
    session = tsv::load_session(session_path);
  } catch (const std::exception& e) {
    std::cerr << session_path << ": " << e.what() << "\n";
    return tsv::kExitUsage;
  }

  tsv::Report report = tsv::run(session, command, args, {bound});
  std::string out = report.render(as_json);
  if (report.exit_code == tsv::kExitUsage && !as_json) {
    std::cerr << out;
  } else {
    std::cout << out;
  }
  return report.exit_code;
}
