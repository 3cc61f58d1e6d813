#pragma once

// Command-line dispatch. Every run produces one JSON report:
//   {"schema_version": "1", "command": ..., "config": {...}, "paper_ref": ..., "result": ...}
// Exit codes: 0 ok, 1 usage or input error, 2 a checked property failed.

#include <string>
#include <vector>

#include "valsg/json_io.hpp"

namespace valsg {

inline constexpr const char* report_schema_version = "1";

struct CliOutcome {
  int exit_code = 0;
  json report;          // null for --help
  std::string summary;  // one human line for stderr (or help text)
  std::string json_out; // --json-out path, empty for stdout
};

// args exclude the program name
CliOutcome run_cli(const std::vector<std::string>& args);

// Writes the report and summary; returns the exit code.
int cli_main(int argc, char** argv);

struct CorpusReport {
  std::size_t total = 0, passed = 0;
  std::vector<std::string> failures;  // "name: path expected X got Y"
  std::vector<std::string> warnings;
  bool ok() const { return failures.empty(); }
  json to_json() const;
};

// Corpus: {"vectors": [{"name", "args": [...], "exit": 0, "checks": [{"path": "/result/...", "expect": ...}]}]}
CorpusReport corpus_run(const json& corpus);
CorpusReport corpus_run_file(const std::string& path);

}  // namespace valsg
