#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace treebij::cli {

enum class Status { ok, mismatch, error };

// mismatch is reserved for checks that evaluated but disagreed; error covers
// bad flags, malformed inputs and cap violations.
struct CommandResult {
  Status status = Status::ok;
  nlohmann::ordered_json payload;
  long long elapsed_ms = 0;

  int exit_code() const { return status == Status::ok ? 0 : status == Status::mismatch ? 1 : 2; }
};

CommandResult run(const std::vector<std::string>& args);

// Parses argv, runs, prints the result envelope to stdout (or plain text for
// `--format text`), returns the exit code.
int run_main(int argc, const char* const* argv);

}  // namespace treebij::cli
