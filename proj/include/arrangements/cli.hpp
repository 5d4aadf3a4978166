// Command dispatch for the `arr` tool.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace arr::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

/// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable rendering of a JSON report: the "result" field first, then
/// one line per remaining field.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace arr::cli
