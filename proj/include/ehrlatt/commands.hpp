#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ehrlatt/enumeration.hpp"

namespace ehrlatt::cli {

enum ExitCode : int { Ok = 0, Disagreement = 1, InputError = 2 };

enum class OutputFormat { Text, Structured };

/// Result of one command. Values are exact: integers as "n", rationals as
/// "p/q" in lowest terms, booleans as "true"/"false".
struct Report {
    std::string command;
    std::string input_digest;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<std::string> diagnostics;

    void add(std::string key, std::string value);
    const std::string* find(const std::string& key) const;
};

struct CommandOptions {
    unsigned k = 1;
    std::string method = "det";
    bool verbose = false;
    CountOptions counting;
};

struct CommandResult {
    Report report;
    int exit_code = Ok;
};

/// 64-bit FNV-1a over the file bytes, as "fnv1a64:<16 hex digits>".
std::string content_digest(const std::string& bytes);

CommandResult cmd_count(const std::string& file_contents, const CommandOptions& opts);
CommandResult cmd_surface(const std::string& file_contents, const CommandOptions& opts);
CommandResult cmd_ehrhart(const std::string& file_contents, const CommandOptions& opts);
CommandResult cmd_reflexive(const std::string& file_contents, const CommandOptions& opts);
CommandResult cmd_compare(const std::string& file_contents, const CommandOptions& opts);

/// Dispatches by name; input errors become a report with exit code 2.
CommandResult run_command(const std::string& command, const std::string& file_contents,
                          const CommandOptions& opts);

std::string render(const Report& report, OutputFormat format);

}  // namespace ehrlatt::cli
