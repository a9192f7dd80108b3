#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "report.hpp"

namespace hcflink::cli {

enum class Command { budget, contour, span_curve, rbs, powerfeed, latency };
enum class Format { csv, json, svg };

Command command_from_string(const std::string& name);
Format format_from_string(const std::string& name);

/// Command-line overrides. Applied on top of the config so the echoed
/// configuration is the one actually used.
struct Flags {
    std::optional<bool> include_rbs;
    std::optional<double> target_tbps;
    std::optional<std::vector<double>> levels;
    std::optional<std::string> trx_table;
    std::optional<std::string> field;
};

enum ExitCode : int {
    kSuccess = 0,
    kInternalError = 1,
    kConfigError = 2,
    kInfeasible = 3,
    kIoError = 4,
};

RunConfig apply_flags(RunConfig config, const Flags& flags);

/// Calibrates the Shannon gap or loads the table named by the config.
TransceiverModel resolve_transceiver(const RunConfig& config);

Report run_command(Command command, const RunConfig& config, const Flags& flags = {});

/// Writes the rendered report; an empty destination or "-" means stdout.
void write_outputs(const Report& report, Format format, const std::string& destination);

std::string render(const Report& report, Format format);

/// True for span-curve reports in which no point could be solved.
bool nothing_solved(const Report& report);

/// Maps the active exception to an exit code and a machine-readable error
/// document. Call from inside a catch block.
std::pair<int, nlohmann::ordered_json> describe_current_exception();

std::string read_file(const std::string& path);

}  // namespace hcflink::cli
