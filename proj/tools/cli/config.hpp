#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hcflink/explore.hpp"
#include "hcflink/system.hpp"

namespace hcflink::cli {

struct TransceiverSettings {
    std::string model = "shannon_gap";
    /// Used only when `calibrate` is false.
    double gap_db = 0.0;
    bool calibrate = true;
    /// 0 means no cap.
    double max_rate_gbps = 0.0;
    std::string table;
    double calibration_target_tbps = 1000.0;
    double calibration_loss_db_per_km = 0.06;
    double calibration_power_dbm = 20.3;
    bool calibration_include_rbs = false;

    bool operator==(const TransceiverSettings&) const = default;
};

struct SweepSettings {
    explore::GridSpec grid;
    double target_tbps = 1000.0;
    bool include_rbs = false;
    std::vector<double> curve_losses_db_per_km{0.05, 0.06, 0.07};
    double span_min_km = 150.0;
    double span_max_km = 250.0;
    int span_points = 21;
    explore::SolverSettings solver;
    int threads = 0;
    std::string contour_field = "throughput";
    /// Empty picks per-field defaults.
    std::vector<double> levels;

    bool operator==(const SweepSettings&) const = default;
};

struct RunConfig {
    LinkPlan plan;
    double scf_group_index = 1.468;
    TransceiverSettings transceiver;
    PowerFeedSpec powerfeed;
    SweepSettings sweep;

    bool operator==(const RunConfig&) const = default;
};

struct ConfigIssue {
    enum class Kind { syntax, unknown_key, type, invariant };
    Kind kind;
    int line;  // 0 when not tied to a line
    std::string key;
    std::string message;
};

std::string to_string(ConfigIssue::Kind kind);

/// All problems found in a configuration document, in document order.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<ConfigIssue> issues);
    const std::vector<ConfigIssue>& issues() const noexcept { return issues_; }

private:
    std::vector<ConfigIssue> issues_;
};

/// Parses either the sectioned `key = value` form or the equivalent JSON
/// object (detected by a leading '{'). Missing keys keep their defaults.
RunConfig parse_config(std::string_view text);

/// Checks every field and cross-field invariant. Throws ConfigError.
void validate(const RunConfig& config);

nlohmann::ordered_json config_to_json(const RunConfig& config);
/// One "section.key = value" line per parameter, in schema order.
std::vector<std::string> config_to_lines(const RunConfig& config);

/// Every recognised "section.key" path, in schema order.
std::vector<std::string> config_keys();

/// Shortest representation that parses back to the same double.
std::string format_number(double value);

}  // namespace hcflink::cli
