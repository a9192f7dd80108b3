#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "hcflink/explore.hpp"

namespace hcflink::cli {

struct BudgetResult {
    OperatingPoint op;
    bool include_rbs = false;
    SnrBudget budget;
    int n_channels = 0;
    int n_spans = 0;
    int n_repeaters = 0;
    double effective_span_km = 0.0;
    double gain_db = 0.0;
    double launch_per_channel_dbm = 0.0;
    double channel_rate_gbps = 0.0;
    double throughput_tbps = 0.0;

    bool operator==(const BudgetResult&) const = default;
};

struct ContourLevel {
    double level = 0.0;
    std::vector<explore::Polyline> lines;

    bool operator==(const ContourLevel&) const = default;
};

struct ContourResult {
    bool include_rbs = false;
    explore::Field field = explore::Field::throughput;
    explore::SweepGrid grid;
    std::vector<ContourLevel> contours;

    bool operator==(const ContourResult&) const = default;
};

struct SpanCurve {
    double loss_db_per_km = 0.0;
    std::vector<explore::SpanCurvePoint> points;

    bool operator==(const SpanCurve&) const = default;
};

struct SpanCurveResult {
    bool include_rbs = false;
    double target_tbps = 0.0;
    std::vector<SpanCurve> curves;

    bool operator==(const SpanCurveResult&) const = default;
};

struct RbsRow {
    double loss_db_per_km = 0.0;
    double span_loss_db = 0.0;
    double enhancement = 0.0;
    double rbs_power_w = 0.0;
    double gsnr_rbs_db = 0.0;

    bool operator==(const RbsRow&) const = default;
};

struct RbsResult {
    double total_length_km = 0.0;
    double effective_span_km = 0.0;
    double backscatter_db_per_km = 0.0;
    double launch_per_channel_w = 0.0;
    std::vector<RbsRow> rows;

    bool operator==(const RbsResult&) const = default;
};

struct PowerFeedResult {
    double total_length_km = 0.0;
    int n_repeaters = 0;
    double supply_limit_w = 0.0;
    PowerFeedReport report;

    bool operator==(const PowerFeedResult&) const = default;
};

struct LatencyRow {
    std::string fiber;
    double group_index = 0.0;
    double latency_ms = 0.0;

    bool operator==(const LatencyRow&) const = default;
};

struct LatencyResult {
    double total_length_km = 0.0;
    std::vector<LatencyRow> rows;

    bool operator==(const LatencyResult&) const = default;
};

using Payload = std::variant<BudgetResult, ContourResult, SpanCurveResult, RbsResult, PowerFeedResult,
                             LatencyResult>;

/// Command output together with the fully resolved inputs that produced it.
struct Report {
    RunConfig config;
    /// Transceiver actually used (after calibration or table loading); empty
    /// for commands that do not map GSNR to rate.
    std::optional<TransceiverModel> transceiver;
    Payload payload;

    bool operator==(const Report&) const = default;
};

std::string command_name(const Payload& payload);

nlohmann::ordered_json to_json(const Report& report);
Report report_from_json(const nlohmann::ordered_json& doc);

std::string render_json(const Report& report);
std::string render_csv(const Report& report);
/// Contour reports only; throws std::invalid_argument otherwise.
std::string render_svg(const Report& report);

}  // namespace hcflink::cli
