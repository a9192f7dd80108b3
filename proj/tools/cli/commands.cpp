#include "commands.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hcflink/errors.hpp"

namespace hcflink::cli {
namespace {

using Json = nlohmann::ordered_json;

std::vector<double> default_levels(explore::Field field) {
    if (field == explore::Field::gsnr) {
        return {14.0, 15.0, 16.0, 17.0};
    }
    return {800.0, 900.0, 1000.0, 1100.0};
}

BudgetResult run_budget(const RunConfig& cfg, const TransceiverModel& trx) {
    const LinkPlan& plan = cfg.plan;
    BudgetResult r;
    r.op = {plan.fiber.loss_db_per_km, plan.amp.total_output_power_dbm};
    r.include_rbs = cfg.sweep.include_rbs;
    r.budget = link_gsnr(plan, r.op, r.include_rbs);
    r.n_channels = channels_in_band(plan.band_hz, plan.channel_spacing_hz);
    r.n_spans = plan.n_spans();
    r.n_repeaters = repeater_count(plan.total_length_km, plan.span_length_km);
    r.effective_span_km = plan.effective_span_km();
    r.gain_db = transparent_gain_db(plan, r.op.loss_db_per_km);
    r.launch_per_channel_dbm = units::watt_to_dbm(
        per_channel_launch(r.op.edfa_total_output_dbm, r.n_channels, plan.amp.post_output_loss_db));
    r.channel_rate_gbps = channel_net_rate(trx, r.budget.gsnr_db, plan.symbol_rate_hz);
    r.throughput_tbps = cable_throughput(plan, trx, r.op, r.include_rbs);
    return r;
}

ContourResult run_contour(const RunConfig& cfg, const TransceiverModel& trx) {
    ContourResult r;
    r.include_rbs = cfg.sweep.include_rbs;
    r.field = explore::field_from_string(cfg.sweep.contour_field);
    r.grid = explore::sweep_grid(cfg.plan, trx, cfg.sweep.grid, r.include_rbs,
                                 static_cast<unsigned>(cfg.sweep.threads));
    const auto levels = cfg.sweep.levels.empty() ? default_levels(r.field) : cfg.sweep.levels;
    for (double level : levels) {
        r.contours.push_back({level, explore::extract_contour(r.grid, r.field, level)});
    }
    return r;
}

SpanCurveResult run_span_curve(const RunConfig& cfg, const TransceiverModel& trx) {
    SpanCurveResult r;
    r.include_rbs = cfg.sweep.include_rbs;
    r.target_tbps = cfg.sweep.target_tbps;
    for (double loss : cfg.sweep.curve_losses_db_per_km) {
        r.curves.push_back({loss, explore::span_length_curve(cfg.plan, trx, loss, cfg.sweep.span_min_km,
                                                             cfg.sweep.span_max_km, cfg.sweep.span_points,
                                                             r.target_tbps, r.include_rbs, cfg.sweep.solver)});
    }
    return r;
}

RbsResult run_rbs(const RunConfig& cfg) {
    const LinkPlan& plan = cfg.plan;
    RbsResult r;
    r.total_length_km = plan.total_length_km;
    r.effective_span_km = plan.effective_span_km();
    r.backscatter_db_per_km = plan.fiber.backscatter_db_per_km;
    r.launch_per_channel_w = per_channel_launch(plan.amp.total_output_power_dbm,
                                                channels_in_band(plan.band_hz, plan.channel_spacing_hz),
                                                plan.amp.post_output_loss_db);
    for (double loss : cfg.sweep.curve_losses_db_per_km) {
        RbsRow row;
        row.loss_db_per_km = loss;
        row.span_loss_db = loss * r.effective_span_km;
        row.enhancement = impairments::rbs_enhancement(row.span_loss_db);
        row.rbs_power_w =
            impairments::rbs_power(r.launch_per_channel_w, r.backscatter_db_per_km, r.total_length_km, row.span_loss_db);
        row.gsnr_rbs_db =
            component_snr_db(impairments::rbs_inv_snr(r.backscatter_db_per_km, r.total_length_km, row.span_loss_db));
        r.rows.push_back(row);
    }
    return r;
}

PowerFeedResult run_powerfeed(const RunConfig& cfg) {
    PowerFeedResult r;
    r.total_length_km = cfg.plan.total_length_km;
    r.n_repeaters = repeater_count(cfg.plan.total_length_km, cfg.plan.span_length_km);
    r.supply_limit_w = cfg.powerfeed.supply_limit_w;
    r.report = power_feed(cfg.powerfeed, r.total_length_km, r.n_repeaters);
    return r;
}

LatencyResult run_latency(const RunConfig& cfg) {
    LatencyResult r;
    r.total_length_km = cfg.plan.total_length_km;
    r.rows.push_back({"dnanf", cfg.plan.fiber.group_index,
                      propagation_latency_ms(r.total_length_km, cfg.plan.fiber.group_index)});
    r.rows.push_back({"scf", cfg.scf_group_index, propagation_latency_ms(r.total_length_km, cfg.scf_group_index)});
    return r;
}

bool needs_transceiver(Command command) {
    return command == Command::budget || command == Command::contour || command == Command::span_curve;
}

}  // namespace

Command command_from_string(const std::string& name) {
    static const std::array<std::pair<const char*, Command>, 6> table{{
        {"budget", Command::budget},
        {"contour", Command::contour},
        {"span-curve", Command::span_curve},
        {"rbs", Command::rbs},
        {"powerfeed", Command::powerfeed},
        {"latency", Command::latency},
    }};
    for (const auto& [n, c] : table) {
        if (name == n) return c;
    }
    throw ConfigError({{ConfigIssue::Kind::syntax, 0, "", "unknown command '" + name + "'"}});
}

Format format_from_string(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "svg") return Format::svg;
    throw ConfigError({{ConfigIssue::Kind::syntax, 0, "--format", "unknown format '" + name + "' (csv|json|svg)"}});
}

RunConfig apply_flags(RunConfig config, const Flags& flags) {
    if (flags.include_rbs) config.sweep.include_rbs = *flags.include_rbs;
    if (flags.target_tbps) config.sweep.target_tbps = *flags.target_tbps;
    if (flags.levels) config.sweep.levels = *flags.levels;
    if (flags.field) config.sweep.contour_field = *flags.field;
    if (flags.trx_table) {
        config.transceiver.model = "tabulated";
        config.transceiver.table = *flags.trx_table;
    }
    validate(config);
    return config;
}

TransceiverModel resolve_transceiver(const RunConfig& config) {
    const auto& t = config.transceiver;
    if (t.model == "tabulated") {
        try {
            return load_transceiver_table(t.table);
        } catch (const DataError& e) {
            throw ConfigError({{ConfigIssue::Kind::invariant, 0, "transceiver.table", e.what()}});
        }
    }
    const double cap = t.max_rate_gbps > 0.0 ? t.max_rate_gbps : std::numeric_limits<double>::infinity();
    if (!t.calibrate) {
        return ShannonGapModel{t.gap_db, cap};
    }
    const OperatingPoint reference{t.calibration_loss_db_per_km, t.calibration_power_dbm};
    return ShannonGapModel{
        calibrate_trx_gap(config.plan, reference, t.calibration_target_tbps, t.calibration_include_rbs, cap), cap};
}

Report run_command(Command command, const RunConfig& config, const Flags& flags) {
    Report report;
    report.config = apply_flags(config, flags);
    const RunConfig& cfg = report.config;
    if (needs_transceiver(command)) {
        report.transceiver = resolve_transceiver(cfg);
        // The echoed gap must be the one used.
        if (const auto* gap = std::get_if<ShannonGapModel>(&*report.transceiver)) {
            report.config.transceiver.gap_db = gap->gap_db;
        }
    }

    switch (command) {
        case Command::budget: report.payload = run_budget(cfg, *report.transceiver); break;
        case Command::contour: report.payload = run_contour(cfg, *report.transceiver); break;
        case Command::span_curve: report.payload = run_span_curve(cfg, *report.transceiver); break;
        case Command::rbs: report.payload = run_rbs(cfg); break;
        case Command::powerfeed: report.payload = run_powerfeed(cfg); break;
        case Command::latency: report.payload = run_latency(cfg); break;
    }
    return report;
}

std::string render(const Report& report, Format format) {
    switch (format) {
        case Format::csv: return render_csv(report);
        case Format::json: return render_json(report);
        case Format::svg:
            if (!std::holds_alternative<ContourResult>(report.payload)) {
                throw ConfigError({{ConfigIssue::Kind::invariant, 0, "--format",
                                    "svg output is only available for the contour command"}});
            }
            return render_svg(report);
    }
    return {};
}

bool nothing_solved(const Report& report) {
    const auto* curves = std::get_if<SpanCurveResult>(&report.payload);
    if (curves == nullptr) {
        return false;
    }
    for (const auto& curve : curves->curves) {
        for (const auto& point : curve.points) {
            if (point.required_dbm) {
                return false;
            }
        }
    }
    return true;
}

void write_outputs(const Report& report, Format format, const std::string& destination) {
    const std::string text = render(report, format);
    if (destination.empty() || destination == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + destination + "' for writing", destination);
    }
    out << text;
    out.close();
    if (!out) {
        throw IoError("failed writing '" + destination + "'", destination);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'", path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::pair<int, nlohmann::ordered_json> describe_current_exception() {
    Json error;
    int code = kInternalError;
    try {
        throw;
    } catch (const ConfigError& e) {
        code = kConfigError;
        error = {{"kind", "config"}, {"message", e.what()}};
        Json issues = Json::array();
        for (const auto& issue : e.issues()) {
            issues.push_back({{"kind", to_string(issue.kind)}, {"line", issue.line}, {"key", issue.key},
                              {"message", issue.message}});
        }
        error["issues"] = issues;
    } catch (const InfeasibleError& e) {
        code = kInfeasible;
        error = {{"kind", "infeasible"}, {"message", e.what()}, {"low_value", e.low_value()},
                 {"high_value", e.high_value()}};
    } catch (const IoError& e) {
        code = kIoError;
        error = {{"kind", "io"}, {"message", e.what()}, {"path", e.path()}};
    } catch (const DomainError& e) {
        code = kConfigError;
        error = {{"kind", "domain"}, {"message", e.what()}};
    } catch (const DataError& e) {
        error = {{"kind", "data"}, {"message", e.what()}};
    } catch (const std::exception& e) {
        error = {{"kind", "internal"}, {"message", e.what()}};
    }
    error["exit_code"] = code;
    return {code, Json{{"error", error}}};
}

}  // namespace hcflink::cli
