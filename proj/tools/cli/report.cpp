#include "report.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace hcflink::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string num(double value) { return format_number(value); }

Json nullable(double value) { return std::isfinite(value) ? Json(value) : Json(nullptr); }

double from_nullable(const Json& j) {
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

// ---- transceiver ----------------------------------------------------------

Json transceiver_json(const TransceiverModel& model) {
    if (const auto* gap = std::get_if<ShannonGapModel>(&model)) {
        return Json{{"variant", "shannon_gap"}, {"gap_db", gap->gap_db}, {"max_rate_gbps", nullable(gap->max_rate_gbps)}};
    }
    Json points = Json::array();
    for (const auto& p : std::get<TabulatedModel>(model).points) {
        points.push_back(Json::array({p.gsnr_db, p.net_rate_gbps}));
    }
    return Json{{"variant", "tabulated"}, {"points", points}};
}

TransceiverModel transceiver_from_json(const Json& j) {
    if (j.at("variant") == "shannon_gap") {
        return ShannonGapModel{j.at("gap_db").get<double>(), from_nullable(j.at("max_rate_gbps"))};
    }
    TabulatedModel table;
    for (const auto& p : j.at("points")) {
        table.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
    return table;
}

std::string transceiver_summary(const std::optional<TransceiverModel>& maybe) {
    if (!maybe) {
        return "unused";
    }
    const TransceiverModel& model = *maybe;
    if (const auto* gap = std::get_if<ShannonGapModel>(&model)) {
        return fmt::format("shannon_gap gap_db={} max_rate_gbps={}", num(gap->gap_db), num(gap->max_rate_gbps));
    }
    return fmt::format("tabulated points={}", std::get<TabulatedModel>(model).points.size());
}

// ---- payloads -------------------------------------------------------------

Json snr_db_or_null(double inv) { return inv > 0.0 ? Json(10.0 * std::log10(1.0 / inv)) : Json(nullptr); }

Json payload_json(const BudgetResult& r) {
    return Json{
        {"loss_db_per_km", r.op.loss_db_per_km},
        {"edfa_total_output_dbm", r.op.edfa_total_output_dbm},
        {"include_rbs", r.include_rbs},
        {"inv_snr_ase", r.budget.inv_snr_ase},
        {"inv_snr_nli", r.budget.inv_snr_nli},
        {"inv_snr_imi", r.budget.inv_snr_imi},
        {"inv_snr_rbs", r.budget.inv_snr_rbs},
        {"snr_ase_db", snr_db_or_null(r.budget.inv_snr_ase)},
        {"snr_nli_db", snr_db_or_null(r.budget.inv_snr_nli)},
        {"snr_imi_db", snr_db_or_null(r.budget.inv_snr_imi)},
        {"snr_rbs_db", snr_db_or_null(r.budget.inv_snr_rbs)},
        {"gsnr_linear", r.budget.gsnr_linear},
        {"gsnr_db", r.budget.gsnr_db},
        {"n_channels", r.n_channels},
        {"n_spans", r.n_spans},
        {"n_repeaters", r.n_repeaters},
        {"effective_span_km", r.effective_span_km},
        {"gain_db", r.gain_db},
        {"launch_per_channel_dbm", r.launch_per_channel_dbm},
        {"channel_rate_gbps", r.channel_rate_gbps},
        {"throughput_tbps", r.throughput_tbps},
    };
}

BudgetResult budget_from_json(const Json& j) {
    BudgetResult r;
    r.op = {j.at("loss_db_per_km").get<double>(), j.at("edfa_total_output_dbm").get<double>()};
    r.include_rbs = j.at("include_rbs").get<bool>();
    r.budget.inv_snr_ase = j.at("inv_snr_ase").get<double>();
    r.budget.inv_snr_nli = j.at("inv_snr_nli").get<double>();
    r.budget.inv_snr_imi = j.at("inv_snr_imi").get<double>();
    r.budget.inv_snr_rbs = j.at("inv_snr_rbs").get<double>();
    r.budget.gsnr_linear = j.at("gsnr_linear").get<double>();
    r.budget.gsnr_db = j.at("gsnr_db").get<double>();
    r.n_channels = j.at("n_channels").get<int>();
    r.n_spans = j.at("n_spans").get<int>();
    r.n_repeaters = j.at("n_repeaters").get<int>();
    r.effective_span_km = j.at("effective_span_km").get<double>();
    r.gain_db = j.at("gain_db").get<double>();
    r.launch_per_channel_dbm = j.at("launch_per_channel_dbm").get<double>();
    r.channel_rate_gbps = j.at("channel_rate_gbps").get<double>();
    r.throughput_tbps = j.at("throughput_tbps").get<double>();
    return r;
}

Json polyline_json(const explore::Polyline& line) {
    Json points = Json::array();
    for (const auto& p : line) points.push_back(Json::array({p.loss_db_per_km, p.power_dbm}));
    return points;
}

Json payload_json(const ContourResult& r) {
    Json contours = Json::array();
    for (const auto& c : r.contours) {
        Json lines = Json::array();
        for (const auto& line : c.lines) lines.push_back(polyline_json(line));
        contours.push_back(Json{{"level", c.level}, {"polylines", lines}});
    }
    return Json{
        {"include_rbs", r.include_rbs},
        {"field", explore::to_string(r.field)},
        {"losses_db_per_km", r.grid.losses},
        {"powers_dbm", r.grid.powers},
        {"gsnr_db", r.grid.gsnr_db},
        {"throughput_tbps", r.grid.throughput_tbps},
        {"contours", contours},
    };
}

ContourResult contour_from_json(const Json& j) {
    ContourResult r;
    r.include_rbs = j.at("include_rbs").get<bool>();
    r.field = explore::field_from_string(j.at("field").get<std::string>());
    r.grid.losses = j.at("losses_db_per_km").get<std::vector<double>>();
    r.grid.powers = j.at("powers_dbm").get<std::vector<double>>();
    r.grid.gsnr_db = j.at("gsnr_db").get<std::vector<double>>();
    r.grid.throughput_tbps = j.at("throughput_tbps").get<std::vector<double>>();
    for (const auto& c : j.at("contours")) {
        ContourLevel level{c.at("level").get<double>(), {}};
        for (const auto& line : c.at("polylines")) {
            explore::Polyline poly;
            for (const auto& p : line) poly.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
            level.lines.push_back(std::move(poly));
        }
        r.contours.push_back(std::move(level));
    }
    return r;
}

Json payload_json(const SpanCurveResult& r) {
    Json curves = Json::array();
    for (const auto& curve : r.curves) {
        Json points = Json::array();
        for (const auto& p : curve.points) {
            points.push_back(Json{
                {"requested_span_km", p.requested_span_km},
                {"effective_span_km", p.effective_span_km},
                {"n_spans", p.n_spans},
                {"required_edfa_power_dbm", p.required_dbm ? Json(*p.required_dbm) : Json(nullptr)},
                {"diagnostic", p.diagnostic},
            });
        }
        curves.push_back(Json{{"loss_db_per_km", curve.loss_db_per_km}, {"points", points}});
    }
    return Json{{"include_rbs", r.include_rbs}, {"target_tbps", r.target_tbps}, {"curves", curves}};
}

SpanCurveResult span_curve_from_json(const Json& j) {
    SpanCurveResult r;
    r.include_rbs = j.at("include_rbs").get<bool>();
    r.target_tbps = j.at("target_tbps").get<double>();
    for (const auto& c : j.at("curves")) {
        SpanCurve curve{c.at("loss_db_per_km").get<double>(), {}};
        for (const auto& p : c.at("points")) {
            explore::SpanCurvePoint point;
            point.requested_span_km = p.at("requested_span_km").get<double>();
            point.effective_span_km = p.at("effective_span_km").get<double>();
            point.n_spans = p.at("n_spans").get<int>();
            if (!p.at("required_edfa_power_dbm").is_null()) {
                point.required_dbm = p.at("required_edfa_power_dbm").get<double>();
            }
            point.diagnostic = p.at("diagnostic").get<std::string>();
            curve.points.push_back(std::move(point));
        }
        r.curves.push_back(std::move(curve));
    }
    return r;
}

Json payload_json(const RbsResult& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back(Json{
            {"loss_db_per_km", row.loss_db_per_km},
            {"span_loss_db", row.span_loss_db},
            {"enhancement", row.enhancement},
            {"rbs_power_w", row.rbs_power_w},
            {"gsnr_rbs_db", row.gsnr_rbs_db},
        });
    }
    return Json{
        {"total_length_km", r.total_length_km},
        {"effective_span_km", r.effective_span_km},
        {"backscatter_db_per_km", r.backscatter_db_per_km},
        {"launch_per_channel_w", r.launch_per_channel_w},
        {"rows", rows},
    };
}

RbsResult rbs_from_json(const Json& j) {
    RbsResult r;
    r.total_length_km = j.at("total_length_km").get<double>();
    r.effective_span_km = j.at("effective_span_km").get<double>();
    r.backscatter_db_per_km = j.at("backscatter_db_per_km").get<double>();
    r.launch_per_channel_w = j.at("launch_per_channel_w").get<double>();
    for (const auto& row : j.at("rows")) {
        r.rows.push_back({row.at("loss_db_per_km").get<double>(), row.at("span_loss_db").get<double>(),
                          row.at("enhancement").get<double>(), row.at("rbs_power_w").get<double>(),
                          row.at("gsnr_rbs_db").get<double>()});
    }
    return r;
}

Json payload_json(const PowerFeedResult& r) {
    return Json{
        {"total_length_km", r.total_length_km},
        {"n_repeaters", r.n_repeaters},
        {"cable_w", r.report.cable_w},
        {"repeaters_w", r.report.repeaters_w},
        {"total_w", r.report.total_w},
        {"supply_limit_w", r.supply_limit_w},
        {"within_limit", r.report.within_limit},
    };
}

PowerFeedResult powerfeed_from_json(const Json& j) {
    PowerFeedResult r;
    r.total_length_km = j.at("total_length_km").get<double>();
    r.n_repeaters = j.at("n_repeaters").get<int>();
    r.report.cable_w = j.at("cable_w").get<double>();
    r.report.repeaters_w = j.at("repeaters_w").get<double>();
    r.report.total_w = j.at("total_w").get<double>();
    r.supply_limit_w = j.at("supply_limit_w").get<double>();
    r.report.within_limit = j.at("within_limit").get<bool>();
    return r;
}

Json payload_json(const LatencyResult& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back(Json{{"fiber", row.fiber}, {"group_index", row.group_index}, {"latency_ms", row.latency_ms}});
    }
    return Json{{"total_length_km", r.total_length_km}, {"rows", rows}};
}

LatencyResult latency_from_json(const Json& j) {
    LatencyResult r;
    r.total_length_km = j.at("total_length_km").get<double>();
    for (const auto& row : j.at("rows")) {
        r.rows.push_back({row.at("fiber").get<std::string>(), row.at("group_index").get<double>(),
                          row.at("latency_ms").get<double>()});
    }
    return r;
}

// ---- CSV ------------------------------------------------------------------

std::string csv_body(const BudgetResult& r) {
    std::string out =
        "loss_db_per_km,edfa_power_dbm,include_rbs,inv_snr_ase,inv_snr_nli,inv_snr_imi,inv_snr_rbs,"
        "gsnr_linear,gsnr_db,n_channels,n_spans,n_repeaters,effective_span_km,gain_db,"
        "launch_per_channel_dbm,channel_rate_gbps,throughput_tbps\n";
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", num(r.op.loss_db_per_km),
                       num(r.op.edfa_total_output_dbm), r.include_rbs, num(r.budget.inv_snr_ase),
                       num(r.budget.inv_snr_nli), num(r.budget.inv_snr_imi), num(r.budget.inv_snr_rbs),
                       num(r.budget.gsnr_linear), num(r.budget.gsnr_db), r.n_channels, r.n_spans,
                       r.n_repeaters, num(r.effective_span_km), num(r.gain_db),
                       num(r.launch_per_channel_dbm), num(r.channel_rate_gbps), num(r.throughput_tbps));
    return out;
}

std::string csv_body(const ContourResult& r) {
    std::string out = "loss_db_per_km,edfa_power_dbm,gsnr_db,throughput_tbps\n";
    for (std::size_t i = 0; i < r.grid.losses.size(); ++i) {
        for (std::size_t j = 0; j < r.grid.powers.size(); ++j) {
            const auto k = r.grid.index(i, j);
            out += fmt::format("{},{},{},{}\n", num(r.grid.losses[i]), num(r.grid.powers[j]),
                               num(r.grid.gsnr_db[k]), num(r.grid.throughput_tbps[k]));
        }
    }
    return out;
}

std::string csv_body(const SpanCurveResult& r) {
    std::string out = "loss_db_per_km,requested_span_km,effective_span_km,n_spans,required_edfa_power_dbm,feasible\n";
    for (const auto& curve : r.curves) {
        for (const auto& p : curve.points) {
            out += fmt::format("{},{},{},{},{},{}\n", num(curve.loss_db_per_km), num(p.requested_span_km),
                               num(p.effective_span_km), p.n_spans, p.required_dbm ? num(*p.required_dbm) : "",
                               p.required_dbm.has_value());
        }
    }
    return out;
}

std::string csv_body(const RbsResult& r) {
    std::string out = "loss_db_per_km,span_loss_db,enhancement,rbs_power_w,gsnr_rbs_db\n";
    for (const auto& row : r.rows) {
        out += fmt::format("{},{},{},{},{}\n", num(row.loss_db_per_km), num(row.span_loss_db), num(row.enhancement),
                           num(row.rbs_power_w), num(row.gsnr_rbs_db));
    }
    return out;
}

std::string csv_body(const PowerFeedResult& r) {
    return fmt::format("total_length_km,n_repeaters,cable_w,repeaters_w,total_w,supply_limit_w,within_limit\n"
                       "{},{},{},{},{},{},{}\n",
                       num(r.total_length_km), r.n_repeaters, num(r.report.cable_w), num(r.report.repeaters_w),
                       num(r.report.total_w), num(r.supply_limit_w), r.report.within_limit);
}

std::string csv_body(const LatencyResult& r) {
    std::string out = "fiber,group_index,total_length_km,latency_ms\n";
    for (const auto& row : r.rows) {
        out += fmt::format("{},{},{},{}\n", row.fiber, num(row.group_index), num(r.total_length_km),
                           num(row.latency_ms));
    }
    return out;
}

// ---- SVG ------------------------------------------------------------------

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};

}  // namespace

std::string command_name(const Payload& payload) {
    static constexpr const char* names[] = {"budget", "contour", "span-curve", "rbs", "powerfeed", "latency"};
    return names[payload.index()];
}

nlohmann::ordered_json to_json(const Report& report) {
    Json doc;
    doc["command"] = command_name(report.payload);
    doc["config"] = config_to_json(report.config);
    doc["transceiver"] = report.transceiver ? transceiver_json(*report.transceiver) : Json(nullptr);
    doc["result"] = std::visit([](const auto& p) { return payload_json(p); }, report.payload);
    return doc;
}

Report report_from_json(const nlohmann::ordered_json& doc) {
    Report report;
    report.config = parse_config(doc.at("config").dump());
    if (!doc.at("transceiver").is_null()) {
        report.transceiver = transceiver_from_json(doc.at("transceiver"));
    }
    const std::string command = doc.at("command").get<std::string>();
    const Json& result = doc.at("result");
    if (command == "budget") report.payload = budget_from_json(result);
    else if (command == "contour") report.payload = contour_from_json(result);
    else if (command == "span-curve") report.payload = span_curve_from_json(result);
    else if (command == "rbs") report.payload = rbs_from_json(result);
    else if (command == "powerfeed") report.payload = powerfeed_from_json(result);
    else if (command == "latency") report.payload = latency_from_json(result);
    else throw std::invalid_argument("unknown command '" + command + "' in report");
    return report;
}

std::string render_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string render_csv(const Report& report) {
    std::string out = "# hcflink " + command_name(report.payload) + "\n";
    for (const auto& line : config_to_lines(report.config)) {
        out += "# " + line + "\n";
    }
    out += "# transceiver.resolved = " + transceiver_summary(report.transceiver) + "\n";
    out += std::visit([](const auto& p) { return csv_body(p); }, report.payload);
    return out;
}

std::string render_svg(const Report& report) {
    const auto* contour = std::get_if<ContourResult>(&report.payload);
    if (contour == nullptr) {
        throw std::invalid_argument("svg output is only available for the contour command");
    }
    const auto& grid = contour->grid;
    if (grid.losses.empty() || grid.powers.empty()) {
        throw std::invalid_argument("svg output needs a non-empty grid");
    }

    constexpr double width = 800.0, height = 600.0;
    constexpr double left = 80.0, right = 160.0, top = 50.0, bottom = 70.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const double x0 = grid.losses.front(), x1 = grid.losses.back();
    const double y0 = grid.powers.front(), y1 = grid.powers.back();
    const auto sx = [&](double x) { return left + (x1 > x0 ? (x - x0) / (x1 - x0) : 0.5) * plot_w; };
    const auto sy = [&](double y) { return top + plot_h - (y1 > y0 ? (y - y0) / (y1 - y0) : 0.5) * plot_h; };

    std::string out;
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
                       width, height, width, height);
    out += "<metadata>\n";
    for (const auto& line : config_to_lines(report.config)) out += xml_escape(line) + "\n";
    out += xml_escape("transceiver.resolved = " + transceiver_summary(report.transceiver)) + "\n";
    out += "</metadata>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n", left,
                       top, plot_w, plot_h);

    const std::string field_label = contour->field == explore::Field::gsnr ? "GSNR (dB)" : "Throughput (Tb/s)";
    out += fmt::format("<text x=\"{}\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">{} "
                       "contours{}</text>\n",
                       left + plot_w / 2, field_label, contour->include_rbs ? ", RBS included" : "");

    constexpr int kTicks = 5;
    for (int t = 0; t <= kTicks; ++t) {
        const double xv = x0 + (x1 - x0) * t / kTicks;
        const double yv = y0 + (y1 - y0) * t / kTicks;
        out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", sx(xv),
                           top + plot_h, top + plot_h + 6);
        out += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" "
                           "text-anchor=\"middle\">{:.4g}</text>\n",
                           sx(xv), top + plot_h + 22, xv);
        out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", left - 6, sy(yv),
                           left);
        out += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" "
                           "text-anchor=\"end\">{:.4g}</text>\n",
                           left - 10, sy(yv) + 4, yv);
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" "
                       "text-anchor=\"middle\">DNANF loss (dB/km)</text>\n",
                       left + plot_w / 2, height - 20);
    out += fmt::format("<text x=\"20\" y=\"{0}\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
                       "transform=\"rotate(-90 20 {0})\">EDFA output power (dBm)</text>\n",
                       top + plot_h / 2);

    std::size_t colour = 0;
    for (const auto& level : contour->contours) {
        const char* stroke = kPalette[colour++ % std::size(kPalette)];
        const double legend_y = top + 20.0 * colour;
        out += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" fill=\"{}\">{} = "
                           "{}</text>\n",
                           left + plot_w + 12, legend_y, stroke, contour->field == explore::Field::gsnr ? "GSNR" : "Tb/s",
                           num(level.level));
        for (const auto& line : level.lines) {
            std::string points;
            for (const auto& p : line) {
                points += fmt::format("{}{:.3f},{:.3f}", points.empty() ? "" : " ", sx(p.loss_db_per_km), sy(p.power_dbm));
            }
            out += fmt::format("<polyline class=\"contour\" data-level=\"{}\" fill=\"none\" stroke=\"{}\" "
                               "stroke-width=\"2\" points=\"{}\"/>\n",
                               num(level.level), stroke, points);
            const auto& mid = line[line.size() / 2];
            out += fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-family=\"sans-serif\" font-size=\"11\" "
                               "fill=\"{}\">{}</text>\n",
                               sx(mid.loss_db_per_km), sy(mid.power_dbm) - 4, stroke, num(level.level));
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hcflink::cli
