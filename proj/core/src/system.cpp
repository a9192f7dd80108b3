#include "hcflink/system.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hcflink/errors.hpp"

namespace hcflink {
namespace {

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw DomainError(message);
    }
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

int LinkPlan::n_spans() const {
    require(positive(total_length_km), "link.total_length_km must be positive");
    require(positive(span_length_km), "span.length_km must be positive");
    const auto n = std::lround(total_length_km / span_length_km);
    require(n >= 1, "span.length_km yields no spans over link.total_length_km");
    return static_cast<int>(n);
}

double LinkPlan::effective_span_km() const { return total_length_km / n_spans(); }

void validate(const LinkPlan& plan) {
    require(positive(plan.total_length_km), "link.total_length_km must be positive");
    require(positive(plan.span_length_km), "span.length_km must be positive");
    require(plan.span_length_km <= plan.total_length_km,
            "span.length_km must not exceed link.total_length_km");
    require(positive(plan.band_hz), "link.band_hz must be positive");
    require(positive(plan.channel_spacing_hz), "link.channel_spacing_hz must be positive");
    require(positive(plan.symbol_rate_hz), "link.symbol_rate_hz must be positive");
    require(plan.channel_spacing_hz >= plan.symbol_rate_hz,
            "link.channel_spacing_hz must be >= link.symbol_rate_hz");
    require(plan.band_hz >= plan.channel_spacing_hz, "link.band_hz must hold at least one channel");
    require(plan.n_fibers_per_direction >= 0, "link.n_fibers_per_direction must be nonnegative");
    validate(plan.fiber);
    validate(plan.amp);
    (void)plan.n_spans();
}

void validate(const PowerFeedSpec& feed) {
    require(positive(feed.feed_current_a), "powerfeed.feed_current_a must be positive");
    require(positive(feed.cable_resistance_ohm_per_km),
            "powerfeed.cable_resistance_ohm_per_km must be positive");
    require(positive(feed.repeater_power_w), "powerfeed.repeater_power_w must be positive");
    require(positive(feed.supply_limit_w), "powerfeed.supply_limit_w must be positive");
}

int channels_in_band(double band_hz, double spacing_hz) {
    require(positive(band_hz) && positive(spacing_hz), "channels_in_band: band and spacing must be positive");
    // Guard against 75e9 * 66.999999... style representation error.
    return static_cast<int>(std::floor(band_hz / spacing_hz * (1.0 + 1e-12)));
}

double per_channel_launch(double edfa_total_output_dbm, int n_channels, double post_output_loss_db) {
    require(n_channels >= 1, "per_channel_launch: need at least one channel");
    return units::dbm_to_watt(edfa_total_output_dbm - units::linear_to_db(n_channels) -
                              post_output_loss_db);
}

double transparent_gain_db(const LinkPlan& plan, double loss_db_per_km) {
    return loss_db_per_km * plan.effective_span_km() + plan.amp.pre_input_loss_db +
           plan.amp.post_output_loss_db;
}

SnrBudget link_gsnr(const LinkPlan& plan, const OperatingPoint& op, bool include_rbs) {
    require(positive(op.loss_db_per_km), "operating point loss must be positive");
    require(std::isfinite(op.edfa_total_output_dbm), "operating point EDFA power must be finite");
    LinkPlan at_point = plan;
    at_point.fiber.loss_db_per_km = op.loss_db_per_km;
    at_point.amp.total_output_power_dbm = op.edfa_total_output_dbm;
    validate(at_point);

    const int n_spans = at_point.n_spans();
    const double span_km = at_point.effective_span_km();
    const int n_channels = channels_in_band(at_point.band_hz, at_point.channel_spacing_hz);
    const double gain_db = transparent_gain_db(at_point, op.loss_db_per_km);

    const double edfa_out_w = per_channel_launch(op.edfa_total_output_dbm, n_channels, 0.0);
    const double launch_w =
        per_channel_launch(op.edfa_total_output_dbm, n_channels, at_point.amp.post_output_loss_db);

    const double ase = impairments::ase_inv_snr(at_point.amp, edfa_out_w, gain_db, n_spans,
                                                at_point.symbol_rate_hz);
    const double nli_psd = impairments::gn_nli_psd_per_span(
        at_point.fiber, launch_w / at_point.channel_spacing_hz, span_km, at_point.band_hz);
    const double nli = impairments::nli_inv_snr(nli_psd, n_spans, at_point.symbol_rate_hz, launch_w);
    const double imi = impairments::imi_inv_snr(at_point.fiber.imi_db_per_km, at_point.total_length_km);
    const double rbs = include_rbs
                           ? impairments::rbs_inv_snr(at_point.fiber.backscatter_db_per_km,
                                                      at_point.total_length_km, op.loss_db_per_km * span_km)
                           : 0.0;

    const std::array components{ase, nli, imi, rbs};
    return impairments::combine_gsnr(components);
}

double cable_throughput(const LinkPlan& plan, const TransceiverModel& trx, const OperatingPoint& op,
                        bool include_rbs) {
    const SnrBudget budget = link_gsnr(plan, op, include_rbs);
    const int n_channels = channels_in_band(plan.band_hz, plan.channel_spacing_hz);
    const double rate_gbps = channel_net_rate(trx, budget.gsnr_db, plan.symbol_rate_hz);
    return plan.n_fibers_per_direction * n_channels * rate_gbps * 1e-3;
}

int repeater_count(double total_length_km, double span_length_km) {
    require(positive(total_length_km) && positive(span_length_km),
            "repeater_count: lengths must be positive");
    require(span_length_km <= total_length_km, "repeater_count: span longer than the link");
    return static_cast<int>(std::lround(total_length_km / span_length_km)) - 1;
}

PowerFeedReport power_feed(const PowerFeedSpec& feed, double total_length_km, int n_repeaters) {
    require(std::isfinite(total_length_km) && total_length_km >= 0.0,
            "power_feed: length must be nonnegative");
    require(n_repeaters >= 0, "power_feed: repeater count must be nonnegative");
    PowerFeedReport report;
    report.cable_w = feed.feed_current_a * feed.feed_current_a * feed.cable_resistance_ohm_per_km *
                     total_length_km;
    report.repeaters_w = n_repeaters * feed.repeater_power_w;
    report.total_w = report.cable_w + report.repeaters_w;
    report.within_limit = report.total_w <= feed.supply_limit_w;
    return report;
}

double propagation_latency_ms(double total_length_km, double group_index,
                              const units::PhysicalConstants& constants) {
    require(std::isfinite(total_length_km) && total_length_km >= 0.0,
            "propagation_latency_ms: length must be nonnegative");
    require(std::isfinite(group_index) && group_index >= 1.0,
            "propagation_latency_ms: group index must be >= 1");
    return total_length_km * group_index / constants.light_speed_km_s * 1e3;
}

double calibrate_trx_gap(const LinkPlan& plan, const OperatingPoint& reference, double target_tbps,
                         bool include_rbs, double max_rate_gbps) {
    require(positive(target_tbps), "calibrate_trx_gap: target must be positive");
    constexpr double kMaxGapDb = 15.0;
    const SnrBudget budget = link_gsnr(plan, reference, include_rbs);
    const int n_channels = channels_in_band(plan.band_hz, plan.channel_spacing_hz);
    const auto throughput_at = [&](double gap_db) {
        const TransceiverModel trx = ShannonGapModel{gap_db, max_rate_gbps};
        return plan.n_fibers_per_direction * n_channels *
               channel_net_rate(trx, budget.gsnr_db, plan.symbol_rate_hz) * 1e-3;
    };

    const double best = throughput_at(0.0);
    const double worst = throughput_at(kMaxGapDb);
    if (std::abs(best - target_tbps) <= 1e-12 * target_tbps) {
        return 0.0;
    }
    if (target_tbps > best) {
        throw InfeasibleError("calibrate_trx_gap: target exceeds zero-gap Shannon throughput", best, worst);
    }
    if (target_tbps < worst) {
        throw InfeasibleError("calibrate_trx_gap: target needs a gap above 15 dB", best, worst);
    }

    double lo = 0.0;
    double hi = kMaxGapDb;
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (throughput_at(mid) > target_tbps) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace hcflink
