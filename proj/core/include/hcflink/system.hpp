#pragma once

#include "hcflink/impairments.hpp"
#include "hcflink/transceiver.hpp"
#include "hcflink/units.hpp"

namespace hcflink {

/// End-to-end cable description for one direction of one fiber.
struct LinkPlan {
    double total_length_km = 6600.0;
    /// Requested span length; the link uses round(total / span) equal spans.
    double span_length_km = 200.0;
    FiberSpec fiber;
    AmplifierSpec amp;
    double band_hz = 5e12;
    double channel_spacing_hz = 75e9;
    double symbol_rate_hz = 73.5e9;
    int n_fibers_per_direction = 26;

    int n_spans() const;
    double effective_span_km() const;

    bool operator==(const LinkPlan&) const = default;
};

void validate(const LinkPlan& plan);

/// A point on the (fiber loss, EDFA output power) plane.
struct OperatingPoint {
    double loss_db_per_km = 0.06;
    double edfa_total_output_dbm = 20.3;

    bool operator==(const OperatingPoint&) const = default;
};

struct PowerFeedSpec {
    double feed_current_a = 1.0;
    double cable_resistance_ohm_per_km = 1.0;
    double repeater_power_w = 180.0;
    double supply_limit_w = 18000.0;

    bool operator==(const PowerFeedSpec&) const = default;
};

void validate(const PowerFeedSpec& feed);

struct PowerFeedReport {
    double cable_w = 0.0;
    double repeaters_w = 0.0;
    double total_w = 0.0;
    bool within_limit = true;

    bool operator==(const PowerFeedReport&) const = default;
};

int channels_in_band(double band_hz, double spacing_hz);

/// Per-channel power entering the fiber, in watts.
double per_channel_launch(double edfa_total_output_dbm, int n_channels, double post_output_loss_db);

/// EDFA gain that makes one span transparent: fiber loss plus the lumped
/// losses on either side of the amplifier.
double transparent_gain_db(const LinkPlan& plan, double loss_db_per_km);

/// Noise budget at `op`. The operating point overrides the plan's fiber loss
/// and EDFA output power.
SnrBudget link_gsnr(const LinkPlan& plan, const OperatingPoint& op, bool include_rbs);

/// Net cable throughput in one direction, Tb/s.
double cable_throughput(const LinkPlan& plan, const TransceiverModel& trx, const OperatingPoint& op,
                        bool include_rbs);

/// In-line (submerged) repeaters; the end amplifiers sit in landing stations.
int repeater_count(double total_length_km, double span_length_km);

PowerFeedReport power_feed(const PowerFeedSpec& feed, double total_length_km, int n_repeaters);

double propagation_latency_ms(double total_length_km, double group_index,
                              const units::PhysicalConstants& constants = {});

/// Finds the Shannon gap that makes the cable carry `target_tbps` at
/// `reference`. Bisection over [0, 15] dB.
double calibrate_trx_gap(const LinkPlan& plan, const OperatingPoint& reference, double target_tbps,
                         bool include_rbs,
                         double max_rate_gbps = std::numeric_limits<double>::infinity());

}  // namespace hcflink
