#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcflink/system.hpp"

namespace hcflink::explore {

struct GridSpec {
    double loss_min = 0.045;
    double loss_max = 0.085;
    int loss_steps = 81;
    double power_min = 14.0;
    double power_max = 25.0;
    int power_steps = 111;

    bool operator==(const GridSpec&) const = default;
};

void validate(const GridSpec& grid);

/// Evaluated (loss, power) lattice. Cell arrays are row-major: index
/// i * powers.size() + j holds (losses[i], powers[j]).
struct SweepGrid {
    std::vector<double> losses;
    std::vector<double> powers;
    std::vector<double> gsnr_db;
    std::vector<double> throughput_tbps;

    std::size_t index(std::size_t loss_i, std::size_t power_j) const { return loss_i * powers.size() + power_j; }

    bool operator==(const SweepGrid&) const = default;
};

enum class Field { gsnr, throughput };

std::string to_string(Field field);
Field field_from_string(const std::string& name);

struct SolverSettings {
    double power_low_dbm = 5.0;
    double power_high_dbm = 30.0;
    double tolerance_db = 0.01;
    int max_iterations = 100;

    bool operator==(const SolverSettings&) const = default;
};

void validate(const SolverSettings& settings);

/// A link configuration together with whether backscatter enters the budget.
struct Scenario {
    LinkPlan plan;
    bool include_rbs = false;
};

/// Evaluates every lattice point. `threads` == 0 picks the hardware
/// concurrency; the result does not depend on the thread count.
SweepGrid sweep_grid(const LinkPlan& plan, const TransceiverModel& trx, const GridSpec& grid,
                     bool include_rbs, unsigned threads = 0);

struct ContourPoint {
    double loss_db_per_km;
    double power_dbm;
    bool operator==(const ContourPoint&) const = default;
};

using Polyline = std::vector<ContourPoint>;

/// Marching-squares iso-lines of `field` at `level`, in (loss, power)
/// coordinates. Closed loops repeat their first point at the end.
std::vector<Polyline> extract_contour(const SweepGrid& grid, Field field, double level);

/// EDFA output power (dBm) at which the cable reaches `target_tbps`.
double required_edfa_power(const LinkPlan& plan, const TransceiverModel& trx, double loss_db_per_km,
                           double span_km, double target_tbps, bool include_rbs,
                           const SolverSettings& settings = {});

struct SpanCurvePoint {
    double requested_span_km = 0.0;
    double effective_span_km = 0.0;
    int n_spans = 0;
    std::optional<double> required_dbm;
    /// Set when the solve failed; empty otherwise.
    std::string diagnostic;

    bool operator==(const SpanCurvePoint&) const = default;
};

std::vector<SpanCurvePoint> span_length_curve(const LinkPlan& plan, const TransceiverModel& trx,
                                              double loss_db_per_km, double span_min_km,
                                              double span_max_km, int n_points, double target_tbps,
                                              bool include_rbs, const SolverSettings& settings = {});

/// Change in required EDFA power (dB) when moving from `base` to `modified`
/// at the given fiber loss. Each scenario is solved at its own span length.
double sensitivity_delta(const TransceiverModel& trx, double loss_db_per_km, const Scenario& base,
                         const Scenario& modified, double target_tbps,
                         const SolverSettings& settings = {});

}  // namespace hcflink::explore
