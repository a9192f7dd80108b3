#include <cmath>
#include <fmt/format.h>

#include "hcflink/errors.hpp"
#include "hcflink/explore.hpp"

namespace hcflink::explore {

void validate(const SolverSettings& settings) {
    if (!std::isfinite(settings.power_low_dbm) || !std::isfinite(settings.power_high_dbm) ||
        !(settings.power_low_dbm < settings.power_high_dbm)) {
        throw DomainError("solver power bracket must satisfy low < high");
    }
    if (!(settings.tolerance_db > 0.0)) {
        throw DomainError("solver tolerance must be positive");
    }
    if (settings.max_iterations < 1) {
        throw DomainError("solver max_iterations must be >= 1");
    }
}

double required_edfa_power(const LinkPlan& plan, const TransceiverModel& trx, double loss_db_per_km,
                           double span_km, double target_tbps, bool include_rbs,
                           const SolverSettings& settings) {
    validate(settings);
    if (!(target_tbps > 0.0)) {
        throw DomainError("required_edfa_power: target must be positive");
    }
    LinkPlan at_span = plan;
    at_span.span_length_km = span_km;
    const auto throughput = [&](double power_dbm) {
        return cable_throughput(at_span, trx, OperatingPoint{loss_db_per_km, power_dbm}, include_rbs);
    };

    double lo = settings.power_low_dbm;
    double hi = settings.power_high_dbm;
    const double at_lo = throughput(lo);
    const double at_hi = throughput(hi);
    if (!(at_lo < target_tbps) || !(at_hi >= target_tbps)) {
        throw InfeasibleError(
            fmt::format("required_edfa_power: {} Tb/s not bracketed by [{}, {}] dBm at {} dB/km, {} km "
                        "(throughput {} .. {} Tb/s)",
                        target_tbps, lo, hi, loss_db_per_km, span_km, at_lo, at_hi),
            at_lo, at_hi);
    }

    for (int iter = 0; iter < settings.max_iterations; ++iter) {
        if (hi - lo <= settings.tolerance_db) {
            return 0.5 * (lo + hi);
        }
        const double mid = 0.5 * (lo + hi);
        if (throughput(mid) < target_tbps) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (hi - lo <= settings.tolerance_db) {
        return 0.5 * (lo + hi);
    }
    throw InfeasibleError(fmt::format("required_edfa_power: bracket still {} dB wide after {} iterations",
                                      hi - lo, settings.max_iterations),
                          at_lo, at_hi);
}

std::vector<SpanCurvePoint> span_length_curve(const LinkPlan& plan, const TransceiverModel& trx,
                                              double loss_db_per_km, double span_min_km,
                                              double span_max_km, int n_points, double target_tbps,
                                              bool include_rbs, const SolverSettings& settings) {
    if (n_points < 1) {
        throw DomainError("span_length_curve: need at least one point");
    }
    if (!(span_min_km > 0.0) || !std::isfinite(span_max_km) ||
        (n_points == 1 ? span_max_km < span_min_km : !(span_min_km < span_max_km))) {
        throw DomainError("span_length_curve: invalid span range");
    }

    std::vector<SpanCurvePoint> curve;
    curve.reserve(static_cast<std::size_t>(n_points));
    for (int k = 0; k < n_points; ++k) {
        SpanCurvePoint point;
        point.requested_span_km =
            n_points == 1 ? span_min_km : span_min_km + (span_max_km - span_min_km) * k / (n_points - 1);
        LinkPlan at_span = plan;
        at_span.span_length_km = point.requested_span_km;
        point.n_spans = at_span.n_spans();
        point.effective_span_km = at_span.effective_span_km();
        try {
            point.required_dbm = required_edfa_power(plan, trx, loss_db_per_km, point.requested_span_km,
                                                     target_tbps, include_rbs, settings);
        } catch (const InfeasibleError& e) {
            point.diagnostic = e.what();
        }
        curve.push_back(std::move(point));
    }
    return curve;
}

double sensitivity_delta(const TransceiverModel& trx, double loss_db_per_km, const Scenario& base,
                         const Scenario& modified, double target_tbps, const SolverSettings& settings) {
    const double before = required_edfa_power(base.plan, trx, loss_db_per_km, base.plan.span_length_km,
                                              target_tbps, base.include_rbs, settings);
    const double after = required_edfa_power(modified.plan, trx, loss_db_per_km,
                                             modified.plan.span_length_km, target_tbps,
                                             modified.include_rbs, settings);
    return after - before;
}

}  // namespace hcflink::explore
