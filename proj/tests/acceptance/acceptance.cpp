// Acceptance checks for the link-budget engine. Prints one PASS/FAIL line per
// criterion and exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "hcflink/explore.hpp"
#include "hcflink/impairments.hpp"
#include "hcflink/system.hpp"
#include "hcflink/units.hpp"

#ifdef HCFLINK_WITH_CLI
#include "cli/commands.hpp"
#include "cli/report.hpp"
#endif

using namespace hcflink;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Checklist {
public:
    void run(int id, const std::string& title, const std::function<Outcome()>& body) {
        Outcome outcome;
        try {
            outcome = body();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures_ += outcome.pass ? 0 : 1;
        fmt::print("{} criterion {:>2}: {} | {}\n", outcome.pass ? "PASS" : "FAIL", id, title, outcome.detail);
        std::fflush(stdout);
    }
    int failures() const { return failures_; }

private:
    int failures_ = 0;
};

bool within(double value, double expected, double tol) { return std::abs(value - expected) <= tol; }

TransceiverModel calibrated(const LinkPlan& plan) {
    return ShannonGapModel{calibrate_trx_gap(plan, OperatingPoint{0.06, 20.3}, 1000.0, false)};
}

LinkPlan with_span(LinkPlan plan, double span_km) {
    plan.span_length_km = span_km;
    return plan;
}

double gsnr_rbs_db(double loss_db_per_km) {
    const LinkPlan plan;
    const double span_loss = loss_db_per_km * plan.effective_span_km();
    return component_snr_db(impairments::rbs_inv_snr(plan.fiber.backscatter_db_per_km, plan.total_length_km, span_loss));
}

// Accumulates a property verdict with the first failing case for the report.
struct PropertyTally {
    int cases = 0;
    std::string first_failure;
    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok && first_failure.empty()) first_failure = what;
    }
};

}  // namespace

int main() {
    const LinkPlan plan;
    const TransceiverModel trx = calibrated(plan);
    const explore::SolverSettings solver;
    Checklist list;

    list.run(1, "RBS-limited GSNR at 0.05 / 0.07 dB/km", [] {
        const double low = gsnr_rbs_db(0.05);
        const double high = gsnr_rbs_db(0.07);
        return Outcome{within(low, 28.48, 0.02) && within(high, 25.90, 0.02),
                       fmt::format("{:.4f} dB (want 28.48 +/- 0.02), {:.4f} dB (want 25.90 +/- 0.02)", low, high)};
    });

    list.run(2, "closed-form RBS power vs numerical integration", [] {
        double worst = 0.0;
        for (double loss : {0.05, 0.06, 0.07}) {
            for (double span : {100.0, 170.0, 200.0, 230.0}) {
                const int n = static_cast<int>(std::lround(6600.0 / span));
                const double total = n * span;
                const double launch = 1e-3;
                const double closed = impairments::rbs_power(launch, -70.0, total, loss * span);
                const double brute = impairments::rbs_brute_force(launch, -70.0, loss, span, n, 0.05);
                worst = std::max(worst, std::abs(closed - brute) / closed);
            }
        }
        return Outcome{worst <= 1e-3, fmt::format("worst relative difference {:.3e} (limit 1e-3)", worst)};
    });

    list.run(3, "power feed budget", [] {
        const PowerFeedReport r = power_feed(PowerFeedSpec{}, 6600.0, 32);
        const bool ok = r.cable_w == 6600.0 && r.repeaters_w == 5760.0 && r.total_w == 12360.0 &&
                        r.total_w < 13000.0 && r.within_limit;
        return Outcome{ok, fmt::format("cable {} W, repeaters {} W, total {} W, within 18 kW: {}", r.cable_w,
                                       r.repeaters_w, r.total_w, r.within_limit)};
    });

    list.run(4, "repeater and span count for 6600 km / 200 km", [&] {
        const int repeaters = repeater_count(6600.0, 200.0);
        const int spans = plan.n_spans();
        return Outcome{repeaters == 32 && spans == 33, fmt::format("{} repeaters, {} spans", repeaters, spans)};
    });

    list.run(5, "propagation latency", [] {
        const double hollow = propagation_latency_ms(6600.0, 1.0003);
        const double solid = propagation_latency_ms(6600.0, 1.468);
        return Outcome{within(hollow, 22.0, 0.1) && within(solid, 32.3, 0.5),
                       fmt::format("hollow core {:.3f} ms (22.0 +/- 0.1), solid core {:.3f} ms (32.3 +/- 0.5)",
                                   hollow, solid)};
    });

    list.run(6, "reference GSNR at 0.06 dB/km, 20.3 dBm", [&] {
        const OperatingPoint ref{0.06, 20.3};
        const SnrBudget off = link_gsnr(plan, ref, false);
        const SnrBudget on = link_gsnr(plan, ref, true);
        const double nli = component_snr_db(off.inv_snr_nli);
        const bool ok = off.gsnr_db >= 15.5 && off.gsnr_db <= 17.0 && on.gsnr_db >= 15.2 && on.gsnr_db <= 16.7 &&
                        off.gsnr_db > 14.0 && on.gsnr_db > 14.0 && nli > 60.0;
        return Outcome{ok, fmt::format("without RBS {:.3f} dB, with RBS {:.3f} dB, NLI-only SNR {:.2f} dB",
                                       off.gsnr_db, on.gsnr_db, nli)};
    });

    list.run(7, "calibrated transceiver cross-check at 0.05 / 0.07 dB/km", [&] {
        const double low = explore::required_edfa_power(plan, trx, 0.05, 200.0, 1000.0, false, solver);
        const double high = explore::required_edfa_power(plan, trx, 0.07, 200.0, 1000.0, false, solver);
        return Outcome{within(low, 18.0, 0.4) && within(high, 22.5, 0.4),
                       fmt::format("{:.3f} dBm (18.0 +/- 0.4), {:.3f} dBm (22.5 +/- 0.4), gap {:.4f} dB", low, high,
                                   std::get<ShannonGapModel>(trx).gap_db)};
    });

    list.run(8, "IMI -65 -> -60 dB/km power penalty", [&] {
        LinkPlan worse = plan;
        worse.fiber.imi_db_per_km = -60.0;
        const double delta = explore::sensitivity_delta(trx, 0.06, {plan, false}, {worse, false}, 1000.0, solver);
        return Outcome{within(delta, 0.9, 0.3), fmt::format("+{:.3f} dB (0.9 +/- 0.3)", delta)};
    });

    list.run(9, "RBS power penalty at 0.05 / 0.07 dB/km", [&] {
        const double low = explore::sensitivity_delta(trx, 0.05, {plan, false}, {plan, true}, 1000.0, solver);
        const double high = explore::sensitivity_delta(trx, 0.07, {plan, false}, {plan, true}, 1000.0, solver);
        return Outcome{within(low, 0.3, 0.15) && within(high, 0.5, 0.15),
                       fmt::format("+{:.3f} dB (0.3 +/- 0.15), +{:.3f} dB (0.5 +/- 0.15)", low, high)};
    });

    list.run(10, "span length trade-off at 0.06 dB/km", [&] {
        const auto required = [&](double span) {
            return explore::required_edfa_power(with_span(plan, span), trx, 0.06, span, 1000.0, false, solver);
        };
        const double base = required(200.0);
        const double shorter = required(170.0) - base;
        // Walk outwards in 1 km steps and interpolate the first +1 dB crossing.
        double crossing = std::numeric_limits<double>::quiet_NaN();
        double prev_span = 200.0;
        double prev_delta = 0.0;
        for (double span = 201.0; span <= 260.0; span += 1.0) {
            const double delta = required(span) - base;
            if (delta >= 1.0) {
                crossing = prev_span + (1.0 - prev_delta) / (delta - prev_delta) * (span - prev_span);
                break;
            }
            prev_span = span;
            prev_delta = delta;
        }
        const bool ok = within(shorter, -1.0, 0.4) && crossing >= 215.0 && crossing <= 235.0;
        return Outcome{ok, fmt::format("170 km: {:+.3f} dB (-1.0 +/- 0.4), +1 dB crossing at {:.1f} km ([215, 235])",
                                       shorter, crossing)};
    });

    list.run(11, "throughput with EDFA power 2 dB below reference", [&] {
        const double tbps = cable_throughput(plan, trx, OperatingPoint{0.06, 18.3}, false);
        return Outcome{tbps >= 850.0 && tbps <= 950.0, fmt::format("{:.1f} Tb/s ([850, 950])", tbps)};
    });

    list.run(12, "property suites", [&] {
        std::mt19937_64 rng(20251019);
        auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
        PropertyTally t;
        for (int k = 0; k < 200; ++k) {
            // NLI PSD is cubic in launch PSD.
            const double psd = uniform(1e-15, 1e-13);
            const double span = uniform(50.0, 300.0);
            const double g1 = impairments::gn_nli_psd_per_span(plan.fiber, psd, span, plan.band_hz);
            const double g2 = impairments::gn_nli_psd_per_span(plan.fiber, 2.0 * psd, span, plan.band_hz);
            t.check(std::abs(g2 / g1 - 8.0) < 1e-9, "NLI cubic scaling");

            // ASE 1/SNR is inversely proportional to output power.
            const double p = uniform(1e-5, 1e-2);
            const double gain = uniform(5.0, 30.0);
            const double a1 = impairments::ase_inv_snr(plan.amp, p, gain, 33, plan.symbol_rate_hz);
            const double a2 = impairments::ase_inv_snr(plan.amp, 3.0 * p, gain, 33, plan.symbol_rate_hz);
            t.check(std::abs(a1 / a2 - 3.0) < 1e-9, "ASE inverse linearity");

            // Backscatter SNR does not depend on launch power.
            const double loss_db = uniform(0.0, 20.0);
            const double total = uniform(100.0, 10000.0);
            const double r1 = impairments::rbs_power(p, -70.0, total, loss_db) / p;
            const double r2 = impairments::rbs_power(5.0 * p, -70.0, total, loss_db) / (5.0 * p);
            t.check(std::abs(r1 / r2 - 1.0) < 1e-12, "RBS launch-power independence");

            // Combined GSNR sits below every component and above their sum.
            const std::vector<double> parts{uniform(1e-4, 1e-1), uniform(1e-9, 1e-2), uniform(1e-5, 1e-2),
                                            uniform(1e-5, 1e-2)};
            const SnrBudget b = impairments::combine_gsnr(parts);
            double sum = 0.0;
            for (double x : parts) {
                t.check(b.gsnr_linear <= 1.0 / x, "combine_gsnr upper bound");
                sum += x;
            }
            t.check(std::abs(b.gsnr_linear * sum - 1.0) < 1e-12, "combine_gsnr harmonic sum");

            // sinhc is increasing for x > 0 and tends to 1 at 0.
            const double x = uniform(1e-6, 5.0);
            t.check(units::sinhc(x * 1.01) > units::sinhc(x), "sinhc monotonicity");
        }
        t.check(std::abs(units::sinhc(1e-9) - 1.0) < 1e-15 && units::sinhc(0.0) == 1.0, "sinhc limit");

        // The returned midpoint is within half a tolerance of the root.
        for (double loss : {0.05, 0.055, 0.06, 0.065, 0.07}) {
            const double p = explore::required_edfa_power(plan, trx, loss, 200.0, 1000.0, true, solver);
            const double half = 0.5 * solver.tolerance_db;
            const double below = cable_throughput(plan, trx, OperatingPoint{loss, p - half}, true);
            const double above = cable_throughput(plan, trx, OperatingPoint{loss, p + half}, true);
            t.check(below <= 1000.0 && above >= 1000.0, fmt::format("bisection at {}", loss));
        }

        // Grid evaluation is independent of the thread count.
        const explore::GridSpec grid{0.045, 0.085, 9, 14.0, 25.0, 12};
        t.check(explore::sweep_grid(plan, trx, grid, true, 1) == explore::sweep_grid(plan, trx, grid, true, 4),
                "sweep determinism");

#ifdef HCFLINK_WITH_CLI
        cli::RunConfig config;
        config.sweep.grid = grid;
        config.sweep.span_points = 5;
        for (auto cmd : {cli::Command::budget, cli::Command::contour, cli::Command::span_curve, cli::Command::rbs,
                         cli::Command::powerfeed, cli::Command::latency}) {
            const cli::Report a = cli::run_command(cmd, config);
            const cli::Report b = cli::run_command(cmd, config);
            t.check(cli::render_csv(a) == cli::render_csv(b) && cli::render_json(a) == cli::render_json(b),
                    "CSV/JSON determinism for " + cli::command_name(a.payload));
        }
        const std::string scope = "core and CLI";
#else
        const std::string scope = "core only; CSV/JSON determinism lives in the cli test";
#endif
        const bool ok = t.first_failure.empty();
        return Outcome{ok, fmt::format("{} checks ({}){}", t.cases, scope,
                                       ok ? "" : ", first failure: " + t.first_failure)};
    });

    fmt::print("{} of 12 criteria passed\n", 12 - list.failures());
    return list.failures() == 0 ? 0 : 1;
}
