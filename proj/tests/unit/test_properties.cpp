#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "hcflink/explore.hpp"
#include "hcflink/impairments.hpp"
#include "hcflink/system.hpp"
#include "hcflink/units.hpp"

using namespace hcflink;

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 engine(20251019);
    return engine;
}

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

TransceiverModel calibrated(const LinkPlan& plan) {
    return ShannonGapModel{calibrate_trx_gap(plan, OperatingPoint{0.06, 20.3}, 1000.0, false)};
}

}  // namespace

TEST_CASE("property: dB round trip") {
    for (int k = 0; k < 2000; ++k) {
        const double x = uniform(-100.0, 100.0);
        CHECK(std::abs(units::linear_to_db(units::db_to_linear(x)) - x) <= 1e-9);
        const double p = uniform(-60.0, 40.0);
        CHECK(std::abs(units::watt_to_dbm(units::dbm_to_watt(p)) - p) <= 1e-9);
    }
}

TEST_CASE("property: sinhc is >= 1, increasing, and matches its series near zero") {
    double previous = units::sinhc(0.0);
    CHECK(previous == 1.0);
    for (int k = 1; k <= 1000; ++k) {
        const double value = units::sinhc(20.0 * k / 1000.0);
        CHECK(value >= 1.0);
        CHECK(value > previous);
        previous = value;
    }
    for (int k = 0; k <= 1000; ++k) {
        const double x = 1e-3 * k / 1000.0;
        CHECK(std::abs(units::sinhc(x) - (1.0 + x * x / 6.0)) <= 1e-10);
    }
}

TEST_CASE("property: RBS closed form agrees with numerical integration") {
    for (double loss : {0.05, 0.06, 0.07}) {
        for (double span : {100.0, 170.0, 200.0, 230.0}) {
            const int n_spans = 10;
            const double closed = impairments::rbs_power(1e-3, -70.0, n_spans * span, loss * span);
            const double numeric = impairments::rbs_brute_force(1e-3, -70.0, loss, span, n_spans, 0.05);
            CHECK(std::abs(closed - numeric) / closed <= 1e-3);
        }
    }
}

TEST_CASE("property: RBS 1/SNR independent of launch power") {
    const double expected = impairments::rbs_inv_snr(-70.0, 6600.0, 12.0);
    for (int k = 0; k <= 60; ++k) {
        const double launch = std::pow(10.0, -6.0 + 6.0 * k / 60.0);
        CHECK(impairments::rbs_power(launch, -70.0, 6600.0, 12.0) / launch ==
              doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("property: NLI cubic law and ASE inverse linearity") {
    const FiberSpec fiber;
    const AmplifierSpec amp;
    for (int k = 0; k < 200; ++k) {
        const double p = units::dbm_to_watt(uniform(-10.0, 10.0));
        const double span = uniform(50.0, 300.0);
        const auto nli_chain = [&](double launch) {
            const double psd = impairments::gn_nli_psd_per_span(fiber, launch / 75e9, span, 5e12);
            return psd * 73.5e9;  // absolute NLI power per span
        };
        CHECK(nli_chain(2 * p) == doctest::Approx(8 * nli_chain(p)).epsilon(1e-9));
        const double gain = uniform(1.0, 30.0);
        CHECK(impairments::ase_inv_snr(amp, 2 * p, gain, 33, 73.5e9) ==
              doctest::Approx(0.5 * impairments::ase_inv_snr(amp, p, gain, 33, 73.5e9)).epsilon(1e-14));
    }
}

TEST_CASE("property: combine_gsnr is bounded by its weakest component") {
    std::uniform_int_distribution<int> zero_mask(0, 15);
    for (int k = 0; k < 1000; ++k) {
        std::array<double, 4> c{};
        const int mask = zero_mask(rng());
        for (int i = 0; i < 4; ++i) {
            c[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 0.0 : std::pow(10.0, uniform(-9.0, 0.0));
        }
        if (mask == 15) {
            continue;
        }
        const SnrBudget b = impairments::combine_gsnr(c);
        double min_snr = INFINITY;
        int nonzero = 0;
        for (double x : c) {
            if (x > 0.0) {
                min_snr = std::min(min_snr, 1.0 / x);
                ++nonzero;
            }
        }
        CHECK(b.gsnr_linear <= min_snr * (1 + 1e-15));
        if (nonzero == 1) {
            CHECK(b.gsnr_linear == doctest::Approx(min_snr).epsilon(1e-15));
        }
    }
}

TEST_CASE("property: enhancement and IMI monotonicity") {
    double previous_enh = 0.0;
    double previous_imi = -1.0;
    for (int k = 0; k <= 400; ++k) {
        const double enh = impairments::rbs_enhancement(0.1 * k);
        CHECK(enh > previous_enh);
        previous_enh = enh;
        const double imi = impairments::imi_inv_snr(-65.0, 25.0 * k);
        CHECK(imi > previous_imi);
        previous_imi = imi;
    }
}

TEST_CASE("property: throughput nondecreasing in EDFA power") {
    const LinkPlan plan;
    const TransceiverModel trx = calibrated(plan);
    for (double loss : {0.05, 0.06, 0.07}) {
        double previous = 0.0;
        for (int k = 0; k < 50; ++k) {
            const double p = 10.0 + 15.0 * k / 49.0;
            const double t = cable_throughput(plan, trx, OperatingPoint{loss, p}, true);
            CHECK(t >= previous);
            previous = t;
        }
    }
}

TEST_CASE("property: RBS always lowers GSNR") {
    const LinkPlan plan;
    for (int k = 0; k < 300; ++k) {
        const OperatingPoint op{uniform(0.03, 0.1), uniform(5.0, 28.0)};
        CHECK(link_gsnr(plan, op, false).gsnr_linear > link_gsnr(plan, op, true).gsnr_linear);
    }
}

TEST_CASE("property: span partitions cover the link exactly") {
    for (int k = 0; k < 500; ++k) {
        LinkPlan plan;
        plan.total_length_km = uniform(500.0, 12000.0);
        plan.span_length_km = uniform(40.0, 300.0);
        const int repeaters = repeater_count(plan.total_length_km, plan.span_length_km);
        CHECK(std::abs((repeaters + 1) * plan.effective_span_km() - plan.total_length_km) <= 1e-9);
    }
}

TEST_CASE("property: power feed scaling") {
    PowerFeedSpec feed;
    const double per_repeater = power_feed(feed, 0.0, 1).total_w;
    for (int n = 0; n < 120; ++n) {
        CHECK(power_feed(feed, 0.0, n).total_w == doctest::Approx(n * per_repeater));
    }
    const double base = power_feed(feed, 6600.0, 0).cable_w;
    for (double current : {0.5, 1.5, 2.0, 3.0}) {
        feed.feed_current_a = current;
        CHECK(power_feed(feed, 6600.0, 0).cable_w == doctest::Approx(current * current * base));
    }
}

TEST_CASE("property: net rate nondecreasing in GSNR") {
    const TransceiverModel gap = ShannonGapModel{4.6};
    const TransceiverModel table = TabulatedModel{{{5.0, 200.0}, {10.0, 400.0}, {12.0, 400.0}, {20.0, 700.0}}};
    double prev_gap = -1.0;
    double prev_table = -1.0;
    for (int k = 0; k <= 500; ++k) {
        const double g = -5.0 + 30.0 * k / 500.0;
        const double a = channel_net_rate(gap, g, 73.5e9);
        const double b = channel_net_rate(table, g, 73.5e9);
        CHECK(a >= prev_gap);
        CHECK(b >= prev_table);
        prev_gap = a;
        prev_table = b;
    }
}

TEST_CASE("property: bisection lands within tolerance of the crossing") {
    const LinkPlan plan;
    const TransceiverModel trx = calibrated(plan);
    explore::SolverSettings settings;
    for (int k = 0; k < 12; ++k) {
        const double loss = uniform(0.045, 0.075);
        const double target = uniform(700.0, 1100.0);
        const double p = explore::required_edfa_power(plan, trx, loss, 200.0, target, false, settings);
        const double half = settings.tolerance_db / 2;
        CHECK(cable_throughput(plan, trx, OperatingPoint{loss, p - half}, false) <= target);
        CHECK(cable_throughput(plan, trx, OperatingPoint{loss, p + half}, false) >= target);
    }
}

TEST_CASE("property: required power nonincreasing as loss decreases") {
    const LinkPlan plan;
    const TransceiverModel trx = calibrated(plan);
    double previous = -INFINITY;
    for (int k = 0; k <= 12; ++k) {
        const double loss = 0.045 + 0.0025 * k;
        const double p = explore::required_edfa_power(plan, trx, loss, 200.0, 1000.0, true);
        CHECK(p >= previous);
        previous = p;
    }
}

TEST_CASE("property: contour points re-evaluate to their level") {
    const LinkPlan plan;
    const TransceiverModel trx = calibrated(plan);
    const explore::GridSpec spec{0.045, 0.085, 50, 14.0, 25.0, 50};
    const explore::SweepGrid grid = explore::sweep_grid(plan, trx, spec, false);
    for (double level : {800.0, 900.0, 1000.0, 1100.0}) {
        const auto lines = explore::extract_contour(grid, explore::Field::throughput, level);
        REQUIRE_FALSE(lines.empty());
        for (const auto& line : lines) {
            for (const auto& pt : line) {
                const double t = cable_throughput(plan, trx, OperatingPoint{pt.loss_db_per_km, pt.power_dbm}, false);
                CHECK(std::abs(t - level) <= 0.01 * level);
            }
        }
    }
    for (double level : {14.0, 15.0, 16.0}) {
        for (const auto& line : explore::extract_contour(grid, explore::Field::gsnr, level)) {
            for (const auto& pt : line) {
                const double g = link_gsnr(plan, OperatingPoint{pt.loss_db_per_km, pt.power_dbm}, false).gsnr_db;
                CHECK(std::abs(g - level) <= 0.01 * level);
            }
        }
    }
}

TEST_CASE("property: sweep is order independent") {
    const LinkPlan plan;
    const TransceiverModel trx = calibrated(plan);
    const explore::GridSpec spec{0.045, 0.085, 13, 14.0, 25.0, 17};
    const explore::SweepGrid a = explore::sweep_grid(plan, trx, spec, true, 1);
    for (unsigned threads : {2u, 3u, 8u}) {
        CHECK(explore::sweep_grid(plan, trx, spec, true, threads) == a);
    }
    // Cell-by-cell evaluation in reverse order.
    for (std::size_t i = spec.loss_steps; i-- > 0;) {
        for (std::size_t j = spec.power_steps; j-- > 0;) {
            const OperatingPoint op{a.losses[i], a.powers[j]};
            CHECK(cable_throughput(plan, trx, op, true) == a.throughput_tbps[a.index(i, j)]);
        }
    }
}
